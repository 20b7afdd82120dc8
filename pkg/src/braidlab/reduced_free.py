"""The reduced free group and link-homotopy triviality of disk braids.

The reduced free group RF(k) is the quotient of the free group on
x_1..x_k by the relations making each generator commute with all of its
conjugates.  It embeds in the ring of integer polynomials in
noncommuting variables X_1..X_k truncated by "any monomial with a
repeated variable is zero", via the Magnus map

    x_i -> 1 + X_i,    x_i^-1 -> 1 - X_i        (exact: X_i^2 = 0),

and a word is trivial in RF(k) iff its expansion is the constant 1.
Coefficients are exact integers; monomials are sequences of pairwise
distinct indices, so a series has at most sum_d k!/(k-d)! terms.

On top of this sits the reduced Artin action of disk braids on RF(n):
sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i and fixes the
rest, letters acting left to right.  A pure disk braid is trivial up to
link-homotopy iff its action fixes every generator of RF(n), which makes
the action the decision procedure for membership in the normal closure
of the commutators [t_{i,j}, h t_{i,j} h^-1].

Image words of long braids grow exponentially under substitution, so the
triviality test folds the action directly at the series level: braid
images are conjugates g x_j g^-1, whose series S satisfy (S - 1)^2 = 0,
and one crossing only touches two strands, so each letter costs four
ring multiplications.  The fold runs on int64 vectors with a hard
overflow bound and falls back to exact big-integer arithmetic if the
bound would be crossed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations

import numpy as np

from .pi1 import Verdict
from .homs import permutation_of
from .words import (
    Family,
    GroupContext,
    Kind,
    Letter,
    Word,
    WordError,
    big_t,
    expand_abbreviations,
    free_x,
    recontext,
)


class MultilinearSeries:
    """Integer series over repeated-index-free monomials in X_1..X_k.

    `terms` maps index tuples (pairwise distinct, possibly empty) to
    nonzero integer coefficients; the empty tuple is the constant term.
    Coefficients are Python ints, so arithmetic is exact at any size.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: dict[tuple[int, ...], int]):
        self.rank = rank
        self.terms = {k: v for k, v in terms.items() if v != 0}

    @classmethod
    def one(cls, rank: int) -> MultilinearSeries:
        return cls(rank, {(): 1})

    @classmethod
    def generator(cls, rank: int, i: int, sign: int = 1
                  ) -> MultilinearSeries:
        if not 1 <= i <= rank:
            raise WordError(f"generator index {i} out of 1..{rank}")
        return cls(rank, {(): 1, (i,): sign})

    @property
    def is_one(self) -> bool:
        return self.terms == {(): 1}

    def __eq__(self, other):
        return (isinstance(other, MultilinearSeries)
                and self.rank == other.rank and self.terms == other.terms)

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __mul__(self, other: MultilinearSeries) -> MultilinearSeries:
        if self.rank != other.rank:
            raise WordError("series rank mismatch")
        out: dict[tuple[int, ...], int] = {}
        for left, cl in self.terms.items():
            left_set = set(left)
            for right, cr in other.terms.items():
                if left_set.intersection(right):
                    continue
                key = left + right
                value = out.get(key, 0) + cl * cr
                if value:
                    out[key] = value
                elif key in out:
                    del out[key]
        return MultilinearSeries(self.rank, out)

    def mul_letter(self, i: int, sign: int) -> MultilinearSeries:
        """Right-multiply by 1 + sign*X_i in O(#terms)."""
        out = dict(self.terms)
        for key, c in self.terms.items():
            if i in key:
                continue
            k2 = key + (i,)
            value = out.get(k2, 0) + sign * c
            if value:
                out[k2] = value
            elif k2 in out:
                del out[k2]
        return MultilinearSeries(self.rank, out)

    def __repr__(self):
        if not self.terms:
            return "MultilinearSeries(0)"
        bits = []
        for key in sorted(self.terms, key=lambda k: (len(k), k)):
            c = self.terms[key]
            mono = "".join(f"X{i}" for i in key) or "1"
            bits.append(f"{c:+d}*{mono}")
        return f"MultilinearSeries({' '.join(bits)})"


def magnus_expand(w: Word) -> MultilinearSeries:
    """Magnus image of a free-group word in the truncated ring."""
    if w.context.family is not Family.FREE:
        raise WordError("Magnus expansion takes free-group words")
    rank = w.context.n
    series = MultilinearSeries.one(rank)
    for letter in w.letters:
        series = series.mul_letter(letter.a, letter.sign)
    return series


def rf_is_trivial(w: Word) -> Verdict:
    """Exact triviality in the reduced free group."""
    return (Verdict.TRIVIAL if magnus_expand(w).is_one
            else Verdict.NONTRIVIAL)


# ---------------------------------------------------------------------
# Reduced Artin action
# ---------------------------------------------------------------------

def _act_sigma(images: list[list[Letter]], i: int, sign: int) -> None:
    # Substitute the elementary action of sigma_i^sign into each image
    # word, reducing as we go.  Positive: x_i -> x_i x_{i+1} x_i^-1,
    # x_{i+1} -> x_i; negative: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i
    # x_{i+1}.
    if sign == 1:
        table = {
            (i, 1): [free_x(i), free_x(i + 1), free_x(i, -1)],
            (i, -1): [free_x(i), free_x(i + 1, -1), free_x(i, -1)],
            (i + 1, 1): [free_x(i)],
            (i + 1, -1): [free_x(i, -1)],
        }
    else:
        table = {
            (i, 1): [free_x(i + 1)],
            (i, -1): [free_x(i + 1, -1)],
            (i + 1, 1): [free_x(i + 1, -1), free_x(i), free_x(i + 1)],
            (i + 1, -1): [free_x(i + 1, -1), free_x(i, -1), free_x(i + 1)],
        }
    for idx, word in enumerate(images):
        out: list[Letter] = []
        for letter in word:
            for image_letter in table.get((letter.a, letter.sign), (letter,)):
                if out and out[-1] == image_letter.inv:
                    out.pop()
                else:
                    out.append(image_letter)
        images[idx] = out


@dataclass(frozen=True)
class ReducedEndo:
    """Endomorphism of RF(rank) induced by a braid word.

    Images are kept as free words and only expanded (lazily, cached)
    when compared; suitable for short braids, where substitution is
    cheap.  The triviality oracle below uses the series-level fold
    instead, which agrees with this on its whole domain.
    """

    rank: int
    images: tuple[Word, ...]

    @classmethod
    def identity(cls, rank: int) -> ReducedEndo:
        ctx = GroupContext.free(rank)
        return cls(rank, tuple(Word(ctx, [free_x(i)])
                               for i in range(1, rank + 1)))

    def image_of(self, i: int) -> Word:
        return self.images[i - 1]

    @cached_property
    def expansions(self) -> tuple[MultilinearSeries, ...]:
        return tuple(magnus_expand(w) for w in self.images)

    @property
    def fixes_all_generators(self) -> bool:
        return all(series == MultilinearSeries.generator(self.rank, i)
                   for i, series in enumerate(self.expansions, start=1))


def _as_sigma_word(w: Word) -> Word:
    """Rewrite a disk braid-like word into plain sigma letters."""
    ctx = w.context
    if ctx.g != 0:
        raise WordError("the reduced Artin action is a disk procedure; "
                        "surface letters have no image")
    expanded = expand_abbreviations(w)
    braid_ctx = GroupContext.bn(ctx.n, 0)
    return expand_abbreviations(recontext(expanded, braid_ctx))


def artin_act(w: Word, n: int | None = None) -> ReducedEndo:
    """Endomorphism of RF(n) induced by a disk braid word.

    Band and string-link symbols are expanded to sigma words first;
    letters act left to right.
    """
    sigma_word = _as_sigma_word(w)
    if n is None:
        n = w.context.n
    elif n != w.context.n:
        raise WordError(f"word has {w.context.n} strands, asked for {n}")
    ctx = GroupContext.free(n)
    images: list[list[Letter]] = [[free_x(i)] for i in range(1, n + 1)]
    for letter in sigma_word.letters:
        _act_sigma(images, letter.a, letter.sign)
    return ReducedEndo(n, tuple(Word(ctx, img) for img in images))


# -- series-level fold -------------------------------------------------

class _OverflowGuard(Exception):
    pass


@lru_cache(maxsize=None)
class _SeriesBasis:
    """Monomial basis of the truncated ring plus its structure tensor."""

    def __init__(self, rank: int):
        self.rank = rank
        monos = [()]
        for d in range(1, rank + 1):
            monos += list(permutations(range(1, rank + 1), d))
        self.monomials = monos
        self.index = {m: i for i, m in enumerate(monos)}
        self.size = len(monos)
        left, right, target = [], [], []
        for m1 in monos:
            s1 = set(m1)
            for m2 in monos:
                if s1.intersection(m2):
                    continue
                left.append(self.index[m1])
                right.append(self.index[m2])
                target.append(self.index[m1 + m2])
        self.left = np.array(left, dtype=np.int64)
        self.right = np.array(right, dtype=np.int64)
        self.target = np.array(target, dtype=np.int64)
        counts = np.bincount(self.target, minlength=self.size)
        # |out[k]| <= pair_bound * max|a| * max|b| is a hard bound.
        self.pair_bound = int(counts.max())
        self.safe_limit = (2 ** 62) // max(self.pair_bound, 1)

    def one(self) -> np.ndarray:
        vec = np.zeros(self.size, dtype=np.int64)
        vec[0] = 1
        return vec

    def generator(self, i: int, sign: int = 1) -> np.ndarray:
        vec = self.one()
        vec[self.index[(i,)]] = sign
        return vec

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        amax = int(np.abs(a).max())
        bmax = int(np.abs(b).max())
        if amax and bmax and amax > self.safe_limit // max(bmax, 1):
            raise _OverflowGuard
        out = np.zeros(self.size, dtype=np.int64)
        np.add.at(out, self.target, a[self.left] * b[self.right])
        return out

    def to_series(self, vec: np.ndarray) -> MultilinearSeries:
        return MultilinearSeries(self.rank, {
            m: int(c) for m, c in zip(self.monomials, vec) if c})


def _fold_int64(sigma_letters, n: int, basis: _SeriesBasis):
    fwd = [basis.generator(i) for i in range(1, n + 1)]
    bwd = [basis.generator(i, -1) for i in range(1, n + 1)]
    # Letters act left to right, so fold the suffix action right to left:
    # extending by a letter substitutes its short images into the suffix.
    for letter in reversed(sigma_letters):
        m = letter.a - 1
        a, ainv, b, binv = fwd[m], bwd[m], fwd[m + 1], bwd[m + 1]
        if letter.sign == 1:
            fwd[m] = basis.mul(basis.mul(a, b), ainv)
            bwd[m] = basis.mul(basis.mul(a, binv), ainv)
            fwd[m + 1], bwd[m + 1] = a, ainv
        else:
            fwd[m], bwd[m] = b, binv
            fwd[m + 1] = basis.mul(basis.mul(binv, a), b)
            bwd[m + 1] = basis.mul(basis.mul(binv, ainv), b)
    return fwd


def _fold_exact(sigma_letters, n: int):
    fwd = [MultilinearSeries.generator(n, i) for i in range(1, n + 1)]
    bwd = [MultilinearSeries.generator(n, i, -1) for i in range(1, n + 1)]
    for letter in reversed(sigma_letters):
        m = letter.a - 1
        a, ainv, b, binv = fwd[m], bwd[m], fwd[m + 1], bwd[m + 1]
        if letter.sign == 1:
            fwd[m] = a * b * ainv
            bwd[m] = a * binv * ainv
            fwd[m + 1], bwd[m + 1] = a, ainv
        else:
            fwd[m], bwd[m] = b, binv
            fwd[m + 1] = binv * a * b
            bwd[m + 1] = binv * ainv * b
    return fwd


def artin_series(w: Word) -> tuple[MultilinearSeries, ...]:
    """Expansions of the generator images under the action of `w`,
    computed without forming the image words."""
    sigma_word = _as_sigma_word(w)
    n = w.context.n
    basis = _SeriesBasis(n)
    try:
        folded = _fold_int64(sigma_word.letters, n, basis)
        return tuple(basis.to_series(vec) for vec in folded)
    except _OverflowGuard:
        return tuple(_fold_exact(sigma_word.letters, n))


def lh_trivial_disk(w: Word) -> Verdict:
    """Link-homotopy triviality of a pure disk braid word.

    Decides membership in the subgroup of link-homotopically trivial
    braids: trivial iff the reduced Artin action fixes every generator
    of RF(n), i.e. every image expansion equals 1 + X_i.
    """
    if not permutation_of(w).is_identity:
        raise WordError("link-homotopy triviality needs a pure word "
                        "(identity strand permutation)")
    n = w.context.n
    for i, series in enumerate(artin_series(w), start=1):
        if series != MultilinearSeries.generator(n, i):
            return Verdict.NONTRIVIAL
    return Verdict.TRIVIAL


# ---------------------------------------------------------------------
# Sampling link-homotopically trivial pure braids
# ---------------------------------------------------------------------

def _small_t_disk_word(ctx: GroupContext, i: int, j: int) -> Word:
    # t_{i,j} spelled in band generators: T_{i,j} T_{i,j-1}^-1.
    letters = [big_t(i, j)]
    if j - 1 > i:
        letters.append(big_t(i, j - 1, -1))
    return Word(ctx, letters)


def _random_reduced(ctx: GroupContext, alphabet, length: int,
                    rng: random.Random) -> Word:
    signed = [l for a in alphabet for l in (a, a.inv)]
    if not signed or length <= 0:
        return Word.identity(ctx)
    letters = [rng.choice(signed)]
    for _ in range(length - 1):
        prev_inv = letters[-1].inv
        letters.append(rng.choice([c for c in signed if c != prev_inv]))
    return Word(ctx, letters)


def sample_hn_element(n: int, seed: int, size: int) -> Word:
    """A guaranteed link-homotopically trivial pure disk braid.

    Product of at most `size` conjugated commutators
    c [t_{i,j}, h t_{i,j} h^-1] c^-1 with h drawn from the strand-i
    family t_{i,i+1}..t_{i,n} (spelled in band generators, which that
    family's subgroup contains) and c from all band generators.
    Deterministic in (n, seed, size).
    """
    if n < 2:
        raise WordError(f"need n >= 2, got {n}")
    ctx = GroupContext.pbn(n, 0)
    rng = random.Random(f"hn|{n}|{seed}|{size}")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    all_bands = [big_t(i, j) for (i, j) in pairs]
    out = Word.identity(ctx)
    for _ in range(size):
        i, j = rng.choice(pairs)
        t_word = _small_t_disk_word(ctx, i, j)
        strand_alphabet = [big_t(i, k) for k in range(i + 1, n + 1)]
        h = _random_reduced(ctx, strand_alphabet, rng.randint(1, 3), rng)
        c = _random_reduced(ctx, all_bands, rng.randint(0, 3), rng)
        factor = t_word * (h * t_word * h.inverse()) \
            * t_word.inverse() * (h * t_word.inverse() * h.inverse())
        out = out * factor.conjugated_by(c)
    return out
