"""Finite presentations of the surface braid group, its pure subgroup,
and their link-homotopy quotients, with bounded enumeration of relators.

Four presentations are built, all parameterized by strand count n and
genus g:

* pure braids over the genus-g surface (tags PR1..PR8, generators
  a_{i,r} and T_{i,j});
* the full braid group (tags R1..R6, generators sigma_i and a_{1,r});
* the string-link quotient of the pure group (PR1..PR8 plus the sampled
  commutation family LH1, generators a_{i,r} and t_{i,j});
* the generalized string-link quotient of the full group (R1..R6 plus
  LH, generators sigma_i and a_{1,r}).

Genus 0 encodes the disk: only the relator families that survive there
(R1/R2, PR4/PR5, and the LH families for the quotients) are emitted.

The LH families are infinite (one relator per conjugating word h), so
they are enumerated through a deterministic bounded sampler; everything
else is exhausted exactly once per index tuple.  Relators are stored as
single words LHS * RHS^-1 so that "dies in the target" is a uniform
check downstream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .words import (
    Family,
    GroupContext,
    Letter,
    Word,
    WordError,
    big_t,
    cap_a,
    commutator,
    expand_abbreviations,
    generator_alphabet,
    sigma,
    small_t,
    surf_a,
    _big_t_sigma_letters,
    _cap_a_letters,
    _small_t_sigma_letters,
)

DEFAULT_H_LENGTH = 4
DEFAULT_SAMPLES_PER_PAIR = 64


# ---------------------------------------------------------------------
# Derived-word formulas
# ---------------------------------------------------------------------

def expand_big_t(i: int, j: int, ctx: GroupContext) -> Word:
    """The band word T_{i,j} = s_i .. s_{j-2} s_{j-1}^2 s_{j-2} .. s_i."""
    if ctx.family not in (Family.BN, Family.HAT_BN):
        raise WordError("sigma-expansion needs a braid context")
    if not 1 <= i < j <= ctx.n:
        raise WordError(f"need 1 <= i < j <= {ctx.n}, got ({i}, {j})")
    return Word(ctx, _big_t_sigma_letters(i, j))


def expand_small_t(j: int, ctx: GroupContext) -> Word:
    """t_{1,j} = s_1 .. s_{j-2} s_{j-1}^2 s_{j-2}^-1 .. s_1^-1."""
    if ctx.family not in (Family.BN, Family.HAT_BN):
        raise WordError("sigma-expansion needs a braid context")
    if not 2 <= j <= ctx.n:
        raise WordError(f"need 2 <= j <= {ctx.n}, got {j}")
    return Word(ctx, _small_t_sigma_letters(1, j))


def expand_cap_a(j: int, s: int, ctx: GroupContext) -> Word:
    """The handle word A_{j,s}.

    In the pure families this is a_{j,1}..a_{j,s-1} a_{j,s+1}^-1..a_{j,2g}^-1;
    the braid families only carry strand 2 and flank the strand-1 word
    with sigma_1^-1 on both sides.
    """
    if ctx.g < 1:
        raise WordError("A-words need genus >= 1")
    if not 1 <= s <= 2 * ctx.g:
        raise WordError(f"need 1 <= s <= {2 * ctx.g}, got {s}")
    if ctx.family in (Family.BN, Family.HAT_BN):
        if j != 2:
            raise WordError("braid contexts only carry A_{2,s}")
        if ctx.n < 2:
            raise WordError("A_{2,s} needs at least two strands")
    elif ctx.family in (Family.PBN, Family.HAT_PBN):
        if not 1 <= j <= ctx.n:
            raise WordError(f"need 1 <= j <= {ctx.n}, got {j}")
    else:
        raise WordError("A-words live in braid or pure-braid contexts")
    return Word(ctx, _cap_a_letters(ctx, j, s))


# ---------------------------------------------------------------------
# Presentation data
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class RelatorFamily:
    """One displayed relation, with its admissible index tuples.

    For finite families `emit(*indices)` yields the relator.  A sampled
    family (`sampled=True`) additionally takes a conjugating word h:
    `emit(*indices, h)`.
    """

    tag: str
    index_domain: tuple[tuple[int, ...], ...]
    emit: Callable[..., Word]
    sampled: bool = False

    def __repr__(self):
        return f"RelatorFamily({self.tag}, {len(self.index_domain)} tuples)"


class RelatorInstance(NamedTuple):
    tag: str
    indices: tuple[int, ...]
    conjugator: Word | None   # the sampled h, for LH relators
    word: Word


@dataclass(frozen=True)
class Presentation:
    context: GroupContext
    generators: tuple[Letter, ...]
    families: tuple[RelatorFamily, ...]

    def family(self, tag: str) -> RelatorFamily:
        for fam in self.families:
            if fam.tag == tag:
                return fam
        raise KeyError(tag)

    @property
    def needs_sampler(self) -> bool:
        return any(f.sampled and f.index_domain for f in self.families)

    def relators(self, lh: LHSampler | None = None
                 ) -> Iterator[RelatorInstance]:
        return enumerate_relators(self, lh)


@dataclass(frozen=True)
class LHSampler:
    """Deterministic bounded sampler for the infinite LH families.

    For the pair (i, j) it draws freely reduced conjugators h of length
    1..max_h_length over the strand-i alphabet (the 2g handle letters of
    strand i plus t_{i,i+1}..t_{i,n}), skipping any h whose commutation
    relator would be freely trivial and deduplicating on the reduced
    conjugate h t h^-1.  Equal seeds give identical streams.
    """

    max_h_length: int = DEFAULT_H_LENGTH
    samples_per_pair: int = DEFAULT_SAMPLES_PER_PAIR
    seed: int = 0

    def strand_alphabet(self, ctx: GroupContext, i: int) -> tuple[Letter, ...]:
        letters = [surf_a(i, r) for r in range(1, 2 * ctx.g + 1)]
        letters += [small_t(i, k) for k in range(i + 1, ctx.n + 1)]
        return tuple(letters)

    def conjugators(self, ctx: GroupContext, i: int, j: int) -> list[Word]:
        alphabet = self.strand_alphabet(ctx, i)
        if not alphabet:
            return []
        signed = [l for a in alphabet for l in (a, a.inv)]
        t_word = Word(ctx, [small_t(i, j)])
        rng = random.Random(
            f"lh|{self.seed}|{ctx.family.value}|{ctx.n}|{ctx.g}|{i}|{j}")
        out: list[Word] = []
        seen: set[Word] = set()
        attempts = 0
        budget = max(256, 40 * self.samples_per_pair)
        while len(out) < self.samples_per_pair and attempts < budget:
            attempts += 1
            length = rng.randint(1, self.max_h_length)
            letters = [rng.choice(signed)]
            for _ in range(length - 1):
                prev_inv = letters[-1].inv
                letters.append(rng.choice(
                    [c for c in signed if c != prev_inv]))
            h = Word(ctx, letters)
            conj = h * t_word * h.inverse()
            if conj == t_word or conj in seen:
                continue
            seen.add(conj)
            out.append(h)
        return out


def enumerate_relators(p: Presentation, lh: LHSampler | None = None
                       ) -> Iterator[RelatorInstance]:
    """Deterministic stream of relators: finite families exhausted once,
    sampled families emitted for every sampled conjugator."""
    for fam in p.families:
        if not fam.sampled:
            for idx in fam.index_domain:
                yield RelatorInstance(fam.tag, idx, None, fam.emit(*idx))
            continue
        if not fam.index_domain:
            continue
        if lh is None:
            raise WordError(f"family {fam.tag} needs an LHSampler")
        for idx in fam.index_domain:
            i = idx[0]
            for h in lh.conjugators(p.context, i, idx[1]):
                yield RelatorInstance(fam.tag, idx, h, fam.emit(*idx, h))


# ---------------------------------------------------------------------
# Relator emitters
# ---------------------------------------------------------------------

def _w(ctx: GroupContext, letters) -> Word:
    return Word(ctx, letters)


def _big_t_word(ctx: GroupContext, i: int, j: int) -> Word:
    # The defining product for T_{i,j} is empty at j = i (and j = i is the
    # boundary index PR1/PR3/PR5/PR8 reach), so T_{i,i} is the empty word.
    if i == j:
        return Word.identity(ctx)
    return _w(ctx, [big_t(i, j)])


def _a_run(i: int, lo: int, hi: int, sign: int = 1) -> list[Letter]:
    # a_{i,lo} .. a_{i,hi}, all with the given sign, ascending.
    return [surf_a(i, r, sign) for r in range(lo, hi + 1)]


def _a_run_desc(i: int, hi: int, lo: int, sign: int = 1) -> list[Letter]:
    # a_{i,hi} .. a_{i,lo}, descending.
    return [surf_a(i, r, sign) for r in range(hi, lo - 1, -1)]


def _pure_emitters(ctx: GroupContext):
    n, twog = ctx.n, 2 * ctx.g

    def pr1() -> Word:
        lhs = _w(ctx, _a_run(n, 1, twog, -1) + _a_run(n, 1, twog))
        rhs = Word.identity(ctx)
        for i in range(1, n):
            rhs = rhs * _big_t_word(ctx, i, n - 1).inverse() \
                      * _big_t_word(ctx, i, n)
        return lhs * rhs.inverse()

    def pr2(i, j, r, s) -> Word:
        return _w(ctx, [surf_a(i, r), cap_a(j, s),
                        surf_a(i, r, -1), cap_a(j, s, -1)])

    def pr3(i, j, r) -> Word:
        lhs = _w(ctx, _a_run(i, 1, r) + [cap_a(j, r)]
                 + _a_run_desc(i, r, 1, -1) + [cap_a(j, r, -1)])
        rhs = _big_t_word(ctx, i, j) * _big_t_word(ctx, i, j - 1).inverse()
        return lhs * rhs.inverse()

    def pr4(i, j, k, l) -> Word:
        return _w(ctx, [big_t(i, j), big_t(k, l),
                        big_t(i, j, -1), big_t(k, l, -1)])

    def pr5(i, j, k, l) -> Word:
        lhs = _w(ctx, [big_t(k, l), big_t(i, j), big_t(k, l, -1)])
        rhs = (_big_t_word(ctx, i, k - 1)
               * _big_t_word(ctx, i, k).inverse()
               * _big_t_word(ctx, i, j)
               * _big_t_word(ctx, i, l).inverse()
               * _big_t_word(ctx, i, k)
               * _big_t_word(ctx, i, k - 1).inverse()
               * _big_t_word(ctx, i, l))
        return lhs * rhs.inverse()

    def pr6(i, j, k, r) -> Word:
        return _w(ctx, [surf_a(i, r), big_t(j, k),
                        surf_a(i, r, -1), big_t(j, k, -1)])

    def pr7(j, i, k, r) -> Word:
        v = _w(ctx, _a_run_desc(j, twog, 1, -1) + [big_t(j, k)]
               + _a_run_desc(j, twog, 1))
        a = _w(ctx, [surf_a(i, r)])
        return a * v * a.inverse() * v.inverse()

    def pr8(j) -> Word:
        rhs = Word.identity(ctx)
        for i in range(1, j):
            rhs = (rhs
                   * _w(ctx, _a_run_desc(i, twog, 1, -1))
                   * _big_t_word(ctx, i, j - 1)
                   * _big_t_word(ctx, i, j).inverse()
                   * _w(ctx, _a_run(i, 1, twog)))
        rhs = rhs * _w(ctx, _a_run(j, 1, twog) + _a_run(j, 1, twog, -1))
        return _big_t_word(ctx, j, n) * rhs.inverse()

    def lh1(i, j, h: Word) -> Word:
        t = _w(ctx, [small_t(i, j)])
        return commutator(t, h * t * h.inverse())

    return pr1, pr2, pr3, pr4, pr5, pr6, pr7, pr8, lh1


def _braid_emitters(ctx: GroupContext):
    n, twog = ctx.n, 2 * ctx.g

    def r1(i, j) -> Word:
        return _w(ctx, [sigma(i), sigma(j), sigma(i, -1), sigma(j, -1)])

    def r2(i) -> Word:
        return _w(ctx, [sigma(i), sigma(i + 1), sigma(i),
                        sigma(i + 1, -1), sigma(i, -1), sigma(i + 1, -1)])

    def r3() -> Word:
        lhs = _w(ctx, _a_run(1, 1, twog) + _a_run(1, 1, twog, -1))
        rhs = (expand_big_t(1, n, ctx) if n >= 2
               else Word.identity(ctx))
        return lhs * rhs.inverse()

    def r4(r, s) -> Word:
        return _w(ctx, [surf_a(1, r), cap_a(2, s),
                        surf_a(1, r, -1), cap_a(2, s, -1)])

    def r5(r) -> Word:
        lhs = _w(ctx, _a_run(1, 1, r) + [cap_a(2, r)])
        rhs = _w(ctx, [sigma(1), sigma(1), cap_a(2, r)] + _a_run(1, 1, r))
        return lhs * rhs.inverse()

    def r6(r, i) -> Word:
        return _w(ctx, [surf_a(1, r), sigma(i),
                        surf_a(1, r, -1), sigma(i, -1)])

    def lh(i, j, h: Word) -> Word:
        t = _w(ctx, [small_t(1, j)])
        return commutator(t, h * t * h.inverse())

    return r1, r2, r3, r4, r5, r6, lh


# ---------------------------------------------------------------------
# Index domains and assembly
# ---------------------------------------------------------------------

def _pure_families(ctx: GroupContext, hat: bool) -> tuple[RelatorFamily, ...]:
    n, twog = ctx.n, 2 * ctx.g
    pr1, pr2, pr3, pr4, pr5, pr6, pr7, pr8, lh1 = _pure_emitters(ctx)

    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    quads = [(i, j, k, l)
             for i in range(1, n + 1) for j in range(1, n + 1)
             for k in range(1, n + 1) for l in range(1, n + 1)]

    pr4_dom = tuple(q for q in quads
                    if (q[0] < q[1] < q[2] < q[3] <= n)
                    or (q[0] < q[2] < q[3] <= q[1] <= n))
    pr5_dom = tuple((i, j, k, l) for (i, j, k, l) in quads
                    if i < k <= j < l <= n)

    families = []
    if hat:
        families.append(RelatorFamily("LH1", tuple(pairs), lh1, sampled=True))

    if ctx.is_surface:
        # the quotient presentation restricts PR2's s and PR3's r to 2g-1
        s_max = twog - 1 if hat else twog
        families += [
            RelatorFamily("PR1", ((),), pr1),
            RelatorFamily("PR2", tuple(
                (i, j, r, s) for (i, j) in pairs
                for r in range(1, twog + 1)
                for s in range(1, s_max + 1) if r != s), pr2),
            RelatorFamily("PR3", tuple(
                (i, j, r) for (i, j) in pairs
                for r in range(1, s_max + 1)), pr3),
            RelatorFamily("PR4", pr4_dom, pr4),
            RelatorFamily("PR5", pr5_dom, pr5),
            RelatorFamily("PR6", tuple(
                (i, j, k, r)
                for i in range(1, n + 1)
                for (j, k) in pairs
                if (i < j < k) or (j < k < i)
                for r in range(1, twog + 1)), pr6),
            RelatorFamily("PR7", tuple(
                (j, i, k, r)
                for j in range(1, n + 1)
                for i in range(j + 1, n + 1)
                for k in range(i, n + 1)
                for r in range(1, twog + 1)), pr7),
            RelatorFamily("PR8", tuple((j,) for j in range(1, n)), pr8),
        ]
    else:
        # Disk: the handle families are vacuous and PR1/PR8 encode the
        # surface wall, which the disk does not satisfy.
        families += [
            RelatorFamily("PR4", pr4_dom, pr4),
            RelatorFamily("PR5", pr5_dom, pr5),
        ]
    return tuple(families)


def _braid_families(ctx: GroupContext, hat: bool) -> tuple[RelatorFamily, ...]:
    n, twog = ctx.n, 2 * ctx.g
    r1, r2, r3, r4, r5, r6, lh = _braid_emitters(ctx)

    families = []
    if hat:
        families.append(RelatorFamily(
            "LH", tuple((1, j) for j in range(2, n + 1)), lh, sampled=True))

    families += [
        RelatorFamily("R1", tuple(
            (i, j) for i in range(1, n - 1)
            for j in range(i + 2, n)), r1),
        RelatorFamily("R2", tuple((i,) for i in range(1, n - 1)), r2),
    ]
    if ctx.is_surface:
        s_max = twog - 1 if hat else twog
        families += [
            RelatorFamily("R3", ((),), r3),
            RelatorFamily("R4", tuple(
                (r, s) for r in range(1, twog + 1)
                for s in range(1, s_max + 1)
                if r != s) if n >= 2 else (), r4),
            RelatorFamily("R5", tuple(
                (r,) for r in range(1, s_max + 1)) if n >= 2 else (), r5),
            RelatorFamily("R6", tuple(
                (r, i) for r in range(1, twog + 1)
                for i in range(2, n)), r6),
        ]
    return tuple(families)


def build_presentation(family: Family, n: int, g: int) -> Presentation:
    """Presentation of the requested group at parameters (n, g).

    g >= 1 gives the closed-surface presentations; g = 0 gives the disk
    versions (band generators for the pure families, Artin relations for
    the braid families, LH families for the quotients).
    """
    if n < 1:
        raise WordError(f"need n >= 1, got {n}")
    if family not in (Family.PBN, Family.HAT_PBN, Family.BN, Family.HAT_BN):
        raise WordError(f"no presentation for family {family.value}")
    ctx = GroupContext(family, n, g)
    if family in (Family.PBN, Family.HAT_PBN):
        families = _pure_families(ctx, hat=family is Family.HAT_PBN)
    else:
        families = _braid_families(ctx, hat=family is Family.HAT_BN)
    return Presentation(ctx, generator_alphabet(ctx), families)


def validate_expanded(instance: RelatorInstance) -> Word:
    """Expand a relator's derived symbols into the ambient generator
    alphabet, revalidating every letter; returns the expanded word."""
    return expand_abbreviations(instance.word)
