"""Letters, group contexts, and reduced words.

This module is the shared word calculus for braid groups over closed
orientable surfaces, their pure subgroups, their link-homotopy quotients,
free groups, and surface fundamental groups.  Everything downstream
(presentations, homomorphisms, decision procedures) consumes the types
defined here.

Words are immutable: every operation returns a new `Word`, and words are
freely reduced on construction, so `u * v` is always in canonical form.
A letter is a single signed generator occurrence; which letters are legal
depends on the ambient `GroupContext`.

Text grammar (UTF-8, whitespace-separated tokens)::

    token  := gen exp?
    gen    := "s"INT | "a"INT"."INT | "t"INT"."INT | "T"INT"."INT
            | "A"INT"."INT | "x"INT
    exp    := "^" SIGNED_INT
    sugar  := "[" word "," word "]"        (commutator u v u^-1 v^-1)

In a surface fundamental-group context the single-index form "a"INT is
used instead of "a"INT"."INT.  `format_word` emits the same grammar with
"^-1" for inverses and no sugar, so format o parse is the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

MAX_EXPONENT = 10**6


class WordError(ValueError):
    """A word, letter, or context constraint was violated."""


class ParseError(WordError):
    """Syntax or validation error in word text, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MissingImageError(WordError):
    """A substitution table has no image for a generator."""


class Family(Enum):
    """Which group a context describes.  Genus 0 encodes the disk."""

    BN = "bn"            # braid group
    PBN = "pbn"          # pure braid group
    HAT_BN = "hatbn"     # braid group up to link-homotopy
    HAT_PBN = "hatpbn"   # pure braids / string links up to link-homotopy
    FREE = "free"        # free group of given rank
    PI1 = "pi1"          # fundamental group of the closed surface
    SYMMETRIC = "sym"    # symmetric group (carries no letters)


_BRAID_FAMILIES = (Family.BN, Family.HAT_BN)
_PURE_FAMILIES = (Family.PBN, Family.HAT_PBN)


@dataclass(frozen=True, slots=True)
class GroupContext:
    """Ambient group for a word: family plus the parameters (n, g).

    `n` is the strand count, or the rank for the free family.  `g` is the
    genus of the surface; g = 0 means the disk and is only legal for the
    braid-like families.
    """

    family: Family
    n: int
    g: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise WordError(f"n must be nonnegative, got {self.n}")
        if self.g < 0:
            raise WordError(f"genus must be nonnegative, got {self.g}")
        if self.family is Family.PI1 and self.g < 1:
            raise WordError("surface fundamental group needs genus >= 1")
        if self.family in (Family.FREE, Family.SYMMETRIC) and self.g != 0:
            raise WordError(f"{self.family.value} context carries no genus")

    # -- convenience constructors -------------------------------------
    @classmethod
    def bn(cls, n: int, g: int = 0) -> GroupContext:
        return cls(Family.BN, n, g)

    @classmethod
    def pbn(cls, n: int, g: int = 0) -> GroupContext:
        return cls(Family.PBN, n, g)

    @classmethod
    def hat_bn(cls, n: int, g: int = 0) -> GroupContext:
        return cls(Family.HAT_BN, n, g)

    @classmethod
    def hat_pbn(cls, n: int, g: int = 0) -> GroupContext:
        return cls(Family.HAT_PBN, n, g)

    @classmethod
    def free(cls, rank: int) -> GroupContext:
        return cls(Family.FREE, rank)

    @classmethod
    def pi1(cls, g: int) -> GroupContext:
        return cls(Family.PI1, 1, g)

    @property
    def is_disk(self) -> bool:
        return self.family in _BRAID_FAMILIES + _PURE_FAMILIES and self.g == 0

    @property
    def is_surface(self) -> bool:
        return self.g >= 1


class Kind(Enum):
    """Generator species.  The value is the letter prefix in the grammar."""

    SIGMA = "s"      # braid generator sigma_i
    SURF_A = "a"     # surface handle generator a_{i,r} (a_r in pi1)
    SMALL_T = "t"    # string-link generator t_{i,j}
    BIG_T = "T"      # pure braid band generator T_{i,j}
    CAP_A = "A"      # derived handle word A_{j,s}
    FREE_X = "x"     # free generator x_i


_SINGLE_INDEX = (Kind.SIGMA, Kind.FREE_X)


@dataclass(frozen=True, slots=True)
class Letter:
    """One signed generator occurrence.  `b` is 0 for single-index kinds."""

    kind: Kind
    a: int
    b: int = 0
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise WordError(f"letter sign must be +1 or -1, got {self.sign}")
        if self.a < 1:
            raise WordError(f"letter index must be >= 1, got {self.a}")
        if self.kind in _SINGLE_INDEX:
            if self.b != 0:
                raise WordError(f"{self.kind.value}-letter takes one index")
        elif self.b < 1:
            raise WordError(f"{self.kind.value}-letter needs two indices")

    @property
    def inv(self) -> Letter:
        return Letter(self.kind, self.a, self.b, -self.sign)

    @property
    def positive(self) -> Letter:
        return self if self.sign == 1 else self.inv

    def __repr__(self):
        return f"Letter({format_letter(self)!r})"


def sigma(i: int, sign: int = 1) -> Letter:
    return Letter(Kind.SIGMA, i, 0, sign)


def surf_a(i: int, r: int, sign: int = 1) -> Letter:
    return Letter(Kind.SURF_A, i, r, sign)


def small_t(i: int, j: int, sign: int = 1) -> Letter:
    return Letter(Kind.SMALL_T, i, j, sign)


def big_t(i: int, j: int, sign: int = 1) -> Letter:
    return Letter(Kind.BIG_T, i, j, sign)


def cap_a(j: int, s: int, sign: int = 1) -> Letter:
    return Letter(Kind.CAP_A, j, s, sign)


def free_x(i: int, sign: int = 1) -> Letter:
    return Letter(Kind.FREE_X, i, sign=sign)


def check_letter(letter: Letter, ctx: GroupContext) -> None:
    """Raise WordError unless `letter` is meaningful in `ctx`.

    Braid-like contexts admit the derived symbols (T, t, A) that their
    presentations abbreviate with, not just the raw generator kinds;
    `expand_abbreviations` rewrites those into generators.
    """
    kind, n, g = letter.kind, ctx.n, ctx.g
    family = ctx.family

    def fail(reason: str):
        raise WordError(
            f"letter {format_letter(letter)} invalid in "
            f"{family.value}(n={n}, g={g}): {reason}"
        )

    if family is Family.FREE:
        if kind is not Kind.FREE_X:
            fail("free context admits only x-letters")
        if letter.a > n:
            fail(f"rank is {n}")
        return
    if family is Family.PI1:
        if kind is not Kind.SURF_A or letter.a != 1:
            fail("pi1 context admits only handle letters a_r")
        if letter.b > 2 * g:
            fail(f"handle index at most {2 * g}")
        return
    if family is Family.SYMMETRIC:
        fail("symmetric context carries no letters")

    if family in _BRAID_FAMILIES:
        if kind is Kind.SIGMA:
            if not 1 <= letter.a <= n - 1:
                fail(f"sigma index in 1..{n - 1}")
        elif kind is Kind.SURF_A:
            if g == 0:
                fail("no handle letters on the disk")
            if letter.a != 1 or not 1 <= letter.b <= 2 * g:
                fail("braid contexts only carry a_{1,r}, r <= 2g")
        elif kind is Kind.SMALL_T:
            if not 1 <= letter.a < letter.b <= n:
                fail(f"need 1 <= i < j <= {n}")
        elif kind is Kind.BIG_T:
            if not 1 <= letter.a < letter.b <= n:
                fail(f"need 1 <= i < j <= {n}")
        elif kind is Kind.CAP_A:
            if g == 0:
                fail("no A-words on the disk")
            if letter.a != 2 or not 1 <= letter.b <= 2 * g:
                fail("braid contexts only carry A_{2,s}, s <= 2g")
        else:
            fail("kind not admitted")
        return

    if family in _PURE_FAMILIES:
        if kind is Kind.SURF_A:
            if g == 0:
                fail("no handle letters on the disk")
            if not (1 <= letter.a <= n and 1 <= letter.b <= 2 * g):
                fail(f"need strand <= {n} and handle <= {2 * g}")
        elif kind is Kind.BIG_T:
            if not 1 <= letter.a < letter.b <= n:
                fail(f"need 1 <= i < j <= {n}")
        elif kind is Kind.SMALL_T:
            if family is Family.PBN:
                fail("t-letters live in the link-homotopy quotient")
            if not 1 <= letter.a < letter.b <= n:
                fail(f"need 1 <= i < j <= {n}")
        elif kind is Kind.CAP_A:
            if g == 0:
                fail("no A-words on the disk")
            if not (1 <= letter.a <= n and 1 <= letter.b <= 2 * g):
                fail(f"need strand <= {n} and handle <= {2 * g}")
        else:
            fail("kind not admitted")
        return

    raise AssertionError(f"unhandled family {family}")


def generator_alphabet(ctx: GroupContext) -> tuple[Letter, ...]:
    """Positive generator letters of the presentation attached to `ctx`."""
    n, g = ctx.n, ctx.g
    if ctx.family is Family.FREE:
        return tuple(free_x(i) for i in range(1, n + 1))
    if ctx.family is Family.PI1:
        return tuple(surf_a(1, r) for r in range(1, 2 * g + 1))
    if ctx.family in _BRAID_FAMILIES:
        gens = [sigma(i) for i in range(1, n)]
        gens += [surf_a(1, r) for r in range(1, 2 * g + 1)]
        return tuple(gens)
    if ctx.family in _PURE_FAMILIES:
        gens = [surf_a(i, r) for i in range(1, n + 1)
                for r in range(1, 2 * g + 1)]
        if ctx.family is Family.HAT_PBN:
            gens += [small_t(i, j) for i in range(1, n + 1)
                     for j in range(i + 1, n + 1)]
        else:
            gens += [big_t(i, j) for i in range(1, n + 1)
                     for j in range(i + 1, n + 1)]
        return tuple(gens)
    return ()


def admissible_letters(ctx: GroupContext) -> tuple[Letter, ...]:
    """Every positive letter `check_letter` accepts in `ctx`, including
    the derived symbols; used to build letterwise homomorphism tables."""
    n, g = ctx.n, ctx.g
    letters: list[Letter] = []
    if ctx.family in _BRAID_FAMILIES:
        letters += [sigma(i) for i in range(1, n)]
        letters += [surf_a(1, r) for r in range(1, 2 * g + 1)]
        letters += [small_t(i, j) for i in range(1, n + 1)
                    for j in range(i + 1, n + 1)]
        letters += [big_t(i, j) for i in range(1, n + 1)
                    for j in range(i + 1, n + 1)]
        if g >= 1 and n >= 2:
            letters += [cap_a(2, s) for s in range(1, 2 * g + 1)]
    elif ctx.family in _PURE_FAMILIES:
        letters += [surf_a(i, r) for i in range(1, n + 1)
                    for r in range(1, 2 * g + 1)]
        if ctx.family is Family.HAT_PBN:
            letters += [small_t(i, j) for i in range(1, n + 1)
                        for j in range(i + 1, n + 1)]
        letters += [big_t(i, j) for i in range(1, n + 1)
                    for j in range(i + 1, n + 1)]
        letters += [cap_a(j, s) for j in range(1, n + 1)
                    for s in range(1, 2 * g + 1)]
    else:
        letters += list(generator_alphabet(ctx))
    return tuple(letters)


def _reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if stack and stack[-1] == letter.inv:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


class Word:
    """A freely reduced word over the alphabet of its context.

    Immutable value type; `u * v` concatenates and reduces, `~w` inverts,
    `w ** k` powers.  Construction validates every letter against the
    context and reduces eagerly.
    """

    __slots__ = ("context", "letters")

    def __init__(self, context: GroupContext, letters: Iterable[Letter] = ()):
        letters = tuple(letters)
        for letter in letters:
            check_letter(letter, context)
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "letters", _reduce_letters(letters))

    @classmethod
    def _trusted(cls, context: GroupContext,
                 reduced: tuple[Letter, ...]) -> Word:
        # Internal: letters already validated and reduced.
        w = object.__new__(cls)
        object.__setattr__(w, "context", context)
        object.__setattr__(w, "letters", reduced)
        return w

    def __setattr__(self, *_):
        raise AttributeError("Word is immutable")

    @classmethod
    def identity(cls, context: GroupContext) -> Word:
        return cls._trusted(context, ())

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other):
        return (isinstance(other, Word)
                and self.context == other.context
                and self.letters == other.letters)

    def __hash__(self):
        return hash((self.context, self.letters))

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if self.context != other.context:
            raise WordError(
                f"context mismatch: {self.context} vs {other.context}")
        return Word._trusted(
            self.context, _reduce_letters(self.letters + other.letters))

    def inverse(self) -> Word:
        return Word._trusted(
            self.context,
            tuple(letter.inv for letter in reversed(self.letters)))

    def __invert__(self) -> Word:
        return self.inverse()

    def __pow__(self, k: int) -> Word:
        base = self if k >= 0 else self.inverse()
        out = Word.identity(self.context)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugated_by(self, c: Word) -> Word:
        """c * self * c^-1."""
        return c * self * c.inverse()

    def __repr__(self):
        return f"Word({format_word(self)!r})"


def free_reduce(w: Word) -> Word:
    """Freely reduced form of `w`.  Words are kept reduced, so this is
    the identity; it exists as the named operation and for raw input."""
    return Word._trusted(w.context, _reduce_letters(w.letters))


def concat(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return w.inverse()


def commutator(u: Word, v: Word) -> Word:
    return u * v * u.inverse() * v.inverse()


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split `w` as u * core * u^-1 with `core` cyclically reduced.

    Returns (core, u).
    """
    letters = w.letters
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == letters[j].inv:
        i += 1
        j -= 1
    core = Word._trusted(w.context, letters[i:j + 1])
    conjugator = Word._trusted(w.context, letters[:i])
    return core, conjugator


def recontext(w: Word, ctx: GroupContext) -> Word:
    """The same letter sequence read in another context (revalidates)."""
    return Word(ctx, w.letters)


def substitute(w: Word, images: Mapping[Letter, Word],
               target: GroupContext) -> Word:
    """Homomorphic image of `w` under a table of generator images.

    `images` maps positive letters to target words; inverse letters use
    the inverse image.  Raises MissingImageError on an uncovered letter.
    """
    parts: list[Letter] = []
    for letter in w.letters:
        image = images.get(letter.positive)
        if image is None:
            raise MissingImageError(
                f"no image for generator {format_letter(letter.positive)}")
        if letter.sign == 1:
            parts.extend(image.letters)
        else:
            parts.extend(l.inv for l in reversed(image.letters))
    return Word(target, parts)


# ---------------------------------------------------------------------
# Derived-symbol expansion
# ---------------------------------------------------------------------

def _ascending_a(i: int, lo: int, hi: int, sign: int = 1) -> list[Letter]:
    return [surf_a(i, r, sign) for r in range(lo, hi + 1)]


def _cap_a_letters(ctx: GroupContext, j: int, s: int) -> list[Letter]:
    # A_{j,s} = a_{j,1} .. a_{j,s-1} a_{j,s+1}^-1 .. a_{j,2g}^-1 in the
    # pure families; the braid families carry the sigma_1-flanked variant
    # A_{2,s} = s1^-1 (a_{1,1} .. a_{1,s-1} a_{1,s+1}^-1 .. a_{1,2g}^-1) s1^-1.
    twog = 2 * ctx.g
    if ctx.family in _PURE_FAMILIES:
        return (_ascending_a(j, 1, s - 1)
                + _ascending_a(j, s + 1, twog, sign=-1))
    core = _ascending_a(1, 1, s - 1) + _ascending_a(1, s + 1, twog, sign=-1)
    return [sigma(1, -1)] + core + [sigma(1, -1)]


def _big_t_sigma_letters(i: int, j: int) -> list[Letter]:
    # T_{i,j} = s_i s_{i+1} .. s_{j-2} s_{j-1}^2 s_{j-2} .. s_{i+1} s_i
    up = [sigma(k) for k in range(i, j - 1)]
    down = [sigma(k) for k in range(j - 2, i - 1, -1)]
    return up + [sigma(j - 1), sigma(j - 1)] + down


def _small_t_sigma_letters(i: int, j: int) -> list[Letter]:
    # t_{i,j} = T_{i,j} T_{i,j-1}^-1; at i = 1 this reduces to the
    # conjugate form s_1 .. s_{j-2} s_{j-1}^2 s_{j-2}^-1 .. s_1^-1.
    word = _big_t_sigma_letters(i, j)
    if j - 1 > i:
        word = word + [l.inv for l in reversed(_big_t_sigma_letters(i, j - 1))]
    return list(_reduce_letters(word))


def _expand_letter(letter: Letter, ctx: GroupContext) -> list[Letter]:
    kind = letter.kind
    family = ctx.family
    if kind is Kind.CAP_A:
        out = _cap_a_letters(ctx, letter.a, letter.b)
    elif kind is Kind.BIG_T and family in _BRAID_FAMILIES:
        out = _big_t_sigma_letters(letter.a, letter.b)
    elif kind is Kind.BIG_T and family is Family.HAT_PBN:
        # T_{i,j} = t_{i,j} t_{i,j-1} .. t_{i,i+1}
        out = [small_t(letter.a, k)
               for k in range(letter.b, letter.a, -1)]
    elif kind is Kind.SMALL_T and family in _BRAID_FAMILIES:
        out = _small_t_sigma_letters(letter.a, letter.b)
    else:
        return [letter]
    if letter.sign == -1:
        out = [l.inv for l in reversed(out)]
    return out


def expand_abbreviations(w: Word) -> Word:
    """Rewrite derived symbols (T, t, A) into the generator alphabet of
    the word's own context.  Idempotent on generator-only words."""
    parts: list[Letter] = []
    for letter in w.letters:
        parts.extend(_expand_letter(letter, w.context))
    return Word(w.context, parts)


# ---------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------

def format_letter(letter: Letter, ctx: GroupContext | None = None) -> str:
    if ctx is not None and ctx.family is Family.PI1:
        body = f"a{letter.b}"
    elif letter.kind in _SINGLE_INDEX:
        body = f"{letter.kind.value}{letter.a}"
    else:
        body = f"{letter.kind.value}{letter.a}.{letter.b}"
    return body if letter.sign == 1 else body + "^-1"


def format_word(w: Word) -> str:
    """Round-trippable text: one token per letter, `^-1` for inverses."""
    return " ".join(format_letter(l, w.context) for l in w.letters)


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<punct>[\[\],])"
    r"|(?P<kind>[satTAx])(?P<a>\d+)(?:\.(?P<b>\d+))?(?:\^(?P<exp>[+-]?\d+))?"
)

_KIND_BY_PREFIX = {k.value: k for k in Kind}


class _Token:
    __slots__ = ("pos", "text", "letter", "exp")

    def __init__(self, pos, text, letter=None, exp=1):
        self.pos = pos
        self.text = text
        self.letter = letter
        self.exp = exp


def _lex(text: str, ctx: GroupContext) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m["ws"] is None:
            if m["punct"] is not None:
                tokens.append(_Token(pos, m["punct"]))
            else:
                kind = _KIND_BY_PREFIX[m["kind"]]
                a = int(m["a"])
                b = m["b"]
                if ctx.family is Family.PI1 and kind is Kind.SURF_A:
                    if b is not None:
                        raise ParseError(
                            "pi1 handle letters take one index", pos)
                    letter = Letter(Kind.SURF_A, 1, a)
                elif kind in _SINGLE_INDEX:
                    if b is not None:
                        raise ParseError(
                            f"{m['kind']}-letter takes one index", pos)
                    letter = _make_letter(kind, a, 0, pos)
                else:
                    if b is None:
                        raise ParseError(
                            f"{m['kind']}-letter needs two indices", pos)
                    letter = _make_letter(kind, a, int(b), pos)
                try:
                    check_letter(letter, ctx)
                except WordError as err:
                    raise ParseError(str(err), pos) from None
                exp = 1 if m["exp"] is None else int(m["exp"])
                if abs(exp) > MAX_EXPONENT:
                    raise ParseError(
                        f"exponent exceeds +-{MAX_EXPONENT}", pos)
                tokens.append(_Token(pos, m.group(0), letter, exp))
        pos = m.end()
    return tokens


def _make_letter(kind: Kind, a: int, b: int, pos: int) -> Letter:
    try:
        return Letter(kind, a, b)
    except WordError as err:
        raise ParseError(str(err), pos) from None


def parse_word(text: str, ctx: GroupContext) -> Word:
    """Parse the word grammar; see the module docstring."""
    tokens = _lex(text, ctx)
    index = 0

    def parse_sequence(stop: set[str]) -> list[Letter]:
        nonlocal index
        letters: list[Letter] = []
        while index < len(tokens):
            tok = tokens[index]
            if tok.text in stop:
                return letters
            if tok.text == "[":
                open_pos = tok.pos
                index += 1
                left = parse_sequence({",", "]"})
                if index >= len(tokens) or tokens[index].text != ",":
                    raise ParseError("commutator needs ','", open_pos)
                index += 1
                right = parse_sequence({"]", ","})
                if index >= len(tokens) or tokens[index].text != "]":
                    raise ParseError("unclosed commutator", open_pos)
                index += 1
                inner = (left + right
                         + [l.inv for l in reversed(left)]
                         + [l.inv for l in reversed(right)])
                letters.extend(inner)
            elif tok.text in ("]", ","):
                raise ParseError(f"unexpected {tok.text!r}", tok.pos)
            else:
                index += 1
                if tok.exp >= 0:
                    letters.extend([tok.letter] * tok.exp)
                else:
                    letters.extend([tok.letter.inv] * -tok.exp)
        return letters

    letters = parse_sequence(stop=set())
    if index < len(tokens):
        raise ParseError(f"unexpected {tokens[index].text!r}",
                         tokens[index].pos)
    return Word(ctx, letters)
