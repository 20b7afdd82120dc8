"""Homomorphisms between the braid-like groups and their targets.

Three kinds of map live here, sharing the small interface that the
well-definedness checker consumes (`name`, `domain`, `apply`, `classify`,
`describe`):

* `GeneratorMap` - generator-image tables between word groups (the
  disk-to-surface inclusions and the quotient projections, which are all
  letterwise);
* `ThetaMap` - the strand-projection map from a pure/string-link group
  onto the n-fold product of the surface group, realized by the table
  a_{i,r} -> a_r in component i, t/T -> identity;
* `PermutationMap` - the induced permutation of strand endpoints.

Composition convention, used everywhere: words act left to right (the
first letter acts first), so the permutation of s1 s2 on three strands
sends 1->2, 2->3, 3->1, and applying a word to a tuple multiplies the
per-letter contributions in reading order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

from .pi1 import Verdict, is_trivial_pi1, tuple_is_trivial
from .presentations import (
    LHSampler,
    Presentation,
    build_presentation,
    enumerate_relators,
)
from .words import (
    Family,
    GroupContext,
    Kind,
    Letter,
    Word,
    WordError,
    admissible_letters,
    expand_abbreviations,
    format_word,
    sigma,
    substitute,
    surf_a,
)

_BRAIDISH = (Family.BN, Family.HAT_BN, Family.PBN, Family.HAT_PBN)


# ---------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class PermutationImage:
    """A bijection of {1..n}; mapping[k-1] is the image of k."""

    n: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(1, self.n + 1)):
            raise WordError(f"not a bijection of 1..{self.n}: {self.mapping}")

    @classmethod
    def identity(cls, n: int) -> PermutationImage:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int) -> PermutationImage:
        mapping = list(range(1, n + 1))
        mapping[i - 1], mapping[i] = mapping[i], mapping[i - 1]
        return cls(n, tuple(mapping))

    @property
    def is_identity(self) -> bool:
        return all(v == k + 1 for k, v in enumerate(self.mapping))

    def __call__(self, k: int) -> int:
        return self.mapping[k - 1]

    def compose(self, other: PermutationImage) -> PermutationImage:
        """(self o other)(k) = self(other(k))."""
        if self.n != other.n:
            raise WordError("permutation size mismatch")
        return PermutationImage(
            self.n, tuple(self.mapping[v - 1] for v in other.mapping))

    def inverse(self) -> PermutationImage:
        inv = [0] * self.n
        for k, v in enumerate(self.mapping, start=1):
            inv[v - 1] = k
        return PermutationImage(self.n, tuple(inv))

    def describe(self) -> str:
        return " ".join(f"{k}→{v}"
                        for k, v in enumerate(self.mapping, start=1))


def permutation_of(w: Word) -> PermutationImage:
    """Permutation of strand positions induced by a braid-like word.

    sigma_i contributes the transposition (i, i+1) regardless of sign;
    handle letters and the t/T/A symbols are pure, hence contribute the
    identity (their sigma-expansions induce the identity as well).
    """
    ctx = w.context
    if ctx.family not in _BRAIDISH:
        raise WordError("permutations are defined for braid-like words")
    mapping = list(range(1, ctx.n + 1))
    for letter in w.letters:
        if letter.kind is Kind.SIGMA:
            i = letter.a
            mapping[i - 1], mapping[i] = mapping[i], mapping[i - 1]
    return PermutationImage(ctx.n, tuple(mapping))


# ---------------------------------------------------------------------
# Tuples over the surface group
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Pi1Tuple:
    """An element of the n-fold product of the surface group."""

    components: tuple[Word, ...]

    def __post_init__(self):
        if not self.components:
            raise WordError("tuple needs at least one component")
        g = self.components[0].context.g
        for comp in self.components:
            if comp.context.family is not Family.PI1 or comp.context.g != g:
                raise WordError("components must share one pi1 context")

    @classmethod
    def identity(cls, n: int, g: int) -> Pi1Tuple:
        ctx = GroupContext.pi1(g)
        return cls(tuple(Word.identity(ctx) for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def g(self) -> int:
        return self.components[0].context.g

    @property
    def is_free_identity(self) -> bool:
        return all(c.is_identity for c in self.components)

    def __mul__(self, other: Pi1Tuple) -> Pi1Tuple:
        if self.n != other.n or self.g != other.g:
            raise WordError("tuple shape mismatch")
        return Pi1Tuple(tuple(a * b for a, b in
                              zip(self.components, other.components)))

    def inverse(self) -> Pi1Tuple:
        return Pi1Tuple(tuple(c.inverse() for c in self.components))

    def describe(self) -> str:
        parts = [format_word(c) if not c.is_identity else "1"
                 for c in self.components]
        return "(" + ", ".join(parts) + ")"


def theta_hat(w: Word, g: int | None = None) -> Pi1Tuple:
    """Strand projection of a pure/string-link word onto pi1(M)^n.

    Generator table: a_{i,r} puts a_r into component i; t_{i,j} and
    T_{i,j} project to the identity tuple.  Derived A-symbols are
    expanded first.  Braid generators are rejected: only pure words have
    well-defined strand loops.
    """
    ctx = w.context
    if ctx.family not in (Family.PBN, Family.HAT_PBN):
        raise WordError("strand projection needs a pure braid-like word "
                        f"(got {ctx.family.value})")
    if g is None:
        g = ctx.g
    if g < 1:
        raise WordError("strand projection targets a surface, need g >= 1")
    expanded = expand_abbreviations(w)
    stacks: list[list[Letter]] = [[] for _ in range(ctx.n)]
    for letter in expanded.letters:
        if letter.kind is Kind.SURF_A:
            out = surf_a(1, letter.b, letter.sign)
            stack = stacks[letter.a - 1]
            if stack and stack[-1] == out.inv:
                stack.pop()
            else:
                stack.append(out)
        elif letter.kind in (Kind.SMALL_T, Kind.BIG_T):
            continue
        else:
            raise WordError(
                f"non-pure letter in strand projection: {letter!r}")
    pi1_ctx = GroupContext.pi1(g)
    return Pi1Tuple(tuple(Word(pi1_ctx, s) for s in stacks))


def theta_preimage(t: Pi1Tuple, family: Family = Family.HAT_PBN) -> Word:
    """A canonical preimage of a tuple: component i spelled on strand i."""
    ctx = GroupContext(family, t.n, t.g)
    letters = []
    for i, comp in enumerate(t.components, start=1):
        letters += [surf_a(i, l.b, l.sign) for l in comp.letters]
    return Word(ctx, letters)


# ---------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------

def free_reduction_oracle(w: Word) -> Verdict:
    """Semi-decision for word targets with no word problem available:
    freely trivial words are trivial, everything else is unknown."""
    return Verdict.TRIVIAL if w.is_identity else Verdict.UNKNOWN


@dataclass(frozen=True)
class GeneratorMap:
    """A homomorphism candidate given by images of generators.

    `images` must cover every letter that can appear in a domain word
    (including derived symbols, which quotient/inclusion maps carry
    through letterwise).  `oracle` decides triviality in the target.
    """

    name: str
    domain: Presentation
    target: GroupContext
    images: Mapping[Letter, Word]
    oracle: Callable[[Word], Verdict] = free_reduction_oracle

    def apply(self, w: Word) -> Word:
        if w.context != self.domain.context:
            raise WordError(f"{self.name}: word not in domain context")
        return substitute(w, self.images, self.target)

    def classify(self, image: Word) -> Verdict:
        return self.oracle(image)

    def describe(self, image: Word) -> str:
        return format_word(image)


def letterwise_map(name: str, domain: Presentation,
                   target: GroupContext,
                   oracle: Callable[[Word], Verdict] = free_reduction_oracle
                   ) -> GeneratorMap:
    """The map sending every admissible domain letter to itself."""
    images = {l: Word(target, [l])
              for l in admissible_letters(domain.context)}
    return GeneratorMap(name, domain, target, images, oracle)


def inclusion_f(n: int, g: int) -> GeneratorMap:
    """Disk pure braids into surface pure braids, band generators fixed."""
    return letterwise_map(
        "f", build_presentation(Family.PBN, n, 0), GroupContext.pbn(n, g))


def inclusion_f_hat(n: int, g: int) -> GeneratorMap:
    """Disk string links into surface string links, generators fixed."""
    return letterwise_map(
        "f_hat", build_presentation(Family.HAT_PBN, n, 0),
        GroupContext.hat_pbn(n, g))


def projection_p1(n: int) -> GeneratorMap:
    """Disk pure braids onto their link-homotopy quotient."""
    return letterwise_map(
        "p1", build_presentation(Family.PBN, n, 0), GroupContext.hat_pbn(n, 0))


def projection_p2(n: int, g: int) -> GeneratorMap:
    """Surface pure braids onto their link-homotopy quotient."""
    return letterwise_map(
        "p2", build_presentation(Family.PBN, n, g),
        GroupContext.hat_pbn(n, g))


def projection_p(n: int, g: int) -> GeneratorMap:
    """The full braid group onto its link-homotopy quotient."""
    return letterwise_map(
        "p", build_presentation(Family.BN, n, g), GroupContext.hat_bn(n, g))


@dataclass(frozen=True)
class ThetaMap:
    """Strand projection onto pi1(M)^n, with an exact target oracle.

    `overrides` replaces the tuple image of chosen generators; it exists
    so the checker can be fed a deliberately corrupted table.
    """

    domain: Presentation
    name: str = "theta"
    overrides: Mapping[Letter, Pi1Tuple] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.domain.context.n

    @property
    def g(self) -> int:
        return self.domain.context.g

    def apply(self, w: Word) -> Pi1Tuple:
        if not self.overrides:
            return theta_hat(w, self.g)
        expanded = expand_abbreviations(w)
        out = Pi1Tuple.identity(self.n, self.g)
        for letter in expanded.letters:
            override = self.overrides.get(letter.positive)
            if override is not None:
                out = out * (override if letter.sign == 1
                             else override.inverse())
            elif letter.kind is Kind.SURF_A:
                comp = Word(GroupContext.pi1(self.g),
                            [surf_a(1, letter.b, letter.sign)])
                parts = list(out.components)
                parts[letter.a - 1] = parts[letter.a - 1] * comp
                out = Pi1Tuple(tuple(parts))
            elif letter.kind in (Kind.SMALL_T, Kind.BIG_T):
                continue
            else:
                raise WordError(f"non-pure letter: {letter!r}")
        return out

    def classify(self, image: Pi1Tuple) -> Verdict:
        return tuple_is_trivial(image, self.g)

    def describe(self, image: Pi1Tuple) -> str:
        return image.describe()


def theta_map(n: int, g: int,
              domain_family: Family = Family.HAT_PBN) -> ThetaMap:
    return ThetaMap(build_presentation(domain_family, n, g))


def corrupted_theta_map(n: int, g: int) -> ThetaMap:
    """Falsification fixture: a_{1,1} is sent to a_2 in component 1."""
    pi1_ctx = GroupContext.pi1(g)
    comps = [Word.identity(pi1_ctx) for _ in range(n)]
    comps[0] = Word(pi1_ctx, [surf_a(1, 2)])
    return ThetaMap(build_presentation(Family.HAT_PBN, n, g),
                    name="theta_corrupt",
                    overrides={surf_a(1, 1): Pi1Tuple(tuple(comps))})


@dataclass(frozen=True)
class PermutationMap:
    """The induced-permutation map, with an exact target oracle."""

    domain: Presentation
    name: str = "psi"
    overrides: Mapping[Letter, PermutationImage] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.domain.context.n

    def apply(self, w: Word) -> PermutationImage:
        if not self.overrides:
            return permutation_of(w)
        out = PermutationImage.identity(self.n)
        for letter in w.letters:
            override = self.overrides.get(letter.positive)
            if override is not None:
                out = out.compose(override if letter.sign == 1
                                  else override.inverse())
            elif letter.kind is Kind.SIGMA:
                out = out.compose(
                    PermutationImage.transposition(self.n, letter.a))
        return out

    def classify(self, image: PermutationImage) -> Verdict:
        return Verdict.TRIVIAL if image.is_identity else Verdict.NONTRIVIAL

    def describe(self, image: PermutationImage) -> str:
        return image.describe()


def psi_map(n: int, g: int,
            domain_family: Family = Family.HAT_BN) -> PermutationMap:
    return PermutationMap(build_presentation(domain_family, n, g))


def corrupted_psi_map(n: int, g: int) -> PermutationMap:
    """Falsification fixture: sigma_1 is sent to the identity."""
    return PermutationMap(build_presentation(Family.HAT_BN, n, g),
                          name="psi_corrupt",
                          overrides={sigma(1): PermutationImage.identity(n)})


# ---------------------------------------------------------------------
# Well-definedness checking
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class RelatorCheck:
    tag: str
    indices: tuple[int, ...]
    conjugator: str | None
    relator: str
    image: str
    verdict: str

    def to_dict(self) -> dict:
        return {"tag": self.tag, "indices": list(self.indices),
                "conjugator": self.conjugator, "relator": self.relator,
                "image": self.image, "verdict": self.verdict}


@dataclass
class Report:
    """Outcome of checking every enumerated relator against a target.

    A relator whose image is not trivial in the target is a failure; an
    oracle that cannot decide contributes to `unknowns` instead, so
    semi-decision targets stay honest.
    """

    map_name: str
    family: str
    n: int
    g: int
    checked: int = 0
    failures: list[RelatorCheck] = field(default_factory=list)
    unknowns: list[RelatorCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def clean(self) -> bool:
        return not self.failures and not self.unknowns

    def to_dict(self) -> dict:
        return {
            "map": self.map_name,
            "domain": {"family": self.family, "n": self.n, "g": self.g},
            "checked": self.checked,
            "passed": self.checked - len(self.failures) - len(self.unknowns),
            "failed": [c.to_dict() for c in self.failures],
            "unknown": [c.to_dict() for c in self.unknowns],
        }


def verify_well_defined(hom, lh: LHSampler | None = None) -> Report:
    """Check that every relator of the map's domain dies in the target.

    Totality of the image table plus this check is exactly
    well-definedness on the presented group (up to LH sampling bounds).
    """
    domain = hom.domain
    if lh is None and domain.needs_sampler:
        lh = LHSampler()
    ctx = domain.context
    report = Report(hom.name, ctx.family.value, ctx.n, ctx.g)
    for inst in enumerate_relators(domain, lh):
        image = hom.apply(inst.word)
        verdict = hom.classify(image)
        report.checked += 1
        if verdict is Verdict.TRIVIAL:
            continue
        check = RelatorCheck(
            tag=inst.tag,
            indices=inst.indices,
            conjugator=None if inst.conjugator is None
            else format_word(inst.conjugator),
            relator=format_word(inst.word),
            image=hom.describe(image),
            verdict=verdict.value,
        )
        if verdict is Verdict.NONTRIVIAL:
            report.failures.append(check)
        else:
            report.unknowns.append(check)
    return report
