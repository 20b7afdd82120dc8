"""Randomized suites exercising the maps between the braid-like groups.

Each check sweeps a deterministic sample grid and records failures with
replayable witness words: given the config seed, every reported word can
be regenerated.  The suites cover

* commutativity of the two squares relating the disk and surface groups
  with their link-homotopy quotients and the strand projection;
* containment of the included disk braids (and their conjugates) in the
  kernel of the strand projection;
* surjectivity of the strand projection via spelled preimages;
* the disk link-homotopy sequence: sampled trivial elements die under
  the reduced Artin action, band generators do not, and projecting to
  the quotient commutes with taking strand permutations;
* well-definedness of the strand projection and the permutation map on
  every enumerated relator.

Random words are drawn as non-backtracking walks over the generator
alphabet (uniform over the letters that do not cancel the previous one),
so a length-L draw is already reduced of length exactly L.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, asdict

from .homs import (
    inclusion_f,
    inclusion_f_hat,
    permutation_of,
    projection_p,
    projection_p1,
    projection_p2,
    psi_map,
    theta_hat,
    theta_map,
    theta_preimage,
    verify_well_defined,
    Pi1Tuple,
)
from .pi1 import Verdict, is_trivial_pi1, tuple_is_trivial
from .presentations import LHSampler
from .reduced_free import lh_trivial_disk, sample_hn_element
from .words import (
    Family,
    GroupContext,
    Word,
    big_t,
    format_word,
    generator_alphabet,
)


@dataclass(frozen=True)
class SuiteConfig:
    n_max: int = 3
    g_max: int = 2
    length: int = 12
    samples: int = 200
    seed: int = 42
    lh_max_h: int = 4
    lh_samples: int = 64

    def __post_init__(self):
        if min(self.n_max, self.g_max, self.length) < 1 or self.samples < 0:
            raise ValueError("suite bounds must be positive")

    def sampler(self) -> LHSampler:
        return LHSampler(max_h_length=self.lh_max_h,
                         samples_per_pair=self.lh_samples, seed=self.seed)

    def rng(self, check: str, n: int, g: int) -> random.Random:
        return random.Random(f"lab|{self.seed}|{check}|{n}|{g}")


@dataclass
class CheckResult:
    name: str
    n: int
    g: int
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    unknowns: list[dict] = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "name": self.name, "n": self.n, "g": self.g,
            "checked": self.checked, "passed": self.passed,
            "failures": self.failures, "unknowns": self.unknowns,
        }
        if timing:
            out["wall_ms"] = round(self.wall_ms, 3)
        return out


@dataclass
class SuiteReport:
    config: SuiteConfig
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def checked(self) -> int:
        return sum(c.checked for c in self.checks)

    def extend(self, other: SuiteReport) -> None:
        self.checks.extend(other.checks)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "config": asdict(self.config),
            "passed": self.passed,
            "checked": self.checked,
            "checks": [c.to_dict(timing) for c in self.checks],
        }


def random_reduced_word(ctx: GroupContext, length: int,
                        rng: random.Random, alphabet=None) -> Word:
    """Non-backtracking uniform walk: reduced, length exactly `length`
    whenever the alphabet is nonempty."""
    if alphabet is None:
        alphabet = generator_alphabet(ctx)
    signed = [l for a in alphabet for l in (a, a.inv)]
    if not signed or length <= 0:
        return Word.identity(ctx)
    letters = [rng.choice(signed)]
    for _ in range(length - 1):
        prev_inv = letters[-1].inv
        letters.append(rng.choice([c for c in signed if c != prev_inv]))
    return Word(ctx, letters)


def random_pi1_tuple(n: int, g: int, length: int,
                     rng: random.Random) -> Pi1Tuple:
    ctx = GroupContext.pi1(g)
    return Pi1Tuple(tuple(
        random_reduced_word(ctx, rng.randint(0, length), rng)
        for _ in range(n)))


def _timed(result: CheckResult, started: float) -> CheckResult:
    result.wall_ms = (time.perf_counter() - started) * 1000.0
    return result


# ---------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------

def check_diagram_commutes(cfg: SuiteConfig) -> SuiteReport:
    """Both squares of the disk/surface/quotient diagram, exactly."""
    report = SuiteReport(cfg)
    for n in range(1, cfg.n_max + 1):
        for g in range(1, cfg.g_max + 1):
            started = time.perf_counter()
            res = CheckResult("diagram_commutes", n, g)
            rng = cfg.rng("diagram", n, g)
            f = inclusion_f(n, g)
            f_hat = inclusion_f_hat(n, g)
            p1 = projection_p1(n)
            p2 = projection_p2(n, g)
            disk_ctx = GroupContext.pbn(n, 0)
            surf_ctx = GroupContext.pbn(n, g)
            for _ in range(cfg.samples):
                w = random_reduced_word(
                    disk_ctx, rng.randint(0, cfg.length), rng)
                res.checked += 1
                left = f_hat.apply(p1.apply(w))
                right = p2.apply(f.apply(w))
                if left != right:
                    res.failures.append({
                        "square": "inclusion", "word": format_word(w),
                        "via_quotient_first": format_word(left),
                        "via_inclusion_first": format_word(right)})
            for _ in range(cfg.samples):
                v = random_reduced_word(
                    surf_ctx, rng.randint(0, cfg.length), rng)
                res.checked += 1
                left_t = theta_hat(p2.apply(v), g)
                right_t = theta_hat(v, g)
                same = all(
                    is_trivial_pi1(a * b.inverse(), g) is Verdict.TRIVIAL
                    for a, b in zip(left_t.components, right_t.components))
                if not same:
                    res.failures.append({
                        "square": "projection", "word": format_word(v),
                        "via_quotient": left_t.describe(),
                        "direct": right_t.describe()})
            report.checks.append(_timed(res, started))
    return report


def check_im_in_ker(cfg: SuiteConfig) -> SuiteReport:
    """Conjugated images of disk braids die under the strand projection."""
    report = SuiteReport(cfg)
    for n in range(1, cfg.n_max + 1):
        for g in range(1, cfg.g_max + 1):
            started = time.perf_counter()
            res = CheckResult("im_in_ker", n, g)
            rng = cfg.rng("im_in_ker", n, g)
            f_hat = inclusion_f_hat(n, g)
            p1 = projection_p1(n)
            disk_ctx = GroupContext.pbn(n, 0)
            quot_ctx = GroupContext.hat_pbn(n, g)
            for _ in range(cfg.samples):
                u = random_reduced_word(
                    disk_ctx, rng.randint(0, cfg.length), rng)
                c = random_reduced_word(
                    quot_ctx, rng.randint(0, cfg.length), rng)
                res.checked += 1
                image = f_hat.apply(p1.apply(u)).conjugated_by(c)
                verdict = tuple_is_trivial(theta_hat(image, g), g)
                if verdict is not Verdict.TRIVIAL:
                    res.failures.append({
                        "disk_word": format_word(u),
                        "conjugator": format_word(c),
                        "verdict": verdict.value})
            report.checks.append(_timed(res, started))
    return report


def check_surjectivity(cfg: SuiteConfig) -> SuiteReport:
    """Spelled preimages round-trip through the strand projection."""
    report = SuiteReport(cfg)
    for n in range(1, cfg.n_max + 1):
        for g in range(1, cfg.g_max + 1):
            started = time.perf_counter()
            res = CheckResult("surjectivity", n, g)
            rng = cfg.rng("surjectivity", n, g)
            for _ in range(cfg.samples):
                target = random_pi1_tuple(n, g, cfg.length, rng)
                res.checked += 1
                back = theta_hat(theta_preimage(target), g)
                exact = back == target
                confirmed = all(
                    is_trivial_pi1(a * b.inverse(), g) is Verdict.TRIVIAL
                    for a, b in zip(back.components, target.components))
                if not (exact and confirmed):
                    res.failures.append({
                        "tuple": target.describe(),
                        "round_trip": back.describe()})
            report.checks.append(_timed(res, started))
    return report


def check_hn_sequence(cfg: SuiteConfig) -> SuiteReport:
    """The disk link-homotopy sequence, where the decision procedure
    exists: sampled members are trivial, band generators are not, and
    the quotient projection preserves strand permutations."""
    report = SuiteReport(cfg)
    for n in range(2, cfg.n_max + 1):
        started = time.perf_counter()
        res = CheckResult("hn_sequence", n, 0)
        rng = cfg.rng("hn", n, 0)
        for k in range(cfg.samples):
            word = sample_hn_element(n, cfg.seed * 100003 + k, k % 4)
            res.checked += 1
            if lh_trivial_disk(word) is not Verdict.TRIVIAL:
                res.failures.append({
                    "kind": "sampled_member_not_trivial",
                    "word": format_word(word), "seed": cfg.seed * 100003 + k})
        disk_ctx = GroupContext.pbn(n, 0)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                res.checked += 1
                gen = Word(disk_ctx, [big_t(i, j)])
                if lh_trivial_disk(gen) is not Verdict.NONTRIVIAL:
                    res.failures.append({
                        "kind": "band_generator_reported_trivial",
                        "word": format_word(gen)})
        braid_ctx = GroupContext.bn(n, 0)
        p = projection_p(n, 0)
        for _ in range(cfg.samples):
            w = random_reduced_word(braid_ctx, rng.randint(0, cfg.length), rng)
            res.checked += 1
            if permutation_of(p.apply(w)).mapping != \
                    permutation_of(w).mapping:
                res.failures.append({
                    "kind": "projection_changed_permutation",
                    "word": format_word(w)})
        res.checked += 1
        if n >= 2 and permutation_of(
                Word(braid_ctx, [big_t(1, 2)])).mapping != \
                tuple(range(1, n + 1)):
            res.failures.append({"kind": "band_generator_not_pure"})
        report.checks.append(_timed(res, started))
    return report


def check_well_defined(cfg: SuiteConfig) -> SuiteReport:
    """Relator-by-relator well-definedness of the projection maps."""
    report = SuiteReport(cfg)
    sampler = cfg.sampler()
    for n in range(1, cfg.n_max + 1):
        for g in range(1, cfg.g_max + 1):
            started = time.perf_counter()
            res = CheckResult("verify_theta", n, g)
            verified = verify_well_defined(theta_map(n, g), sampler)
            res.checked = verified.checked
            res.failures = [c.to_dict() for c in verified.failures]
            res.unknowns = [c.to_dict() for c in verified.unknowns]
            report.checks.append(_timed(res, started))

            started = time.perf_counter()
            res = CheckResult("verify_psi", n, g)
            for family in (Family.BN, Family.HAT_BN):
                verified = verify_well_defined(
                    psi_map(n, g, family), sampler)
                res.checked += verified.checked
                res.failures += [c.to_dict() for c in verified.failures]
                res.unknowns += [c.to_dict() for c in verified.unknowns]
            report.checks.append(_timed(res, started))
    return report


def run_all(cfg: SuiteConfig) -> SuiteReport:
    """Every suite plus the well-definedness checks, aggregated."""
    report = SuiteReport(cfg)
    report.extend(check_diagram_commutes(cfg))
    report.extend(check_im_in_ker(cfg))
    report.extend(check_surjectivity(cfg))
    report.extend(check_hn_sequence(cfg))
    report.extend(check_well_defined(cfg))
    return report
