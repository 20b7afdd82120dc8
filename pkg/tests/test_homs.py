"""Homomorphisms: permutations, strand projection, well-definedness."""

import itertools
import random

import pytest

from braidlab import (
    Family,
    GroupContext,
    LHSampler,
    PermutationImage,
    Pi1Tuple,
    Verdict,
    Word,
    WordError,
    big_t,
    build_presentation,
    corrupted_psi_map,
    corrupted_theta_map,
    format_word,
    inclusion_f,
    inclusion_f_hat,
    parse_word,
    permutation_of,
    projection_p1,
    projection_p2,
    psi_map,
    random_reduced_word,
    theta_hat,
    theta_map,
    theta_preimage,
    verify_well_defined,
)


# -- permutation_of ----------------------------------------------------

def test_sigma_is_transposition():
    word = parse_word("s1", GroupContext.bn(3, 0))
    assert permutation_of(word).mapping == (2, 1, 3)


def test_pure_letters_are_in_kernel():
    ctx = GroupContext.bn(3, 1)
    assert permutation_of(parse_word("a1.1", ctx)).is_identity
    pure = GroupContext.hat_pbn(3, 2)
    rng = random.Random(0)
    for _ in range(50):
        word = random_reduced_word(pure, rng.randint(0, 15), rng)
        assert permutation_of(word).is_identity


def test_left_to_right_composition():
    # apply s1 first, then s2: 1->2, 2->3, 3->1
    word = parse_word("s1 s2", GroupContext.bn(3, 0))
    assert permutation_of(word).mapping == (2, 3, 1)


def test_permutation_is_homomorphism():
    ctx = GroupContext.bn(4, 1)
    rng = random.Random(4)
    for _ in range(150):
        u = random_reduced_word(ctx, rng.randint(0, 10), rng)
        v = random_reduced_word(ctx, rng.randint(0, 10), rng)
        assert permutation_of(u * v).mapping == \
            permutation_of(u).compose(permutation_of(v)).mapping


def test_every_permutation_reached_by_short_words():
    # breadth-first search over sigma words of length <= 6
    for n in (2, 3, 4):
        ctx = GroupContext.bn(n, 0)
        gens = [parse_word(f"s{i}", ctx) for i in range(1, n)]
        gens += [g.inverse() for g in gens]
        frontier = [Word.identity(ctx)]
        seen = {permutation_of(Word.identity(ctx)).mapping}
        for _ in range(6):
            frontier = [w * g for w in frontier for g in gens]
            seen.update(permutation_of(w).mapping for w in frontier)
        assert len(seen) == len(list(itertools.permutations(range(n))))


def test_permutation_image_validates():
    with pytest.raises(WordError):
        PermutationImage(3, (1, 1, 2))


# -- theta -------------------------------------------------------------

def test_theta_generator_table():
    ctx = GroupContext.hat_pbn(3, 2)
    image = theta_hat(parse_word("a2.3", ctx))
    assert image.describe() == "(1, a3, 1)"
    assert theta_hat(parse_word("T1.2", ctx)).is_free_identity
    image = theta_hat(parse_word("a1.1 a2.2 a1.1^-1", ctx))
    assert image.describe() == "(1, a2, 1)"


def test_theta_rejects_braid_letters():
    with pytest.raises(WordError):
        theta_hat(parse_word("s1", GroupContext.bn(2, 1)))


def test_theta_is_homomorphism():
    ctx = GroupContext.hat_pbn(3, 2)
    rng = random.Random(9)
    for _ in range(100):
        u = random_reduced_word(ctx, rng.randint(0, 12), rng)
        v = random_reduced_word(ctx, rng.randint(0, 12), rng)
        assert theta_hat(u * v) == theta_hat(u) * theta_hat(v)


def test_theta_preimage_examples():
    pi1 = GroupContext.pi1(1)
    t = Pi1Tuple((parse_word("a1", pi1), parse_word("a2", pi1)))
    assert format_word(theta_preimage(t)) == "a1.1 a2.2"
    ident = Pi1Tuple.identity(3, 1)
    assert theta_preimage(ident).is_identity
    t = Pi1Tuple((parse_word("a1 a2^-1", pi1), Word.identity(pi1),
                  parse_word("a1", pi1)))
    assert format_word(theta_preimage(t)) == "a1.1 a1.2^-1 a3.1"


def test_theta_section_round_trip():
    rng = random.Random(12)
    from braidlab import random_pi1_tuple
    for n in (1, 2, 3):
        for g in (1, 2):
            for _ in range(50):
                t = random_pi1_tuple(n, g, 8, rng)
                assert theta_hat(theta_preimage(t)) == t


# -- generator maps and the commuting square ---------------------------

def test_quotient_and_inclusion_maps_are_letterwise():
    w = Word(GroupContext.pbn(2, 0), [big_t(1, 2)])
    hat = projection_p1(2).apply(w)
    assert hat.context == GroupContext.hat_pbn(2, 0)
    assert [l for l in hat.letters] == [big_t(1, 2)]
    surf = inclusion_f_hat(2, 1).apply(hat)
    assert surf.context == GroupContext.hat_pbn(2, 1)
    assert [l for l in surf.letters] == [big_t(1, 2)]


def test_inclusion_square_commutes_on_samples():
    rng = random.Random(3)
    for n in (1, 2, 3):
        for g in (1, 2):
            f = inclusion_f(n, g)
            f_hat = inclusion_f_hat(n, g)
            p1 = projection_p1(n)
            p2 = projection_p2(n, g)
            ctx = GroupContext.pbn(n, 0)
            for _ in range(40):
                w = random_reduced_word(ctx, rng.randint(0, 10), rng)
                assert f_hat.apply(p1.apply(w)) == p2.apply(f.apply(w))


def test_generator_map_is_homomorphism():
    rng = random.Random(17)
    f_hat = inclusion_f_hat(3, 2)
    ctx = GroupContext.hat_pbn(3, 0)
    for _ in range(100):
        u = random_reduced_word(ctx, rng.randint(0, 10), rng)
        v = random_reduced_word(ctx, rng.randint(0, 10), rng)
        assert f_hat.apply(u * v) == f_hat.apply(u) * f_hat.apply(v)


# -- well-definedness --------------------------------------------------

@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("g", [1, 2])
def test_theta_well_defined(n, g):
    report = verify_well_defined(theta_map(n, g), LHSampler(seed=21))
    assert report.failures == []
    assert report.unknowns == []


@pytest.mark.parametrize("family", [Family.BN, Family.HAT_BN])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("g", [1, 2])
def test_psi_well_defined(family, n, g):
    report = verify_well_defined(psi_map(n, g, family), LHSampler(seed=21))
    assert report.failures == []
    assert report.unknowns == []


def test_theta_on_pbn_domain_well_defined():
    report = verify_well_defined(theta_map(3, 2, Family.PBN))
    assert report.clean


def test_corrupted_theta_reports_failures():
    report = verify_well_defined(corrupted_theta_map(1, 2))
    assert report.failures and report.failures[0].tag == "PR1"
    report = verify_well_defined(corrupted_theta_map(3, 2),
                                 LHSampler(seed=21))
    assert report.failures
    for failure in report.failures:
        assert failure.image != "(1, 1, 1)"


def test_corrupted_psi_reports_failures():
    report = verify_well_defined(corrupted_psi_map(3, 1),
                                 LHSampler(seed=21))
    assert any(c.tag == "R2" for c in report.failures)


def test_free_reduction_oracle_reports_unknown():
    # the inclusion has no target word problem: nonempty images are
    # reported as unknown, never as failures
    report = verify_well_defined(inclusion_f_hat(3, 1), LHSampler(seed=2))
    assert report.failures == []
    assert report.unknowns


def test_report_dict_shape():
    report = verify_well_defined(theta_map(2, 1), LHSampler(seed=21))
    payload = report.to_dict()
    assert set(payload) == {"map", "domain", "checked", "passed",
                            "failed", "unknown"}
    assert payload["checked"] == payload["passed"]
