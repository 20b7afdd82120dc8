"""Reduced free group, Magnus expansion, reduced Artin action."""

import random

import pytest

from braidlab import (
    GroupContext,
    MultilinearSeries,
    Verdict,
    Word,
    WordError,
    artin_act,
    artin_series,
    big_t,
    commutator,
    format_word,
    free_x,
    lh_trivial_disk,
    magnus_expand,
    parse_word,
    random_reduced_word,
    rf_is_trivial,
    sample_hn_element,
)

F2 = GroupContext.free(2)
F3 = GroupContext.free(3)


def pw(text, ctx=F2):
    return parse_word(text, ctx)


def dense_product(rank, factors):
    """Independent oracle: multiply letter series pair-by-pair with the
    generic ring product, no incremental shortcut."""
    out = MultilinearSeries.one(rank)
    for i, sign in factors:
        out = out * MultilinearSeries(rank, {(): 1, (i,): sign})
    return out


# -- expansion ----------------------------------------------------------

def test_generator_expansion():
    assert magnus_expand(pw("x1")).terms == {(): 1, (1,): 1}
    assert magnus_expand(pw("x1^-1")).terms == {(): 1, (1,): -1}


def test_commutator_expansion_against_dense_oracle():
    oracle = dense_product(2, [(1, 1), (2, 1), (1, -1), (2, -1)])
    assert oracle.terms == {(): 1, (1, 2): 1, (2, 1): -1}
    assert magnus_expand(pw("[x1,x2]")) == oracle


def test_inverse_is_exact():
    series = magnus_expand(pw("x1^-1")) * magnus_expand(pw("x1"))
    assert series.is_one


def test_no_repeated_indices_and_degree_bound():
    rng = random.Random(0)
    for rank in (2, 3, 4):
        ctx = GroupContext.free(rank)
        for _ in range(80):
            word = random_reduced_word(ctx, rng.randint(0, 12), rng)
            for key in magnus_expand(word).terms:
                assert len(key) == len(set(key)) <= rank


def test_expand_homomorphism_laws():
    rng = random.Random(42)
    for _ in range(500):
        rank = rng.choice((2, 3, 4))
        ctx = GroupContext.free(rank)
        u = random_reduced_word(ctx, rng.randint(0, 8), rng)
        v = random_reduced_word(ctx, rng.randint(0, 8), rng)
        assert magnus_expand(u * v) == magnus_expand(u) * magnus_expand(v)
        assert (magnus_expand(u.inverse()) * magnus_expand(u)).is_one


def test_expand_rejects_non_free_words():
    with pytest.raises(WordError):
        magnus_expand(parse_word("s1", GroupContext.bn(2, 0)))


# -- reduced-free triviality --------------------------------------------

def test_rf_examples():
    assert rf_is_trivial(pw("[x1, x2 x1 x2^-1]")) is Verdict.TRIVIAL
    assert rf_is_trivial(pw("[x1,x2]")) is Verdict.NONTRIVIAL
    assert rf_is_trivial(pw("")) is Verdict.TRIVIAL


def test_rf_generators_nontrivial():
    for rank in (2, 3, 4):
        ctx = GroupContext.free(rank)
        for i in range(1, rank + 1):
            assert rf_is_trivial(Word(ctx, [free_x(i)])) is \
                Verdict.NONTRIVIAL


def test_rf_normal_closure_samples_trivial():
    # products of conjugated [x_i, x_i^h] are trivial in RF(k)
    rng = random.Random(13)
    for k in range(200):
        rank = rng.choice((2, 3))
        ctx = GroupContext.free(rank)
        word = Word.identity(ctx)
        for _ in range(rng.randint(1, 2)):
            i = rng.randint(1, rank)
            x = Word(ctx, [free_x(i)])
            h = random_reduced_word(ctx, rng.randint(1, 3), rng)
            c = random_reduced_word(ctx, rng.randint(0, 3), rng)
            word = word * (commutator(x, h * x * h.inverse())
                           .conjugated_by(c))
        assert rf_is_trivial(word) is Verdict.TRIVIAL, k


# -- Artin action -------------------------------------------------------

def test_sigma_action_on_generators():
    endo = artin_act(parse_word("s1", GroupContext.bn(2, 0)))
    assert format_word(endo.image_of(1)) == "x1 x2 x1^-1"
    assert format_word(endo.image_of(2)) == "x1"


def test_identity_action():
    endo = artin_act(Word.identity(GroupContext.bn(3, 0)))
    assert [format_word(endo.image_of(i)) for i in (1, 2, 3)] == \
        ["x1", "x2", "x3"]


def test_sigma_squared_action():
    endo = artin_act(parse_word("s1^2", GroupContext.bn(2, 0)))
    assert format_word(endo.image_of(1)) == "x1 x2 x1 x2^-1 x1^-1"
    assert format_word(endo.image_of(2)) == "x1 x2 x1^-1"


def test_action_composes_and_inverts():
    ctx = GroupContext.bn(3, 0)
    rng = random.Random(77)
    for _ in range(50):
        word = random_reduced_word(ctx, rng.randint(0, 6), rng)
        endo = artin_act(word * word.inverse())
        assert endo.fixes_all_generators


def test_series_fold_matches_word_action():
    rng = random.Random(5)
    for n in (2, 3, 4):
        ctx = GroupContext.bn(n, 0)
        for _ in range(40):
            word = random_reduced_word(ctx, rng.randint(0, 8), rng)
            assert artin_series(word) == artin_act(word).expansions


def test_action_rejects_surface_words():
    with pytest.raises(WordError):
        artin_act(parse_word("a1.1", GroupContext.pbn(2, 1)))


# -- link-homotopy triviality -------------------------------------------

def test_lh_examples():
    pb3 = GroupContext.pbn(3, 0)
    word = parse_word("[T1.2, T1.3 T1.2 T1.3^-1]", pb3)
    assert lh_trivial_disk(word) is Verdict.TRIVIAL
    assert lh_trivial_disk(Word.identity(pb3)) is Verdict.TRIVIAL
    pb2 = GroupContext.pbn(2, 0)
    assert lh_trivial_disk(parse_word("T1.2", pb2)) is Verdict.NONTRIVIAL


def test_lh_band_generators_nontrivial():
    for n in (2, 3, 4):
        ctx = GroupContext.pbn(n, 0)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                word = Word(ctx, [big_t(i, j)])
                assert lh_trivial_disk(word) is Verdict.NONTRIVIAL


def test_lh_requires_pure_input():
    with pytest.raises(WordError):
        lh_trivial_disk(parse_word("s1", GroupContext.bn(2, 0)))


def test_band_generator_x12_term():
    # the expansion of the image of x1 under T_{1,2} picks up X1X2
    endo = artin_act(Word(GroupContext.pbn(2, 0), [big_t(1, 2)]))
    series = endo.expansions[0]
    assert series.terms.get((1, 2), 0) != 0


# -- sampling -----------------------------------------------------------

def test_samples_are_pure_and_trivial():
    from braidlab import permutation_of
    for n in (2, 3, 4):
        for seed in range(10):
            for size in (0, 1, 2, 3):
                word = sample_hn_element(n, seed, size)
                assert permutation_of(word).is_identity
                assert lh_trivial_disk(word) is Verdict.TRIVIAL


def test_sample_size_zero_is_empty():
    assert sample_hn_element(3, 5, 0).is_identity


def test_sample_determinism_and_pinned_fixture():
    assert sample_hn_element(3, 7, 2) == sample_hn_element(3, 7, 2)
    assert format_word(sample_hn_element(3, 7, 2)) == (
        "T1.3^-1 T1.2 T1.3 T1.2 T1.3^-1 T1.2 T1.3 T1.2^-1 "
        "T1.3^-1 T1.2^-1 T1.2^-1 T1.3")


def test_sample_needs_two_strands():
    with pytest.raises(WordError):
        sample_hn_element(1, 0, 1)
