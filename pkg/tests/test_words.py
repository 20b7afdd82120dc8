"""Word calculus: reduction, inversion, parsing, substitution."""

import random

import pytest

from braidlab import (
    Family,
    GroupContext,
    MissingImageError,
    ParseError,
    Word,
    WordError,
    admissible_letters,
    big_t,
    commutator,
    concat,
    cyclic_reduce,
    expand_abbreviations,
    format_word,
    free_reduce,
    free_x,
    invert,
    parse_word,
    sigma,
    substitute,
    surf_a,
)
from braidlab.words import generator_alphabet

FREE3 = GroupContext.free(3)


def w(text, ctx=FREE3):
    return parse_word(text, ctx)


def random_raw_word(ctx, length, rng):
    pool = admissible_letters(ctx)
    letters = []
    for _ in range(length):
        letter = rng.choice(pool)
        letters.append(letter if rng.random() < 0.5 else letter.inv)
    return Word(ctx, letters)


def some_contexts():
    return [
        GroupContext.free(4),
        GroupContext.pi1(1),
        GroupContext.pi1(2),
        GroupContext.bn(3, 1),
        GroupContext.bn(4, 2),
        GroupContext.bn(3, 0),
        GroupContext.pbn(3, 2),
        GroupContext.pbn(4, 0),
        GroupContext.hat_pbn(3, 1),
        GroupContext.hat_pbn(3, 0),
        GroupContext.hat_bn(4, 2),
    ]


# -- free reduction and group laws ------------------------------------

def test_free_reduce_cancellation():
    assert w("x1 x1^-1 x2") == w("x2")


def test_free_reduce_empty():
    assert w("").is_identity


def test_free_reduce_inner():
    assert w("x1 x2 x2^-1 x1") == w("x1 x1")


def test_free_reduce_idempotent():
    rng = random.Random(1)
    for ctx in some_contexts():
        for _ in range(50):
            word = random_raw_word(ctx, rng.randint(0, 20), rng)
            assert free_reduce(word) == word


def test_invert_definition():
    assert invert(w("x1 x2")) == w("x2^-1 x1^-1")
    assert invert(w("")).is_identity
    assert invert(w("s1 s2^2", GroupContext.bn(3, 0))) == \
        w("s2^-1 s2^-1 s1^-1", GroupContext.bn(3, 0))


def test_concat_examples():
    assert concat(w("x1"), w("x1^-1")).is_identity
    bn = GroupContext.bn(3, 0)
    assert concat(w("s1", bn), w("s2", bn)) == w("s1 s2", bn)
    ctx = GroupContext.pbn(2, 1)
    assert concat(w("a1.1", ctx), Word.identity(ctx)) == w("a1.1", ctx)


def test_group_laws_randomized():
    rng = random.Random(7)
    for ctx in some_contexts():
        for _ in range(40):
            u = random_raw_word(ctx, rng.randint(0, 12), rng)
            v = random_raw_word(ctx, rng.randint(0, 12), rng)
            z = random_raw_word(ctx, rng.randint(0, 12), rng)
            assert (u * u.inverse()).is_identity
            assert (u * v) * z == u * (v * z)
            assert (u * v).inverse() == v.inverse() * u.inverse()


def test_context_mismatch_rejected():
    with pytest.raises(WordError):
        concat(w("x1"), w("x1", GroupContext.free(5)))


def test_power_and_commutator():
    assert w("x1") ** 3 == w("x1 x1 x1")
    assert w("x1") ** -2 == w("x1^-1 x1^-1")
    assert commutator(w("x1"), w("x2")) == w("x1 x2 x1^-1 x2^-1")


# -- cyclic reduction --------------------------------------------------

def test_cyclic_reduce_examples():
    core, conj = cyclic_reduce(w("x1 x2 x1^-1"))
    assert core == w("x2") and conj == w("x1")
    core, conj = cyclic_reduce(w("x1 x2"))
    assert core == w("x1 x2") and conj.is_identity
    core, conj = cyclic_reduce(w("x1^-1 x2 x2 x1"))
    assert core == w("x2 x2") and conj == w("x1^-1")


def test_cyclic_reduce_reassembles():
    rng = random.Random(3)
    for _ in range(200):
        word = random_raw_word(FREE3, rng.randint(0, 16), rng)
        core, conj = cyclic_reduce(word)
        assert conj * core * conj.inverse() == word
        if len(core) >= 2:
            assert core.letters[0] != core.letters[-1].inv


# -- substitution ------------------------------------------------------

def test_substitute_kills_trivial_word():
    images = {free_x(1): w("x2 x2"), free_x(2): w("x1")}
    bn = GroupContext.bn(2, 0)
    assert substitute(w("s1 s1^-1", bn),
                      {sigma(1): w("x1")}, FREE3).is_identity
    assert substitute(w("x1 x2"), images, FREE3) == w("x2 x2 x1")


def test_substitute_is_homomorphism():
    rng = random.Random(11)
    images = {free_x(i): random_raw_word(FREE3, rng.randint(0, 5), rng)
              for i in (1, 2, 3)}
    for _ in range(100):
        u = random_raw_word(FREE3, rng.randint(0, 10), rng)
        v = random_raw_word(FREE3, rng.randint(0, 10), rng)
        assert substitute(u * v, images, FREE3) == \
            substitute(u, images, FREE3) * substitute(v, images, FREE3)
        assert substitute(u.inverse(), images, FREE3) == \
            substitute(u, images, FREE3).inverse()


def test_substitute_missing_image():
    with pytest.raises(MissingImageError):
        substitute(w("x1 x3"), {free_x(1): w("x1")}, FREE3)


def test_substitute_sigma_expansion_of_band_generator():
    # T_{1,3} under the sigma table gives s1 s2 s2 s1.
    bn3 = GroupContext.bn(3, 0)
    images = {big_t(i, j): expand_abbreviations(Word(bn3, [big_t(i, j)]))
              for i in (1, 2) for j in range(i + 1, 4)}
    image = substitute(Word(GroupContext.pbn(3, 0), [big_t(1, 3)]),
                       images, bn3)
    assert image == w("s1 s2 s2 s1", bn3)


# -- parsing and formatting -------------------------------------------

def test_parse_examples():
    bn3 = GroupContext.bn(3, 0)
    assert w("s1 s2^-1", bn3) == Word(bn3, [sigma(1), sigma(2, -1)])
    ctx = GroupContext.pbn(2, 1)
    assert w("a1.2^3", ctx) == Word(ctx, [surf_a(1, 2)] * 3)
    assert w("[x1,x2]") == Word(FREE3, [free_x(1), free_x(2),
                                        free_x(1, -1), free_x(2, -1)])


def test_parse_nested_commutator():
    assert w("[x1,[x2,x3]]") == commutator(w("x1"), commutator(w("x2"),
                                                               w("x3")))


def test_parse_pi1_single_index():
    ctx = GroupContext.pi1(2)
    word = parse_word("a1 a4^-1", ctx)
    assert word.letters == (surf_a(1, 1), surf_a(1, 4, -1))
    assert format_word(word) == "a1 a4^-1"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_word("x1 ?", FREE3)
    assert err.value.position == 3
    with pytest.raises(ParseError):
        parse_word("x9", FREE3)            # index out of range
    with pytest.raises(ParseError):
        parse_word("[x1 x2", FREE3)        # unclosed commutator
    with pytest.raises(ParseError):
        parse_word("x1^9999999", FREE3)    # exponent guard
    with pytest.raises(ParseError):
        parse_word("a1", GroupContext.pbn(2, 1))  # needs two indices


def test_letter_validation_per_context():
    with pytest.raises(WordError):
        Word(GroupContext.pbn(3, 1), [sigma(1)])
    with pytest.raises(WordError):
        Word(GroupContext.bn(3, 0), [surf_a(1, 1)])
    with pytest.raises(WordError):
        Word(GroupContext.free(2), [free_x(3)])
    with pytest.raises(WordError):
        GroupContext.pi1(0)


def test_roundtrip_randomized_corpus():
    rng = random.Random(2024)
    contexts = some_contexts()
    for _ in range(10_000):
        ctx = rng.choice(contexts)
        word = random_raw_word(ctx, rng.randint(0, 14), rng)
        assert parse_word(format_word(word), ctx) == word


# -- abbreviation expansion -------------------------------------------

def test_expansion_lands_in_generator_alphabet():
    rng = random.Random(5)
    for ctx in some_contexts():
        generator_kinds = {l.kind for l in generator_alphabet(ctx)}
        for _ in range(40):
            word = random_raw_word(ctx, rng.randint(0, 10), rng)
            expanded = expand_abbreviations(word)
            assert {l.kind for l in expanded.letters} <= generator_kinds
            assert expand_abbreviations(expanded) == expanded


def test_expansion_is_multiplicative():
    rng = random.Random(6)
    for ctx in (GroupContext.hat_pbn(3, 2), GroupContext.bn(4, 1)):
        for _ in range(60):
            u = random_raw_word(ctx, rng.randint(0, 8), rng)
            v = random_raw_word(ctx, rng.randint(0, 8), rng)
            assert expand_abbreviations(u * v) == \
                expand_abbreviations(u) * expand_abbreviations(v)
