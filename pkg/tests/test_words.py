"""Word normalization, parsing, serialization, and fast evaluation."""

import functools
import operator
import random

import pytest

from picard31.errors import WordParseError
from picard31.hermitian import identity
from picard31.words import (DecompositionResult, Generator, Word, evaluate,
                            generator_power, normalize, parse, serialize)

GENS = tuple(Generator)
EXPS = (-3, -2, -1, 1, 2, 3)


def random_word(rng, max_len=20):
    return Word(tuple((rng.choice(GENS), rng.choice(EXPS))
                      for _ in range(rng.randint(0, max_len))))


def generic_evaluate(word):
    """Reference product over single-generator closed forms."""
    return functools.reduce(operator.mul,
                            (generator_power(g, e) for g, e in word),
                            identity())


def test_generator_power_matches_repeated_product():
    for gen in GENS:
        one = generator_power(gen, 1)
        acc = identity()
        for e in range(9):
            assert generator_power(gen, e) == acc
            assert generator_power(gen, -e) == acc.inverse()
            acc = acc * one


def test_generator_orders():
    I = identity()
    assert generator_power(Generator.A, 2) == I
    assert generator_power(Generator.B, 6) == I
    assert generator_power(Generator.R, 2) == I
    for j in range(1, 6):
        assert generator_power(Generator.B, j) != I
    for j in range(1, 13):
        # N has infinite order; sample a prefix of the powers.
        assert generator_power(Generator.N, j) != I


def test_evaluate_matches_generic_product():
    rng = random.Random(1)
    for _ in range(300):
        w = random_word(rng)
        assert evaluate(w) == generic_evaluate(w)


def test_evaluate_empty():
    assert evaluate(Word()) == identity()


def test_evaluate_inverse_word():
    rng = random.Random(2)
    for _ in range(100):
        w = random_word(rng)
        assert evaluate(w.inverse()) == evaluate(w).inverse()


def test_normalize_preserves_value():
    rng = random.Random(3)
    for _ in range(200):
        w = random_word(rng)
        assert evaluate(normalize(w)) == evaluate(w)


def test_normalize_merges_and_cancels():
    w = Word(((Generator.N, 2), (Generator.N, 3)))
    assert normalize(w).items == ((Generator.N, 5),)
    w = Word(((Generator.A, 1), (Generator.A, 1)))
    assert normalize(w).items == ()
    # Cancellation in the middle exposes a second cancellation.
    w = Word(((Generator.A, 1), (Generator.B, 1), (Generator.B, 5),
              (Generator.A, 1)))
    assert normalize(w).items == ()
    w = Word(((Generator.N, 2), (Generator.N, -2), (Generator.R, 1)))
    assert normalize(w).items == ((Generator.R, 1),)


def test_normalize_canonical_exponents():
    assert normalize(Word(((Generator.B, 4),))).items == ((Generator.B, -2),)
    assert normalize(Word(((Generator.B, -3),))).items == ((Generator.B, 3),)
    assert normalize(Word(((Generator.A, -1),))).items == ((Generator.A, 1),)
    assert normalize(Word(((Generator.R, 3),))).items == ((Generator.R, 1),)
    rng = random.Random(4)
    for _ in range(200):
        for gen, exp in normalize(random_word(rng)).items:
            assert exp != 0
            if gen is Generator.B:
                assert -2 <= exp <= 3
            elif gen is not Generator.N:
                assert exp == 1


def test_parse_serialize_round_trip():
    rng = random.Random(5)
    for _ in range(200):
        w = normalize(random_word(rng))
        assert parse(serialize(w)) == w


def test_parse_whitespace_and_exponents():
    assert parse("") == Word()
    assert parse("  \n") == Word()
    assert parse("N^+2") == Word(((Generator.N, 2),))
    assert parse("N A  B^-2\nR") == Word(((Generator.N, 1), (Generator.A, 1),
                                          (Generator.B, -2), (Generator.R, 1)))
    # Parsing normalizes.
    assert parse("A A") == Word()
    assert parse("N N^-1") == Word()
    assert parse("B^7") == Word(((Generator.B, 1),))


def test_parse_errors_carry_byte_offsets():
    with pytest.raises(WordParseError) as info:
        parse("N^2 X")
    assert info.value.offset == 4
    with pytest.raises(WordParseError) as info:
        parse("N^")
    assert info.value.offset == 2
    with pytest.raises(WordParseError) as info:
        parse("N^-")
    assert info.value.offset == 3
    with pytest.raises(WordParseError) as info:
        parse("x")
    assert info.value.offset == 0
    assert "byte" in str(info.value)


def test_word_multiplication():
    x = parse("N^2 A")
    y = parse("A B")
    assert x * y == parse("N^2 B")
    assert serialize(x * y) == "N^2 B"


def test_syllable_length():
    assert parse("N^-3 A B^2").syllable_length() == 6
    assert Word().syllable_length() == 0


def test_decomposition_result_json():
    from picard31.eisenstein import EisensteinInt

    res = DecompositionResult(unit=EisensteinInt(0, -1), word=parse("N^2 R A"))
    obj = res.to_json()
    assert obj == {"unit": [0, -1], "word": "N^2 R A"}
    assert DecompositionResult.from_json(obj) == res
