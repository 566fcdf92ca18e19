"""Word algebra and the parser."""

import random

import pytest

from wordmap import (
    ConstLetter,
    EmptyInnerWord,
    Letter,
    Word,
    WordSyntaxError,
    ZeroExponent,
    commutator,
    concat,
    exponent_data,
    invert,
    parse,
    power,
    pure,
    reduce,
    render,
    word,
    zero_exponent_sum_in_y,
)
from wordmap.words import from_items


def test_parse_basic():
    w = parse("x y^-1 x^2")
    assert w.is_pure
    assert w.word == word([(1, 1), (2, -1), (1, 2)])


def test_parse_commutator():
    w = parse("[x,y]")
    assert w.word == word([(1, 1), (2, 1), (1, -1), (2, -1)])
    assert parse("[x^2,y]").word == word([(1, 2), (2, 1), (1, -2), (2, -1)])


def test_parse_nested_commutator():
    w = parse("[ [x,y] , x [x,y] x^-1 ]")
    xy = commutator(word([(1, 1)]), word([(2, 1)]))
    conj = concat(concat(word([(1, 1)]), xy), word([(1, -1)]))
    assert w.word == commutator(xy, conj)


def test_parse_constants():
    w = parse("s1 x s1^-1 x^-1")
    assert not w.is_pure
    assert w.r == 2
    assert w.constant_names() == ["s1"]
    assert w.constants[0] == ConstLetter("s1", False)
    assert w.constants[1] == ConstLetter("s1", True)
    assert w.words[1] == word([(1, 1)])


def test_parse_power_and_parens():
    assert parse("(x y)^2").word == word([(1, 1), (2, 1), (1, 1), (2, 1)])
    assert parse("x^-3").word == word([(1, -3)])
    with pytest.raises(ZeroExponent):
        parse("x^0")


def test_parse_generators():
    w = parse("x4 z y")
    assert w.word == word([(4, 1), (3, 1), (2, 1)])


def test_parse_errors():
    with pytest.raises(WordSyntaxError):
        parse("[x,y")
    with pytest.raises(WordSyntaxError):
        parse("x )")
    with pytest.raises(WordSyntaxError):
        parse("x ^")


def test_empty_inner_word_rejected():
    with pytest.raises(EmptyInnerWord):
        parse("s1 s2")
    with pytest.raises(EmptyInnerWord):
        parse("s1^2 x")  # expands to s1 s1 x with an empty inner word
    # constants at the ends are fine
    w = parse("s1 x s2")
    assert w.r == 2


def test_reduction():
    assert parse("x x^-1").word == Word()
    assert parse("x y y^-1 x").word == word([(1, 2)])
    w = word([(1, 1), (1, -1), (2, 3), (2, -3)])
    assert w.is_identity()
    assert reduce(w) == w


def test_free_group_identities():
    rng = random.Random(5)
    for _ in range(100):
        u = word([(rng.randint(1, 3), rng.choice([1, -1, 2])) for _ in range(5)])
        v = word([(rng.randint(1, 3), rng.choice([1, -1, 2])) for _ in range(5)])
        assert concat(u, invert(u)).is_identity()
        assert invert(invert(u)) == u
        assert invert(concat(u, v)) == concat(invert(v), invert(u))
        assert power(u, 3) == concat(u, concat(u, u))
        assert commutator(u, u).is_identity()


def test_render_round_trip():
    rng = random.Random(6)
    texts = ["[x,y]", "x^2 y^-1", "s1 x s1^-1 x^-1", "x x^-1", "[ [x,y] , x [x,y] x^-1 ]"]
    for t in texts:
        w = parse(t)
        assert parse(render(w)) == w
    for _ in range(100):
        w = pure(word([(rng.randint(1, 4), rng.choice([1, -1, 2, -3])) for _ in range(6)]))
        assert parse(render(w)) == w


def test_zero_exponent_sum_in_y():
    assert zero_exponent_sum_in_y(parse("[x,y]").word)
    assert zero_exponent_sum_in_y(parse("[[x,y],y]").word)  # Engel word
    assert not zero_exponent_sum_in_y(parse("x y").word)


def test_exponent_data_sect2_word():
    w = parse("s1 x s1^-1 x^-1")
    data = exponent_data(w, 2)
    assert data.a == 1 and data.b == 1
    assert data.degrees == {1: 2}
    assert data.total_degree == 2


def test_exponent_data_degrees():
    w = parse("x^3 y^-2 x^-1")
    data = exponent_data(w, 3)
    assert data.a == 3 and data.b == 3
    assert data.a_pos == {1: 3} and data.b_neg == {1: 1, 2: 2}
    # d_r = a_r+ + (n-1) b_r
    assert data.degrees == {1: 3 + 2 * 1, 2: 0 + 2 * 2}
    assert data.total_degree == 3 + 2 * 3


def test_word_with_constants_shape():
    w = parse("x s1 y s2 z")
    assert w.r == 2
    assert w.max_generator() == 3
    assert w.total_length() == 5
    items = [Letter(1, 1), ConstLetter("a"), Letter(2, 1)]
    assert from_items(items).r == 1
