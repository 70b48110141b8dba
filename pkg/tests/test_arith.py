from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplexcover.arith import (
    ParseError,
    perm_identity,
    perm_inverse,
    perm_position,
    point_format,
    point_parse,
    rank_descending,
    rat_floor,
    rat_format,
    rat_parse,
)


def test_rat_parse_examples():
    assert rat_parse("1/4") == Fraction(1, 4)
    assert rat_parse("2/4") == Fraction(1, 2)
    assert rat_format(rat_parse("9/4")) == "9/4"
    assert rat_parse("-1/2") == Fraction(-1, 2)
    assert rat_parse("3") == Fraction(3)


@pytest.mark.parametrize("bad", ["", "1.5", "1/0", "a/b", "1/ 2", "+3", "1/-2", "--1"])
def test_rat_parse_rejects(bad):
    with pytest.raises(ParseError):
        rat_parse(bad)


def test_rat_floor_examples():
    assert rat_floor(Fraction(7, 6)) == 1
    assert rat_floor(Fraction(-1, 2)) == -1
    assert rat_floor(Fraction(3)) == 3


@given(st.fractions())
def test_rat_floor_bound(r):
    f = rat_floor(r)
    assert f <= r < f + 1


@given(st.fractions(), st.fractions())
def test_exact_addition_roundtrip(a, b):
    assert (a + b) - b == a


@given(st.fractions())
def test_rat_format_parse_roundtrip(r):
    assert rat_parse(rat_format(r)) == r


def test_point_parse_examples():
    assert point_parse("9/4,1/2", 2) == (Fraction(9, 4), Fraction(1, 2))
    assert point_parse("1,1,1", 3) == (Fraction(1), Fraction(1), Fraction(1))
    with pytest.raises(ParseError):
        point_parse("1/2", 2)


@given(st.lists(st.fractions(), min_size=1, max_size=6))
def test_point_roundtrip(coords):
    p = tuple(coords)
    assert point_parse(point_format(p), len(p)) == p


def test_perm_helpers():
    assert perm_identity(3) == (1, 2, 3)
    perm = (2, 3, 1)
    inv = perm_inverse(perm)
    for j in (1, 2, 3):
        assert perm[perm_position(perm, j) - 1] == j
        assert inv[j - 1] == perm_position(perm, j)


def test_rank_descending_breaks_ties_by_index():
    w = [Fraction(1, 2), Fraction(3, 4), Fraction(1, 2)]
    assert rank_descending(w) == (2, 1, 3)
    assert rank_descending([Fraction(0)] * 4 ) == (1, 2, 3, 4)


@given(st.lists(st.fractions(max_denominator=20), min_size=1, max_size=7))
def test_rank_descending_sorts(values):
    perm = rank_descending(values)
    ordered = [values[j - 1] for j in perm]
    assert ordered == sorted(values, reverse=True)
    for a, b in zip(perm, perm[1:]):
        if values[a - 1] == values[b - 1]:
            assert a < b
