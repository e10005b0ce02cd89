from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orthorep.exact import HalfInt, NotAnInteger, binom, half_sum, half_to_int, parse_half, to_fraction


@pytest.mark.parametrize("p,q,expected", [(4, 3, 4), (2, 3, 0), (7, 2, 21), (-3, 2, 0), (0, 0, 1)])
def test_binom_values(p, q, expected):
    assert binom(p, q) == expected


def test_binom_rejects_negative_bottom():
    with pytest.raises(ValueError):
        binom(3, -1)


@given(st.integers(1, 60), st.integers(1, 60))
def test_pascal_rule_with_zero_extension(p, q):
    assert binom(p, q) == binom(p - 1, q - 1) + binom(p - 1, q)


def test_half_sum_examples():
    assert half_sum(parse_half("1/2"), parse_half("1/2")) == 1
    assert half_sum(parse_half("3/2"), parse_half("-1/2")) == 1


def test_half_to_int_rejects_half():
    with pytest.raises(NotAnInteger):
        half_to_int(parse_half("5/2"))
    assert half_to_int(HalfInt.of(3)) == 3


def test_halfint_parsing_and_printing():
    h = parse_half("-3/2")
    assert h.twice == -3 and str(h) == "-3/2"
    assert to_fraction(h) == Fraction(-3, 2)
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


@given(st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_halfint_arithmetic_matches_fractions(a, b):
    x, y = HalfInt(a), HalfInt(b)
    assert (x + y).to_fraction() == Fraction(a, 2) + Fraction(b, 2)
    assert (x - y).to_fraction() == Fraction(a, 2) - Fraction(b, 2)
    assert (x < y) == (a < b)
    assert x.is_integer() == (a % 2 == 0)
