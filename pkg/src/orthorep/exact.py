"""Exact scalars: half-integers, rational parsing and a zero-extended binomial."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import comb
from typing import Union

__all__ = [
    "NotAnInteger",
    "HalfInt",
    "binom",
    "half_sum",
    "half_to_int",
    "to_fraction",
    "parse_half",
]


class NotAnInteger(ValueError):
    pass


Number = Union[int, Fraction, "HalfInt"]


@total_ordering
class HalfInt:
    """An element of (1/2)Z stored as twice its value."""

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        if not isinstance(twice, int):
            raise TypeError("HalfInt stores an int (twice the value)")
        object.__setattr__(self, "twice", twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, value: Number | str) -> "HalfInt":
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool):
            raise TypeError("bool is not a weight coordinate")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            doubled = 2 * value
            if doubled.denominator != 1:
                raise ValueError(f"{value} is not a half-integer")
            return cls(doubled.numerator)
        raise TypeError(f"cannot convert {type(value).__name__} to HalfInt")

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(self.twice + other.twice)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(self.twice - other.twice)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return HalfInt(other.twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __abs__(self):
        return HalfInt(abs(self.twice))

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.twice == other.twice

    def __lt__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.twice < other.twice

    def __hash__(self):
        return hash(("HalfInt", self.twice))

    def __repr__(self):
        return f"HalfInt({self})"

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def _coerce(value) -> HalfInt | None:
    if isinstance(value, HalfInt):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return HalfInt(2 * value)
    if isinstance(value, Fraction) and (2 * value).denominator == 1:
        return HalfInt((2 * value).numerator)
    return None


def half_sum(a: HalfInt, b: HalfInt) -> HalfInt:
    return HalfInt.of(a) + HalfInt.of(b)


def half_to_int(a: Number) -> int:
    h = HalfInt.of(a)
    if not h.is_integer():
        raise NotAnInteger(f"{h} is not an integer")
    return h.twice // 2


def to_fraction(value: Number | str) -> Fraction:
    if isinstance(value, HalfInt):
        return value.to_fraction()
    return Fraction(value)


def parse_half(text: str) -> HalfInt:
    """Parse "3/2", "-1/2" or "2" into a HalfInt."""
    return HalfInt.of(Fraction(text.strip()))


def binom(p: int, q: int) -> int:
    """C(p, q), extended by zero whenever p < q (negative p included)."""
    if isinstance(p, HalfInt):
        p = half_to_int(p)
    if isinstance(p, Fraction):
        if p.denominator != 1:
            raise NotAnInteger(f"binomial top {p} is not an integer")
        p = p.numerator
    if q < 0:
        raise ValueError("binomial bottom must be nonnegative")
    if p < q:
        return 0
    return comb(p, q)
