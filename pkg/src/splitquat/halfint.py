"""Exact half-integers, stored as doubled integers.

Index parameters (l, m, n) of the matrix coefficients live in (1/2)Z with
parity constraints; storing 2x the value keeps every parity check exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


@total_ordering
class HalfInt:
    """An element of (1/2)Z."""

    __slots__ = ("doubled",)

    def __init__(self, doubled: int):
        if not isinstance(doubled, int):
            raise TypeError("HalfInt stores 2x the value as an int")
        self.doubled = doubled

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Coerce an int, Fraction or exact float k/2 to a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        f = Fraction(value)
        if f.denominator not in (1, 2):
            raise ValueError(f"{value!r} is not a half-integer")
        return cls(int(f * 2))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        return HalfInt(self.doubled + HalfInt.of(other).doubled)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.doubled - HalfInt.of(other).doubled)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).doubled - self.doubled)

    def __neg__(self):
        return HalfInt(-self.doubled)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfInt(self.doubled * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.doubled == HalfInt.of(other).doubled
        except (ValueError, TypeError):
            return NotImplemented

    def __lt__(self, other):
        return self.doubled < HalfInt.of(other).doubled

    def __hash__(self):
        return hash(("HalfInt", self.doubled))

    # -- views --------------------------------------------------------
    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def same_parity(self, other: "HalfInt") -> bool:
        return (self.doubled - HalfInt.of(other).doubled) % 2 == 0

    def as_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def __float__(self):
        return self.doubled / 2.0

    def __complex__(self):
        return complex(self.doubled / 2.0)

    def __repr__(self):
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


def half(doubled: int) -> HalfInt:
    """Shorthand constructor from the doubled value."""
    return HalfInt(doubled)
