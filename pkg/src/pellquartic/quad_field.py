"""Exact arithmetic in the quadratic field Q(sqrt(d)).

Elements are ``a + b*sqrt(d)`` with ``a`` and ``b`` arbitrary-precision
rationals. Values are immutable; every operation returns a new element.

>>> u = QuadElem(3, 2, 2)
>>> u * u.conj()
QuadElem(1, 0, 2)
>>> str(QuadElem(Fraction(3, 2), Fraction(1, 4), 2))
'3/2 + 1/4*sqrt(2)'
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

# Fraction already keeps num/den reduced with den > 0.
Rational = Fraction

Scalar = Union[int, Fraction]


class RadicandMismatch(ValueError):
    pass


class CollapseError(ArithmeticError):
    """A field element expected to be a rational integer is not one."""


def _as_rational(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class QuadElem:
    __slots__ = ("a", "b", "d")

    a: Fraction
    b: Fraction
    d: int

    def __init__(self, a: Scalar = 0, b: Scalar = 0, d: int = 2) -> None:
        if not isinstance(d, int) or d < 2:
            raise ValueError(f"radicand must be an integer >= 2, got {d!r}")
        if math.isqrt(d) ** 2 == d:
            raise ValueError(f"radicand {d} is a perfect square")
        object.__setattr__(self, "a", _as_rational(a))
        object.__setattr__(self, "b", _as_rational(b))
        object.__setattr__(self, "d", d)

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> QuadElem:
        # skips validation; d was checked when the operands were built
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "d", d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QuadElem is immutable")

    def _coerce(self, other) -> QuadElem:
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise RadicandMismatch(
                    f"cannot combine sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem._raw(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    # ring operations

    def __add__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem._raw(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem._raw(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self) -> QuadElem:
        return QuadElem._raw(-self.a, -self.b, self.d)

    def __mul__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        return QuadElem._raw(a1 * a2 + self.d * b1 * b2, a1 * b2 + a2 * b1, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other) -> QuadElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, n: int) -> QuadElem:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** -n
        result = QuadElem._raw(Fraction(1), Fraction(0), self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # field structure

    def conj(self) -> QuadElem:
        return QuadElem._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inv(self) -> QuadElem:
        n = self.norm()
        if n == 0:
            # d is nonsquare, so the norm only vanishes at zero
            raise ZeroDivisionError("inverse of zero in Q(sqrt(d))")
        return QuadElem._raw(self.a / n, -self.b / n, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def as_integer(self) -> int:
        if self.b != 0:
            raise CollapseError(f"nonzero irrational part in {self}")
        if self.a.denominator != 1:
            raise CollapseError(f"non-integral rational part in {self}")
        return self.a.numerator

    # comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        return f"QuadElem({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.d})"


# Functional spellings of the operations above.


def qadd(u: QuadElem, v: QuadElem) -> QuadElem:
    return u + v


def qmul(u: QuadElem, v: QuadElem) -> QuadElem:
    return u * v


def qconj(u: QuadElem) -> QuadElem:
    return u.conj()


def qnorm(u: QuadElem) -> Fraction:
    return u.norm()


def qinv(u: QuadElem) -> QuadElem:
    return u.inv()


def qpow(u: QuadElem, n: int) -> QuadElem:
    """``u**n`` by binary exponentiation; ``u**0 == 1`` and negative ``n`` inverts."""
    return u**n


def as_integer(u: QuadElem) -> int:
    return u.as_integer()


def sqrt_d(d: int) -> QuadElem:
    return QuadElem(0, 1, d)
