"""Closed intervals with exact rational endpoints.

Arithmetic on :class:`Interval` is exact on the endpoints, so every result
encloses the true image. Irrational quantities (roots, pi, sines) enter only
through the enclosure functions below, each of which takes a precision in
bits and returns an interval of width at most about ``2**-bits`` relative to
the magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import gmpy2

Number = Union[int, Fraction]
IntervalLike = Union["Interval", int, Fraction]


def _frac(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, slots=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: Number) -> Interval:
        return cls(x, x)

    @classmethod
    def coerce(cls, x: IntervalLike) -> Interval:
        if isinstance(x, Interval):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.point(x)
        raise TypeError(f"cannot make an interval from {x!r}")

    # lattice / inspection

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x: object) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, (int, Fraction)):
            return self.lo <= x <= self.hi
        return NotImplemented

    def hull(self, other: IntervalLike) -> Interval:
        o = Interval.coerce(other)
        return Interval(min(self.lo, o.lo), max(self.hi, o.hi))

    def intersect(self, other: IntervalLike) -> Interval:
        o = Interval.coerce(other)
        return Interval(max(self.lo, o.lo), min(self.hi, o.hi))

    def rounded(self, bits: int) -> Interval:
        """Outward rounding to denominators ``2**bits`` (keeps endpoint sizes bounded)."""
        scale = 1 << bits
        lo = Fraction(math.floor(self.lo * scale), scale)
        hi = Fraction(math.ceil(self.hi * scale), scale)
        return Interval(lo, hi)

    # arithmetic

    def __add__(self, other: IntervalLike) -> Interval:
        o = Interval.coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: IntervalLike) -> Interval:
        return self + (-Interval.coerce(other))

    def __rsub__(self, other: IntervalLike) -> Interval:
        return Interval.coerce(other) - self

    def __mul__(self, other: IntervalLike) -> Interval:
        o = Interval.coerce(other)
        ends = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ends), max(ends))

    __rmul__ = __mul__

    def reciprocal(self) -> Interval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval {self} contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: IntervalLike) -> Interval:
        return self * Interval.coerce(other).reciprocal()

    def __rtruediv__(self, other: IntervalLike) -> Interval:
        return Interval.coerce(other) * self.reciprocal()

    def __pow__(self, k: int) -> Interval:
        if k < 0:
            return (self ** -k).reciprocal()
        if k == 0:
            return Interval.point(1)
        a, b = self.lo ** k, self.hi ** k
        if k % 2 == 0 and self.lo <= 0 <= self.hi:
            return Interval(0, max(a, b))
        return Interval(min(a, b), max(a, b))

    def __abs__(self) -> Interval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(0, max(-self.lo, self.hi))

    # certain comparisons: True only when every point satisfies the relation

    def certainly_gt(self, other: IntervalLike) -> bool:
        return self.lo > Interval.coerce(other).hi

    def certainly_lt(self, other: IntervalLike) -> bool:
        return self.hi < Interval.coerce(other).lo

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"

    def to_floats(self) -> tuple[float, float]:
        return float(self.lo), float(self.hi)


def root(x: Number, n: int, bits: int = 64) -> Interval:
    """Enclosure of the real ``n``-th root of ``x >= 0``."""
    x = _frac(x)
    if x < 0:
        raise ValueError("root of a negative number")
    if n < 1:
        raise ValueError("root index must be positive")
    scale = 1 << bits
    m = x.numerator * scale ** n // x.denominator
    r, exact = gmpy2.iroot(m, n)
    r = int(r)
    if exact and m * x.denominator == x.numerator * scale ** n:
        return Interval.point(Fraction(r, scale))
    return Interval(Fraction(r, scale), Fraction(r + 1, scale))


def root_interval(x: IntervalLike, n: int, bits: int = 64) -> Interval:
    x = Interval.coerce(x)
    return Interval(root(x.lo, n, bits).lo, root(x.hi, n, bits).hi)


def rational_power(x: Number, num: int, den: int, bits: int = 64) -> Interval:
    """Enclosure of ``x**(num/den)`` for rational ``x > 0``."""
    x = _frac(x)
    if x <= 0:
        raise ValueError("base must be positive")
    if num < 0:
        return rational_power(1 / x, -num, den, bits)
    return root(x ** num, den, bits)


def rational_power_interval(x: IntervalLike, num: int, den: int, bits: int = 64) -> Interval:
    x = Interval.coerce(x)
    a = rational_power(x.lo, num, den, bits)
    b = rational_power(x.hi, num, den, bits)
    return a.hull(b)


def _arctan_inv(m: int, bits: int) -> Interval:
    # alternating series for atan(1/m); consecutive partial sums bracket the limit
    eps = Fraction(1, 1 << (bits + 4))
    total = Fraction(0)
    k = 0
    while True:
        term = Fraction(1, (2 * k + 1) * m ** (2 * k + 1))
        nxt = total + term if k % 2 == 0 else total - term
        if term < eps:
            return Interval(min(total, nxt), max(total, nxt))
        total = nxt
        k += 1


@lru_cache(maxsize=32)
def pi_interval(bits: int = 64) -> Interval:
    """Machin's formula ``pi = 16 atan(1/5) - 4 atan(1/239)``."""
    return (16 * _arctan_inv(5, bits) - 4 * _arctan_inv(239, bits)).rounded(bits + 2)


def _sin_point(t: Fraction, bits: int) -> Interval:
    # Taylor polynomial plus Lagrange remainder, valid for any real t
    eps = Fraction(1, 1 << (bits + 4))
    total = Fraction(0)
    term = t
    k = 0
    while True:
        total += term
        k += 1
        term = -term * t * t / ((2 * k) * (2 * k + 1))
        if abs(term) < eps:
            rem = abs(term)
            return Interval(total - rem, total + rem)


def sin_pi_fraction(r: Number, bits: int = 64) -> Interval:
    """Enclosure of ``sin(pi * r)`` for rational ``r``.

    The argument is folded exactly into ``[0, 1/2]`` before pi is used, so the
    evaluation only ever sees the increasing branch of sine.
    """
    f = _frac(r) % 2
    sign = 1
    if f >= 1:
        sign, f = -1, f - 1
    if f > Fraction(1, 2):
        f = 1 - f
    if f == 0:
        return Interval.point(0)
    if f == Fraction(1, 2):
        return Interval.point(sign)
    x = (pi_interval(bits) * f).rounded(bits + 2)
    lo = _sin_point(x.lo, bits).lo
    hi = min(_sin_point(x.hi, bits).hi, Fraction(1))
    out = Interval(max(lo, Fraction(0)), hi).rounded(bits + 4)
    return out if sign > 0 else -out
