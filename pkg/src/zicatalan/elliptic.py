"""The curves y^2 = x^3 + d (d = +-1) over Q(i) and the trace map P -> P + conj(P).

Points are exact: coordinates are :class:`QiNumber` pairs of fractions. The
chord-tangent law is written for ``y^2 = x^3 + a2 x^2 + a4 x + a6`` because
the randomized group-law checks need curves with many rational points; the
public constructors only build the two curves ``d = +1`` and ``d = -1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .gaussian import GaussianInt

QiLike = Union["QiNumber", int, Fraction, GaussianInt]


@dataclass(frozen=True, slots=True)
class QiNumber:
    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, v: QiLike) -> QiNumber:
        if isinstance(v, QiNumber):
            return v
        if isinstance(v, GaussianInt):
            return cls(v.re, v.im)
        if isinstance(v, (int, Fraction)):
            return cls(v)
        raise TypeError(f"cannot interpret {v!r} as an element of Q(i)")

    def __add__(self, o: QiLike) -> QiNumber:
        o = QiNumber.coerce(o)
        return QiNumber(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o: QiLike) -> QiNumber:
        o = QiNumber.coerce(o)
        return QiNumber(self.re - o.re, self.im - o.im)

    def __rsub__(self, o: QiLike) -> QiNumber:
        return QiNumber.coerce(o) - self

    def __mul__(self, o: QiLike) -> QiNumber:
        o = QiNumber.coerce(o)
        return QiNumber(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self) -> QiNumber:
        return QiNumber(-self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> QiNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return QiNumber(self.re / n, -self.im / n)

    def __truediv__(self, o: QiLike) -> QiNumber:
        return self * QiNumber.coerce(o).inverse()

    def __rtruediv__(self, o: QiLike) -> QiNumber:
        return QiNumber.coerce(o) * self.inverse()

    def __pow__(self, k: int) -> QiNumber:
        if k < 0:
            return (self ** -k).inverse()
        out = QiNumber(1)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conj(self) -> QiNumber:
        return QiNumber(self.re, -self.im)

    def is_rational(self) -> bool:
        return self.im == 0

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def to_gaussian(self) -> GaussianInt:
        if not self.is_gaussian_integer():
            raise ValueError(f"{self} is not in Z[i]")
        return GaussianInt(int(self.re), int(self.im))

    def __str__(self) -> str:
        if self.is_gaussian_integer():
            return str(self.to_gaussian())
        if self.im == 0:
            return str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


@dataclass(frozen=True)
class Curve:
    """``y^2 = x^3 + a2 x^2 + a4 x + a6`` over Q(i)."""

    a2: QiNumber
    a4: QiNumber
    a6: QiNumber

    @classmethod
    def mordell(cls, d: int) -> Curve:
        if d not in (1, -1):
            raise ValueError("only the curves y^2 = x^3 + 1 and y^2 = x^3 - 1 are supported")
        return cls(QiNumber(0), QiNumber(0), QiNumber(d))

    @property
    def d(self) -> int | None:
        if self.a2 or self.a4 or not self.a6.is_rational() or self.a6.re not in (1, -1):
            return None
        return int(self.a6.re)

    def rhs(self, x: QiNumber) -> QiNumber:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, x: QiLike, y: QiLike) -> bool:
        x, y = QiNumber.coerce(x), QiNumber.coerce(y)
        return y * y == self.rhs(x)

    def is_real(self) -> bool:
        return self.a2.is_rational() and self.a4.is_rational() and self.a6.is_rational()

    def __str__(self) -> str:
        if self.d is not None:
            return f"y^2 = x^3 {'+' if self.d > 0 else '-'} 1"
        return f"y^2 = x^3 + ({self.a2})x^2 + ({self.a4})x + ({self.a6})"


E_PLUS = Curve.mordell(1)
E_MINUS = Curve.mordell(-1)


@dataclass(frozen=True)
class CurvePoint:
    """An affine point of ``curve`` or, with ``x = y = None``, its point at infinity."""

    curve: Curve
    x: QiNumber | None = None
    y: QiNumber | None = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValueError("give both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", QiNumber.coerce(self.x))
            object.__setattr__(self, "y", QiNumber.coerce(self.y))
            if not self.curve.contains(self.x, self.y):
                raise ValueError(f"({self.x}, {self.y}) is not on {self.curve}")

    @classmethod
    def infinity(cls, curve: Curve) -> CurvePoint:
        return cls(curve)

    @property
    def curve_d(self) -> int | None:
        return self.curve.d

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> CurvePoint:
        if self.is_infinity:
            return self
        return CurvePoint(self.curve, self.x, -self.y)

    def __add__(self, other: CurvePoint) -> CurvePoint:
        return ec_add(self, other)

    def __sub__(self, other: CurvePoint) -> CurvePoint:
        return ec_add(self, -other)

    def __rmul__(self, k: int) -> CurvePoint:
        return scalar_mul(k, self)

    def conj(self) -> CurvePoint:
        if self.is_infinity:
            return self
        curve = self.curve
        if not curve.is_real():
            curve = Curve(curve.a2.conj(), curve.a4.conj(), curve.a6.conj())
        return CurvePoint(curve, self.x.conj(), self.y.conj())

    def is_rational(self) -> bool:
        return self.is_infinity or (self.x.is_rational() and self.y.is_rational())

    def is_integral(self) -> bool:
        return self.is_infinity or (self.x.is_gaussian_integer() and self.y.is_gaussian_integer())

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


def ec_add(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    if P.curve != Q.curve:
        raise ValueError("points lie on different curves")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    E = P.curve
    if P.x == Q.x:
        if P.y == -Q.y:
            # vertical chord, or tangent at a 2-torsion point
            return CurvePoint.infinity(E)
        slope = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope * slope - E.a2 - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return CurvePoint(E, x3, y3)


def scalar_mul(k: int, P: CurvePoint) -> CurvePoint:
    if k < 0:
        return scalar_mul(-k, -P)
    out = CurvePoint.infinity(P.curve)
    base = P
    while k:
        if k & 1:
            out = ec_add(out, base)
        k >>= 1
        if k:
            base = ec_add(base, base)
    return out


def trace(P: CurvePoint) -> CurvePoint:
    """``P + conj(P)``; the result always has rational coordinates."""
    if not P.curve.is_real():
        raise ValueError("the trace map needs a curve defined over Q")
    T = ec_add(P, P.conj())
    if not T.is_rational():
        raise ArithmeticError(f"trace of {P} is not conjugation-fixed")
    return T


def order(P: CurvePoint, limit: int = 12) -> int | None:
    Q = P
    for n in range(1, limit + 1):
        if Q.is_infinity:
            return n
        Q = ec_add(Q, P)
    return None


# torsion of y^2 = x^3 + 1 as listed: R, 2R, ..., 6R = O
LISTED_TORSION = ((2, 3), (0, 1), (-1, 0), (0, -1), (2, -3), None)
TORSION_LABELS = ("R", "2R", "3R", "4R", "5R", "O")


def torsion_points(d: int = 1) -> list[CurvePoint]:
    """``[R, 2R, 3R, 4R, 5R, O]`` for ``R = (2, 3)``, each obtained by repeated addition."""
    if d != 1:
        raise ValueError("the torsion list is only available for y^2 = x^3 + 1")
    R = CurvePoint(E_PLUS, 2, 3)
    points = [R]
    for _ in range(5):
        points.append(ec_add(points[-1], R))
    for P, listed in zip(points, LISTED_TORSION):
        expected = CurvePoint.infinity(E_PLUS) if listed is None else CurvePoint(E_PLUS, *listed)
        if P != expected:
            raise ArithmeticError(f"computed {P}, listed {expected}")
    return points


def torsion_point(label: str) -> CurvePoint:
    return torsion_points()[TORSION_LABELS.index(label)]


def _is_negative_square(disc: int) -> bool:
    return disc < 0 and math.isqrt(-disc) ** 2 == -disc


def fiber_quadratic_4R(m: int) -> tuple[int, bool]:
    """Discriminant of ``x^2 - m^2 x - 2m`` and whether it is minus a nonzero square."""
    if m % 2:
        raise ValueError("the slope sum m must be even for the 4R fiber")
    disc = m ** 4 + 8 * m
    return disc, _is_negative_square(disc)


def fiber_quadratic_3R(m: int) -> tuple[int, bool]:
    """Discriminant of ``x^2 - (m^2+1) x + (1 - m^2)`` and whether it is minus a nonzero square."""
    if m % 2 == 0:
        raise ValueError("m must be odd for the 3R fiber")
    disc = (m * m + 1) ** 2 - 4 * (1 - m * m)
    return disc, _is_negative_square(disc)


class FiberTarget(str, Enum):
    R = "R"
    R2 = "2R"
    R3 = "3R"
    R4 = "4R"
    R5 = "5R"
    INFINITY = "O"


@dataclass(frozen=True)
class FiberResult:
    """Integral points of ``E(i)`` outside ``E(Q)`` whose trace is ``target``."""

    target: FiberTarget
    curve_d: int
    points: tuple[CurvePoint, ...]
    certificate: str
    assumptions: tuple[str, ...] = ()

    @property
    def empty(self) -> bool:
        return not self.points


RANK_ZERO = "E(Q) for y^2 = x^3 + 1 has rank 0 and torsion of order 6 (imported from curve tables)"


def _certify_4R(check_range: int = 1000) -> str:
    # m^4 + 8m = m(m^3 + 8) < 0 only on (-2, 0); |m| >= 2 gives m^4 >= 8|m|
    negative = [m for m in range(-check_range, check_range + 1) if m ** 4 + 8 * m < 0]
    if negative != [-1]:
        raise ArithmeticError(f"negative 4R discriminants at {negative}")
    if any(fiber_quadratic_4R(m)[1] for m in range(-check_range, check_range + 1, 2)):
        raise ArithmeticError("admissible 4R slope found")
    return ("disc = m^4 + 8m = m(m^3 + 8) is negative only for -2 < m < 0; "
            "the one integer there, m = -1, is odd, so no even m gives disc = -s^2 "
            f"(direct scan |m| <= {check_range} agrees)")


def _certify_3R(check_range: int = 1000) -> str:
    # disc = m^4 + 6m^2 - 3 is increasing in |m| and equals 4 at |m| = 1
    discs = [fiber_quadratic_3R(m)[0] for m in range(-check_range + 1, check_range, 2)]
    if min(discs) != 4:
        raise ArithmeticError("3R discriminant minimum is not 4")
    return ("disc = (m^2+1)^2 - 4(1-m^2) = m^4 + 6m^2 - 3 is increasing in |m| "
            "and equals 4 > 0 at |m| = 1, so disc > 0 for every odd m "
            f"(direct scan |m| < {check_range} agrees)")


def _reduction_multiplier(target: str) -> int:
    points = torsion_points()
    P = points[TORSION_LABELS.index(target)]
    four_R = points[3]
    for c in range(1, 6):
        if scalar_mul(c, P) == four_R:
            return c
    raise ArithmeticError(f"no multiple of {target} equals 4R")


def identity_fiber(d: int, bound: int = 20) -> list[CurvePoint]:
    """Nontrivial integral points with ``P = -conj(P)`` that are not in ``E(Q)``.

    Such points are ``(a, i*l)`` with integers ``a`` and ``l != 0``; the search
    runs over ``|a|, |l| <= bound`` and drops points with ``x*y = 0``.
    """
    E = Curve.mordell(d)
    found = []
    for a in range(-bound, bound + 1):
        for l in range(-bound, bound + 1):
            if l == 0 or a == 0:
                continue
            if -l * l == a ** 3 + d:
                found.append(CurvePoint(E, a, QiNumber(0, l)))
    return sorted(found, key=lambda P: (P.x.re, P.x.im, P.y.re, P.y.im))


def fiber_decision(target: FiberTarget | str, d: int = 1, bound: int = 20) -> FiberResult:
    target = FiberTarget(target)
    if target is FiberTarget.INFINITY:
        pts = identity_fiber(d, bound)
        cert = (f"P = -conj(P) forces P = (a, i*l) with a, l in Z; "
                f"integral search |a|, |l| <= {bound} on y^2 = x^3 {'+' if d > 0 else '-'} 1")
        return FiberResult(target, d, tuple(pts), cert)
    if d != 1:
        raise ValueError("fibers over nonzero torsion points are analysed for d = +1 only")
    if target is FiberTarget.R4:
        return FiberResult(target, d, (), _certify_4R(), (RANK_ZERO,))
    if target is FiberTarget.R3:
        return FiberResult(target, d, (), _certify_3R(), (RANK_ZERO,))
    c = _reduction_multiplier(target.value)
    cert = (f"T is a homomorphism and {c}*{target.value} = 4R, so T(P) = {target.value} "
            f"would give T({c}P) = 4R; the 4R fiber is empty ({_certify_4R()})")
    return FiberResult(target, d, (), cert, (RANK_ZERO,))
