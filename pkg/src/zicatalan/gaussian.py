"""Exact arithmetic in the Gaussian integers Z[i]."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator, Union

import gmpy2

IntLike = Union[int, "GaussianInt"]

_TERM = re.compile(r"^([+-]?)(\d*)(i?)$")


@dataclass(frozen=True, slots=True, order=True)
class GaussianInt:
    """An element ``re + im*i`` of Z[i] with Python ``int`` components.

    Ordering is lexicographic on ``(re, im)``; it carries no algebraic
    meaning and exists only so results can be sorted deterministically.
    """

    re: int
    im: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.re, int) or not isinstance(self.im, int):
            # normalise gmpy2.mpz and bools to plain ints
            object.__setattr__(self, "re", int(self.re))
            object.__setattr__(self, "im", int(self.im))

    @classmethod
    def coerce(cls, value: IntLike) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    # rational integers compare equal to their embedding
    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    # ring structure

    def __add__(self, other: IntLike) -> GaussianInt:
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> GaussianInt:
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: IntLike) -> GaussianInt:
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        return GaussianInt.coerce(other) - self

    def __mul__(self, other: IntLike) -> GaussianInt:
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __pos__(self) -> GaussianInt:
        return self

    def __pow__(self, k: int) -> GaussianInt:
        return gpow(self, k)

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
ONE_PLUS_I = GaussianInt(1, 1)
UNITS = (ONE, I, -ONE, -I)


def arith(z: IntLike, w: IntLike | None = None, op: str = "add") -> GaussianInt:
    """Dispatch a ring operation by name (``add``, ``sub``, ``mul``, ``neg``, ``conj``)."""
    z = GaussianInt.coerce(z)
    if op == "neg":
        return -z
    if op == "conj":
        return z.conj()
    if w is None:
        raise ValueError(f"operation {op!r} needs two operands")
    w = GaussianInt.coerce(w)
    if op == "add":
        return z + w
    if op == "sub":
        return z - w
    if op == "mul":
        return z * w
    raise ValueError(f"unknown operation {op!r}")


def norm(z: IntLike) -> int:
    return GaussianInt.coerce(z).norm()


def gpow(z: IntLike, k: int) -> GaussianInt:
    """``z**k`` for ``k >= 0`` by square-and-multiply."""
    if k < 0:
        raise ValueError("negative exponents are not defined in Z[i]")
    z = GaussianInt.coerce(z)
    result = ONE
    base = z
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def _round_half_down(num: int, den: int) -> int:
    # nearest integer to num/den (den > 0), ties toward -infinity
    return -((den - 2 * num) // (2 * den))


def gdivmod(z: IntLike, w: IntLike) -> tuple[GaussianInt, GaussianInt]:
    """Euclidean division ``z = q*w + r`` with ``norm(r) <= norm(w)/2``.

    Each coordinate of the exact quotient ``z/w`` is rounded to the nearest
    integer; exact halves round toward negative infinity.
    """
    z = GaussianInt.coerce(z)
    w = GaussianInt.coerce(w)
    n = w.norm()
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    t = z * w.conj()
    q = GaussianInt(_round_half_down(t.re, n), _round_half_down(t.im, n))
    return q, z - q * w


def exact_div(z: IntLike, w: IntLike) -> GaussianInt:
    """``z / w`` when ``w`` divides ``z``; raises ``ValueError`` otherwise."""
    q, r = gdivmod(z, w)
    if r:
        raise ValueError(f"{w} does not divide {z}")
    return q


def divides(w: IntLike, z: IntLike) -> bool:
    w = GaussianInt.coerce(w)
    z = GaussianInt.coerce(z)
    if not w:
        return not z
    return not gdivmod(z, w)[1]


def canonical(z: IntLike) -> GaussianInt:
    """The associate of ``z`` with ``re > 0`` and ``im >= 0`` (zero maps to zero)."""
    z = GaussianInt.coerce(z)
    a, b = z.re, z.im
    if a == 0 and b == 0:
        return z
    # rotate by i until inside the half-open first quadrant
    for _ in range(4):
        if a > 0 and b >= 0:
            return GaussianInt(a, b)
        a, b = -b, a
    raise AssertionError("unreachable")


def ggcd(z: IntLike, w: IntLike) -> GaussianInt:
    z = GaussianInt.coerce(z)
    w = GaussianInt.coerce(w)
    if not z and not w:
        raise ValueError("gcd(0, 0) is undefined")
    while w:
        z, w = w, gdivmod(z, w)[1]
    return canonical(z)


def val_one_plus_i(z: IntLike) -> int | float:
    """Exponent of the prime ``1+i`` in ``z``; ``math.inf`` for zero."""
    z = GaussianInt.coerce(z)
    if not z:
        return math.inf
    k = 0
    a, b = z.re, z.im
    # (a+bi)/(1+i) = ((a+b) + (b-a)i)/2, exact iff a+b is even
    while (a + b) % 2 == 0:
        a, b = (a + b) // 2, (b - a) // 2
        k += 1
    return k


def box(bound: int) -> Iterator[GaussianInt]:
    """All ``a+bi`` with ``|a|, |b| <= bound`` in lexicographic order."""
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            yield GaussianInt(a, b)


def with_norm(n: int) -> list[GaussianInt]:
    """Every Gaussian integer of norm ``n``, sorted."""
    if n < 0:
        return []
    if n == 0:
        return [ZERO]
    out = []
    r = math.isqrt(n)
    for a in range(-r, r + 1):
        rest = n - a * a
        if gmpy2.is_square(rest):
            b = int(gmpy2.isqrt(rest))
            out.append(GaussianInt(a, b))
            if b:
                out.append(GaussianInt(a, -b))
    return sorted(out)


def roots_of_unity(k: int) -> tuple[GaussianInt, ...]:
    """Units ``u`` with ``u**k == 1``."""
    return tuple(u for u in UNITS if gpow(u, k) == ONE)


def exact_roots(t: IntLike, k: int) -> list[GaussianInt]:
    """All ``x`` in Z[i] with ``x**k == t`` (``k >= 1``), sorted.

    The norm must be a perfect ``k``-th power; candidates of the forced norm
    are then tested exactly.
    """
    t = GaussianInt.coerce(t)
    if k < 1:
        raise ValueError("root index must be positive")
    if not t:
        return [ZERO]
    n, exact = gmpy2.iroot(t.norm(), k)
    if not exact:
        return []
    for x in with_norm(int(n)):
        if gpow(x, k) == t:
            return sorted(x * u for u in roots_of_unity(k))
    return []


def format_gaussian(z: GaussianInt) -> str:
    a, b = z.re, z.im
    if b == 0:
        return str(a)
    if b == 1:
        imag = "i"
    elif b == -1:
        imag = "-i"
    else:
        imag = f"{b}i"
    if a == 0:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{a}{sign}{imag}"


def parse_gaussian(text: str) -> GaussianInt:
    """Parse the ``a+bi`` grammar produced by :func:`format_gaussian`."""
    s = text.strip()
    if not s or " " in s:
        raise ValueError(f"malformed Gaussian integer {text!r}")
    # split before an inner sign: "-2+3i" -> ["-2", "+3i"]
    cut = max(s.rfind("+"), s.rfind("-"))
    parts = [s[:cut], s[cut:]] if cut > 0 else [s]
    re_part = im_part = None
    for part in parts:
        m = _TERM.match(part)
        if not m or (not m.group(2) and not m.group(3)):
            raise ValueError(f"malformed Gaussian integer {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(3):
            if im_part is not None:
                raise ValueError(f"malformed Gaussian integer {text!r}")
            im_part = sign * int(m.group(2) or "1")
        else:
            if re_part is not None or im_part is not None:
                raise ValueError(f"malformed Gaussian integer {text!r}")
            re_part = sign * int(m.group(2))
    return GaussianInt(re_part or 0, im_part or 0)
