"""The finite rings Z[i]/(1+i)^k and their unit groups.

Residues are stored by their base-(1+i) digit expansion: the representative
of ``z`` modulo ``(1+i)^k`` is ``sum(d_j * (1+i)^j for j < k)`` with every
digit ``d_j`` in ``{0, 1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .gaussian import ONE, ONE_PLUS_I, GaussianInt, IntLike, gpow

ENUMERATION_CEILING = 14


@lru_cache(maxsize=None)
def _place_values(k: int) -> tuple[GaussianInt, ...]:
    return tuple(gpow(ONE_PLUS_I, j) for j in range(k))


def _digits(z: GaussianInt, k: int) -> int:
    bits = 0
    a, b = z.re, z.im
    for j in range(k):
        d = (a + b) & 1
        bits |= d << j
        a -= d
        a, b = (a + b) // 2, (b - a) // 2
    return bits


def _from_digits(bits: int, k: int) -> GaussianInt:
    rep = GaussianInt(0, 0)
    for j, place in enumerate(_place_values(k)):
        if bits >> j & 1:
            rep = rep + place
    return rep


@dataclass(frozen=True, slots=True)
class ResidueClass:
    """A class of Z[i] modulo ``(1+i)**k``.

    ``digits`` is the bit string of the base-(1+i) expansion (bit ``j`` is the
    coefficient of ``(1+i)**j``); two classes are equal iff their digits are.
    """

    k: int
    digits: int

    @property
    def rep(self) -> GaussianInt:
        return _from_digits(self.digits, self.k)

    def is_unit(self) -> bool:
        # units are exactly the classes prime to 1+i
        return bool(self.digits & 1)

    def _check(self, other: ResidueClass) -> None:
        if other.k != self.k:
            raise ValueError(f"moduli differ: (1+i)^{self.k} vs (1+i)^{other.k}")

    def __add__(self, other: ResidueClass) -> ResidueClass:
        self._check(other)
        return reduce(self.rep + other.rep, self.k)

    def __sub__(self, other: ResidueClass) -> ResidueClass:
        self._check(other)
        return reduce(self.rep - other.rep, self.k)

    def __mul__(self, other: ResidueClass) -> ResidueClass:
        self._check(other)
        return reduce(self.rep * other.rep, self.k)

    def __neg__(self) -> ResidueClass:
        return reduce(-self.rep, self.k)

    def __pow__(self, e: int) -> ResidueClass:
        result = reduce(ONE, self.k)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __str__(self) -> str:
        return f"{self.rep} mod (1+i)^{self.k}"


def reduce(z: IntLike, k: int) -> ResidueClass:
    if k < 1:
        raise ValueError("modulus exponent must be >= 1")
    return ResidueClass(k, _digits(GaussianInt.coerce(z), k))


def residues(k: int) -> Iterator[ResidueClass]:
    """Every class modulo ``(1+i)**k``, in digit order."""
    for bits in range(1 << k):
        yield ResidueClass(k, bits)


def units(k: int) -> Iterator[ResidueClass]:
    for r in residues(k):
        if r.rep.norm() % 2:
            yield r


def unit_group_order(k: int, enumerate_: bool | None = None) -> int:
    """Order of ``(Z[i]/(1+i)^k)^*``.

    The closed form ``2**(k-1)`` is cross-checked against a full count of
    residues with odd norm whenever ``k`` is at most the enumeration ceiling
    (or when ``enumerate_`` forces it).
    """
    if k < 1:
        raise ValueError("modulus exponent must be >= 1")
    formula = 1 << (k - 1)
    if enumerate_ is None:
        enumerate_ = k <= ENUMERATION_CEILING
    if enumerate_:
        counted = sum(1 for _ in units(k))
        if counted != formula:
            raise ArithmeticError(
                f"unit count {counted} disagrees with 2^(k-1) = {formula} at k={k}")
    return formula


def pth_power_kernel(p: int, k: int) -> list[ResidueClass]:
    """Units ``u`` modulo ``(1+i)**k`` with ``u**p == 1``."""
    one = reduce(ONE, k)
    return [u for u in units(k) if reduce(gpow(u.rep, p), k) == one]


def pth_power_forces_identity(p: int, k: int) -> tuple[bool, ResidueClass | None]:
    """Whether ``u**p == 1`` forces ``u == 1`` among units mod ``(1+i)**k``.

    Returns ``(True, None)`` or ``(False, witness)`` with the first
    nontrivial unit of the kernel in digit order.
    """
    if k < 1:
        raise ValueError("modulus exponent must be >= 1")
    one = reduce(ONE, k)
    for u in pth_power_kernel(p, k):
        if u != one:
            return False, u
    return True, None


def pth_power_is_bijective(p: int, k: int) -> bool:
    images = {reduce(gpow(u.rep, p), k) for u in units(k)}
    return len(images) == unit_group_order(k)


def congruence_size_violations(p: int, bound: int) -> list[GaussianInt]:
    """Non-unit ``x2`` in the box with ``-x2 = 1 mod (1+i)^(p-4)`` and ``|x2| < 2^((p-4)/2) - 1``.

    The size bound holds for every such ``x2`` other than ``-1``, since then
    ``(1+i)^(p-4)`` divides the nonzero ``x2 + 1``; the empty list confirms it
    on the sampled box.
    """
    k = p - 4
    if k < 1:
        raise ValueError("needs p >= 5")
    one = reduce(ONE, k)
    two_k = 1 << k
    bad = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            x2 = GaussianInt(a, b)
            if x2.is_unit() or reduce(-x2, k) != one:
                continue
            n = x2.norm()
            # |x2| >= 2^(k/2) - 1  <=>  n + 1 + 2 sqrt(n) >= 2^k
            rhs = two_k - n - 1
            if rhs > 0 and 4 * n < rhs * rhs:
                bad.append(x2)
    return bad
