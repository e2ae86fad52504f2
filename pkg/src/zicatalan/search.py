"""Bounded exhaustive searches for Catalan-type equations over Z[i].

Every search walks one variable over a box and asks whether the quantity it
forces on the other variable is an exact power (see
:func:`zicatalan.gaussian.exact_roots`). Boxes split into disjoint row
ranges so the scan can be farmed out to worker processes; results are merged
by set union and sorted, which makes the output independent of the split.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, Sequence

from .gaussian import (
    I,
    ONE,
    ONE_PLUS_I,
    UNITS,
    GaussianInt,
    exact_roots,
    ggcd,
    gpow,
    val_one_plus_i,
)


@dataclass(frozen=True)
class SearchBox:
    """Gaussian integers with ``|re|, |im| <= bound``, optionally restricted
    to the rows ``row_lo <= re <= row_hi``."""

    bound: int
    row_lo: int | None = None
    row_hi: int | None = None

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise ValueError("bound must be nonnegative")
        lo, hi = self.rows
        if lo < -self.bound or hi > self.bound or lo > hi + 1:
            raise ValueError(f"row range [{lo}, {hi}] outside box of bound {self.bound}")

    @property
    def rows(self) -> tuple[int, int]:
        lo = -self.bound if self.row_lo is None else self.row_lo
        hi = self.bound if self.row_hi is None else self.row_hi
        return lo, hi

    def __iter__(self) -> Iterator[GaussianInt]:
        lo, hi = self.rows
        for a in range(lo, hi + 1):
            for b in range(-self.bound, self.bound + 1):
                yield GaussianInt(a, b)

    def __len__(self) -> int:
        lo, hi = self.rows
        return max(0, hi - lo + 1) * (2 * self.bound + 1)

    def __contains__(self, z: object) -> bool:
        if not isinstance(z, GaussianInt):
            return False
        return abs(z.re) <= self.bound and abs(z.im) <= self.bound

    def full(self) -> SearchBox:
        return SearchBox(self.bound)

    def split(self, parts: int) -> list[SearchBox]:
        """Cut into ``parts`` contiguous row ranges of near-equal height."""
        lo, hi = self.rows
        height = hi - lo + 1
        parts = max(1, min(parts, height))
        out = []
        start = lo
        for j in range(parts):
            size = height // parts + (1 if j < height % parts else 0)
            out.append(SearchBox(self.bound, start, start + size - 1))
            start += size
        return out

    def partition(self, cuts: Sequence[int]) -> list[SearchBox]:
        """Row ranges delimited by the sorted interior ``cuts`` (each cut starts a new range)."""
        lo, hi = self.rows
        edges = [lo, *sorted(set(c for c in cuts if lo < c <= hi)), hi + 1]
        return [SearchBox(self.bound, a, b - 1) for a, b in zip(edges, edges[1:])]


@dataclass(frozen=True, order=True)
class CatalanSolution:
    x: GaussianInt
    y: GaussianInt
    p: int
    q: int

    def __post_init__(self) -> None:
        if gpow(self.x, self.p) - gpow(self.y, self.q) != ONE:
            raise ValueError(f"({self.x}, {self.y}) does not solve x^{self.p} - y^{self.q} = 1")

    @property
    def trivial(self) -> bool:
        return not (self.x * self.y)

    def conj(self) -> CatalanSolution:
        return CatalanSolution(self.x.conj(), self.y.conj(), self.p, self.q)


def _sort_key(pair: tuple[GaussianInt, GaussianInt]) -> tuple[int, int, int, int]:
    x, y = pair
    return (x.re, x.im, y.re, y.im)


def _run(scan: Callable[[SearchBox], list], box: SearchBox, workers: int) -> list:
    chunks = box.split(workers)
    if workers <= 1 or len(chunks) == 1:
        results: Iterable[list] = map(scan, chunks)
        return merge(results)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return merge(pool.map(scan, chunks))


def merge(results: Iterable[Iterable[tuple[GaussianInt, GaussianInt]]]) -> list:
    """Union of partial result lists, sorted on (re x, im x, re y, im y)."""
    seen = set()
    for part in results:
        seen.update(part)
    return sorted(seen, key=_sort_key)


def _as_box(box: SearchBox | int) -> SearchBox:
    return box if isinstance(box, SearchBox) else SearchBox(box)


class _CatalanScan:
    # picklable callable: walks y over the rows of a sub-box, x over the full box
    def __init__(self, p: int, q: int):
        self.p, self.q = p, q

    def __call__(self, box: SearchBox) -> list[tuple[GaussianInt, GaussianInt]]:
        found = []
        full = box.full()
        for y in box:
            for x in exact_roots(gpow(y, self.q) + 1, self.p):
                if x in full:
                    found.append((x, y))
        return found


def search_catalan(p: int, q: int, box: SearchBox | int,
                   workers: int = 1) -> list[CatalanSolution]:
    """All solutions of ``x^p - y^q = 1`` with ``x`` and ``y`` in the box."""
    if p < 2 or q < 2:
        raise ValueError("exponents must be >= 2")
    pairs = _run(_CatalanScan(p, q), _as_box(box), workers)
    return [CatalanSolution(x, y, p, q) for x, y in pairs]


def nontrivial(solutions: Iterable[CatalanSolution]) -> list[CatalanSolution]:
    return [s for s in solutions if not s.trivial]


class _ShiftedScan:
    def __init__(self, p: int):
        self.p = p

    def __call__(self, box: SearchBox) -> list[tuple[GaussianInt, GaussianInt]]:
        found = []
        full = box.full()
        for x2 in box:
            for x3 in exact_roots(4 * gpow(x2, self.p) + 4, self.p):
                if x3 in full:
                    found.append((x3, x2))
        return found


def search_shifted(p: int, box: SearchBox | int, workers: int = 1,
                   include_trivial: bool = False) -> list[tuple[GaussianInt, GaussianInt]]:
    """All ``(x3, x2)`` in the box with ``x3^p - 4*x2^p = 4``.

    Pairs with ``x3*x2 == 0`` (for odd ``p`` only ``(0, -1)``) are dropped
    unless ``include_trivial`` is set.
    """
    if p < 2:
        raise ValueError("exponent must be >= 2")
    pairs = _run(_ShiftedScan(p), _as_box(box), workers)
    if include_trivial:
        return pairs
    return [(x3, x2) for x3, x2 in pairs if x3 * x2]


# the one solution written down for x3^5 - 4*x2^5 = 4; its conjugate also solves it
EXCEPTIONAL_SHIFTED_SOLUTION = (-ONE_PLUS_I, I)


def general_hypothesis_holds(b: int, p: int) -> bool:
    """``|b| < 2^(p/2)``, checked exactly as ``b^2 < 2^p``."""
    return b * b < 1 << p


class _GeneralScan:
    def __init__(self, a: int, b: int, p: int):
        self.a, self.b, self.p = a, b, p

    def __call__(self, box: SearchBox) -> list[tuple[GaussianInt, GaussianInt]]:
        found = []
        full = box.full()
        for x in box:
            for y in exact_roots(self.a * gpow(x, self.p) - self.b, self.p):
                if y in full:
                    found.append((x, y))
        return found


def search_general(a: int, b: int, p: int, box: SearchBox | int,
                   workers: int = 1) -> list[tuple[GaussianInt, GaussianInt]]:
    """All ``(x, y)`` in the box with ``a*x^p - y^p = b``.

    Inputs outside ``|b| < 2^(p/2)`` are searched anyway, with a warning.
    """
    if a == 0:
        raise ValueError("a must be nonzero")
    if not general_hypothesis_holds(b, p):
        warnings.warn(f"|b| = {abs(b)} is not below 2^(p/2) for p = {p}", stacklevel=2)
    return _run(_GeneralScan(a, b, p), _as_box(box), workers)


class CaseTag(str, Enum):
    COPRIME = "Coprime"
    COMMON_FACTOR = "CommonFactor"


@dataclass(frozen=True)
class CaseSplit:
    """Which case ``y^2 + 1 = (y+i)(y-i)`` falls into.

    ``r1`` and ``r2`` are the (1+i)-valuations of ``y+i`` and ``y-i``.
    ``pth_power`` records whether ``y^2 + 1`` is a perfect ``p``-th power in
    Z[i]; only then is ``min(r1, r2) == 2`` forced for a common factor.
    """

    tag: CaseTag
    r1: int
    r2: int
    gcd: GaussianInt
    pth_power: bool


def case_split(y: GaussianInt, p: int) -> CaseSplit:
    y = GaussianInt.coerce(y)
    if y == I or y == -I:
        raise ValueError("y = +-i gives the trivial solution x = 0")
    plus, minus = y + I, y - I
    g = ggcd(plus, minus)
    r1, r2 = val_one_plus_i(plus), val_one_plus_i(minus)
    is_power = bool(exact_roots(y * y + 1, p))
    if g.is_unit():
        return CaseSplit(CaseTag.COPRIME, r1, r2, g, is_power)
    if is_power and min(r1, r2) != 2:
        raise ArithmeticError(
            f"y = {y}: y^2+1 is a {p}-th power but min(r1, r2) = {min(r1, r2)}")
    return CaseSplit(CaseTag.COMMON_FACTOR, r1, r2, g, is_power)


def verify_unit_pth_powers(p: int) -> bool:
    """Every unit of Z[i] is the ``p``-th power of a unit."""
    return {gpow(u, p) for u in UNITS} == set(UNITS)


def catalan_to_mordell(x: GaussianInt, y: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """The change of variables ``(x, y) -> (-x, i*y)``.

    Sends a solution of ``x^p - y^2 = 1`` (odd ``p``) to one of
    ``Y^2 - X^p = 1``.
    """
    return -x, I * y

