"""Independent oracles shared by the test modules.

Everything here works on plain ``(re, im)`` tuples so that it never touches
the arithmetic it is used to check.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor

import pytest

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def tmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def tpow(a, k):
    out = (1, 0)
    for _ in range(k):
        out = tmul(out, a)
    return out


def tsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def tbox(bound):
    return [(a, b) for a in range(-bound, bound + 1) for b in range(-bound, bound + 1)]


def brute_pairs(lhs_coeff, lhs_exp, rhs_exp, const, bound):
    """All (x, y) in the box with lhs_coeff*x^lhs_exp - y^rhs_exp == const, by double enumeration."""
    pts = tbox(bound)
    xs = {}
    for x in pts:
        v = tmul(lhs_coeff, tpow(x, lhs_exp))
        xs.setdefault(tsub(v, const), []).append(x)
    out = []
    for y in pts:
        for x in xs.get(tpow(y, rhs_exp), ()):
            out.append((x, y))
    return sorted(out)


def lattice_rep(z, k):
    """Representative of z modulo (1+i)^k, reduced into a fundamental parallelogram."""
    w = tpow((1, 1), k)
    iw = tmul((0, 1), w)
    det = w[0] * iw[1] - w[1] * iw[0]
    s = Fraction(z[0] * iw[1] - z[1] * iw[0], det)
    t = Fraction(w[0] * z[1] - w[1] * z[0], det)
    fs, ft = floor(s), floor(t)
    return (z[0] - fs * w[0] - ft * iw[0], z[1] - fs * w[1] - ft * iw[1])


def record_acceptance(label: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[label] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())


@pytest.fixture
def acceptance():
    return record_acceptance


def random_expression(rng, depth=3):
    """A random expression evaluated two ways: as an Interval and as an mpmath value.

    Divisors and root arguments are kept strictly positive so both sides are defined.
    """
    import mpmath

    from zicatalan.interval import Interval, rational_power_interval, root_interval, sin_pi_fraction

    def leaf():
        f = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        return Interval.point(f), mpmath.mpf(f.numerator) / f.denominator

    def positive(d):
        iv, mv = build(d)
        return iv * iv + Fraction(1, 7), mv * mv + mpmath.mpf(1) / 7

    def build(d):
        if d == 0:
            return leaf()
        kind = rng.choice(["add", "sub", "mul", "div", "root", "pow", "sin", "leaf"])
        if kind == "leaf":
            return leaf()
        if kind in ("add", "sub", "mul"):
            (a, x), (b, y) = build(d - 1), build(d - 1)
            return {"add": (a + b, x + y), "sub": (a - b, x - y), "mul": (a * b, x * y)}[kind]
        if kind == "div":
            (a, x), (b, y) = build(d - 1), positive(d - 1)
            return a / b, x / y
        if kind == "root":
            n = rng.randint(2, 7)
            a, x = positive(d - 1)
            return root_interval(a, n, bits=rng.choice([32, 64, 128])), mpmath.root(x, n)
        if kind == "pow":
            num, den = rng.randint(-5, 5), rng.randint(1, 7)
            a, x = positive(d - 1)
            return rational_power_interval(a, num, den), x ** (mpmath.mpf(num) / den)
        r = Fraction(rng.randint(-40, 40), rng.randint(1, 13))
        return sin_pi_fraction(r, bits=rng.choice([32, 64])), mpmath.sin(mpmath.pi * r.numerator / r.denominator)

    return build(depth)


def encloses(iv, value) -> bool:
    import mpmath

    lo = mpmath.mpf(iv.lo.numerator) / iv.lo.denominator
    hi = mpmath.mpf(iv.hi.numerator) / iv.hi.denominator
    slack = mpmath.mpf(10) ** -60 * (1 + abs(value))
    return lo - slack <= value <= hi + slack
