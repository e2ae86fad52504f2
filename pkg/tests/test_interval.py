import random
from fractions import Fraction as F

import mpmath
import pytest

from zicatalan.interval import (
    Interval,
    pi_interval,
    rational_power,
    root,
    sin_pi_fraction,
)

from conftest import encloses, random_expression

mpmath.mp.dps = 120


def test_arithmetic_exact_endpoints():
    a, b = Interval(1, 2), Interval(-3, F(1, 2))
    assert a + b == Interval(-2, F(5, 2))
    assert a - b == Interval(F(1, 2), 5)
    assert a * b == Interval(-6, 1)
    assert Interval(-2, 3) ** 2 == Interval(0, 9)
    assert a / 2 == Interval(F(1, 2), 1)
    with pytest.raises(ZeroDivisionError):
        1 / b
    with pytest.raises(ValueError):
        Interval(2, 1)


def test_certain_comparisons():
    assert Interval(3, 4).certainly_gt(Interval(1, 2))
    assert not Interval(2, 4).certainly_gt(Interval(1, 2))
    assert Interval(1, 2).certainly_lt(F(5, 2))


def test_root_exact_and_enclosing():
    assert root(4, 2) == Interval.point(2)
    assert root(F(27, 8), 3) == Interval.point(F(3, 2))
    r = root(2, 2, bits=64)
    assert r.lo ** 2 < 2 < r.hi ** 2
    assert r.width == F(1, 2 ** 64)
    with pytest.raises(ValueError):
        root(-1, 3)


def test_pi_enclosure():
    for bits in (16, 64, 256):
        assert encloses(pi_interval(bits), mpmath.pi)
        assert pi_interval(bits).width < F(1, 2 ** bits)


def test_sin_examples():
    assert sin_pi_fraction(0) == Interval.point(0)
    assert sin_pi_fraction(F(1, 2)) == Interval.point(1)
    assert sin_pi_fraction(F(3, 2)) == Interval.point(-1)
    lo, hi = sin_pi_fraction(F(2, 7)).to_floats()
    assert 0.781 <= lo and hi <= 0.782
    lo, hi = abs(sin_pi_fraction(F(6, 7))).to_floats()
    assert 0.433 <= lo and hi <= 0.434


@pytest.mark.parametrize("seed", range(4))
def test_enclosure_soundness(seed):
    rng = random.Random(seed)
    for _ in range(50):
        iv, value = random_expression(rng, depth=3)
        assert encloses(iv, value), (iv.to_floats(), value)


def test_refinement_never_widens():
    for x, n in [(2, 2), (F(7, 3), 5), (10 ** 6 + 1, 7)]:
        prev = None
        for bits in (16, 32, 64, 128, 256, 512):
            cur = root(x, n, bits)
            if prev is not None:
                assert cur in prev and cur.width <= prev.width
            prev = cur
    for r in (F(2, 7), F(5, 13), F(-11, 3)):
        prev = None
        for bits in (16, 32, 64, 128, 256):
            cur = sin_pi_fraction(r, bits)
            if prev is not None:
                assert cur.width <= prev.width
                assert max(cur.lo, prev.lo) <= min(cur.hi, prev.hi)
            prev = cur


def test_rational_power_negative_exponent():
    iv = rational_power(4, -1, 7)
    assert encloses(iv, mpmath.mpf(4) ** (mpmath.mpf(-1) / 7))
