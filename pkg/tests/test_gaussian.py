import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zicatalan.gaussian import (
    I,
    ONE_PLUS_I,
    UNITS,
    GaussianInt,
    canonical,
    divides,
    exact_div,
    exact_roots,
    gdivmod,
    ggcd,
    gpow,
    norm,
    parse_gaussian,
    val_one_plus_i,
    with_norm,
)

from conftest import tbox, tmul, tpow

G = GaussianInt
coord = st.integers(-10**6, 10**6)
gauss = st.builds(G, coord, coord)
nonzero = gauss.filter(bool)


def t(z):
    return (z.re, z.im)


# fixed examples


def test_mul_examples():
    assert ONE_PLUS_I * ONE_PLUS_I == G(0, 2)
    assert G(3, 4).conj() == G(3, -4)
    assert t(G(2, 3) * G(2, -3)) == tmul((2, 3), (2, -3)) == (13, 0)


def test_norm_examples():
    assert norm(G(3, 4)) == 25
    assert norm(0) == 0
    assert norm(-ONE_PLUS_I) == 2


def test_divmod_examples():
    assert gdivmod(G(0, 4), G(0, 2)) == (G(2), G(0))
    q, r = gdivmod(G(5, 3), 2)
    assert q * 2 + r == G(5, 3) and norm(r) <= 2
    # both coordinates of 5/2 + 3i/2 are ties; they round toward -infinity
    assert (q, r) == (G(2, 1), G(1, 1))
    q, r = gdivmod(1, ONE_PLUS_I)
    assert q * ONE_PLUS_I + r == 1 and norm(r) <= 1
    assert (q, r) == (-I, I)


def test_divmod_by_zero():
    with pytest.raises(ZeroDivisionError):
        gdivmod(G(1, 1), 0)


def test_divmod_candidates_oracle():
    # every quotient candidate near z/w: the returned remainder is minimal-norm among them
    z, w = G(5, 3), G(2)
    rems = [norm(z - q * w) for q in map(lambda c: G(*c), tbox(4))]
    assert norm(gdivmod(z, w)[1]) == min(rems)


def _divisors_oracle(z):
    n = norm(z)
    r = math.isqrt(n)
    return {c for c in tbox(r) if c != (0, 0) and divides(G(*c), z)}


def test_gcd_examples():
    y = 3 * I
    assert ggcd(y + I, y - I) == G(2)
    assert ggcd(7, 0) == G(7)
    assert ggcd(ONE_PLUS_I, 3) == G(1)
    with pytest.raises(ValueError):
        ggcd(0, 0)


def test_gcd_divisor_oracle():
    # the gcd has the largest norm among common divisors found by enumeration
    for z, w in [(G(0, 4), G(0, 2)), (ONE_PLUS_I, G(3)), (G(6, 8), G(10)), (G(5), G(2, 1))]:
        common = _divisors_oracle(z) & _divisors_oracle(w)
        assert norm(ggcd(z, w)) == max(a * a + b * b for a, b in common)


def test_pow_examples():
    assert gpow(-ONE_PLUS_I, 5) == G(4, 4)
    assert t(gpow(-ONE_PLUS_I, 5)) == tpow((-1, -1), 5)
    assert gpow(I, 4) == 1
    assert gpow(3 * I, 2) == G(-9)
    assert gpow(-ONE_PLUS_I, 5) - 4 * gpow(I, 5) == 4


def test_valuation_examples():
    assert val_one_plus_i(2) == 2
    assert val_one_plus_i(G(3, 2)) == 0
    assert val_one_plus_i(G(4, 4)) == 5
    assert val_one_plus_i(0) == math.inf


def test_text_format():
    cases = {G(-2, 3): "-2+3i", G(4): "4", -I: "-i", G(1, -1): "1-i", G(0, 3): "3i", G(0): "0"}
    for z, s in cases.items():
        assert str(z) == s
        assert parse_gaussian(s) == z
    with pytest.raises(ValueError):
        parse_gaussian("1 + i")


def test_exact_roots_small():
    assert exact_roots(G(-9), 2) == sorted([3 * I, -3 * I])
    assert exact_roots(G(4, 4), 5) == [-ONE_PLUS_I]
    assert exact_roots(G(2), 2) == []
    assert sorted(exact_roots(1, 4)) == sorted(UNITS)


def test_with_norm_oracle():
    for n in range(0, 60):
        assert sorted(with_norm(n)) == sorted(G(a, b) for a, b in tbox(8) if a * a + b * b == n)


# properties


@settings(max_examples=300)
@given(gauss, gauss)
def test_norm_multiplicative(z, w):
    assert norm(z * w) == norm(z) * norm(w)
    assert t(z * w) == tmul(t(z), t(w))


@settings(max_examples=300)
@given(gauss, nonzero)
def test_divmod_contract(z, w):
    q, r = gdivmod(z, w)
    assert q * w + r == z
    assert 2 * norm(r) <= norm(w)


@settings(max_examples=300)
@given(nonzero)
def test_canonical_unit_invariant(z):
    c = canonical(z)
    assert c.re > 0 and c.im >= 0
    assert all(canonical(u * z) == c for u in UNITS)


@settings(max_examples=300)
@given(nonzero)
def test_valuation_shift(z):
    assert val_one_plus_i(z * ONE_PLUS_I) == val_one_plus_i(z) + 1


@settings(max_examples=200)
@given(st.builds(G, st.integers(-30, 30), st.integers(-30, 30)), st.integers(0, 6), st.integers(0, 6))
def test_pow_additive(z, a, b):
    assert gpow(z, a + b) == gpow(z, a) * gpow(z, b)


@settings(max_examples=300)
@given(nonzero, nonzero)
def test_gcd_divides_both(z, w):
    g = ggcd(z, w)
    assert gdivmod(z, g)[1] == 0 and gdivmod(w, g)[1] == 0
    assert exact_div(z, g) * g == z
    # N(g) divides gcd of norms times a power of two
    m = math.gcd(norm(z), norm(w))
    while m % 2 == 0:
        m //= 2
    n = norm(g)
    while n % 2 == 0:
        n //= 2
    assert m % n == 0


@settings(max_examples=200)
@given(st.builds(G, st.integers(-50, 50), st.integers(-50, 50)), st.integers(1, 7))
def test_exact_roots_recovers(x, k):
    roots = exact_roots(gpow(x, k), k)
    assert x in roots
    assert all(gpow(r, k) == gpow(x, k) for r in roots)


@settings(max_examples=300)
@given(gauss)
def test_text_roundtrip(z):
    assert parse_gaussian(str(z)) == z
