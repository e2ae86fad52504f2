import random
from fractions import Fraction as F

import pytest

from zicatalan.elliptic import (
    E_MINUS,
    E_PLUS,
    LISTED_TORSION,
    Curve,
    CurvePoint,
    FiberTarget,
    QiNumber,
    ec_add,
    fiber_decision,
    fiber_quadratic_3R,
    fiber_quadratic_4R,
    identity_fiber,
    order,
    scalar_mul,
    torsion_point,
    torsion_points,
    trace,
)
from zicatalan.gaussian import GaussianInt
from zicatalan.search import catalan_to_mordell, nontrivial, search_catalan

Q = QiNumber


def rand_qi(rng, size=9):
    return Q(F(rng.randint(-size, size), rng.randint(1, size)), F(rng.randint(-size, size), rng.randint(1, size)))


def solve3(rows, rhs):
    # Gaussian elimination over Q(i); rows are 3x3
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(3):
        piv = next(r for r in range(c, 3) if m[r][c])
        m[c], m[piv] = m[piv], m[c]
        inv = m[c][c].inverse()
        m[c] = [v * inv for v in m[c]]
        for r in range(3):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[r][3] for r in range(3)]


def random_curve_with_points(rng):
    """A curve through three random Q(i) points, fitted by a linear solve."""
    while True:
        pts = [(rand_qi(rng), rand_qi(rng)) for _ in range(3)]
        xs = [x for x, _ in pts]
        if len({(x.re, x.im) for x in xs}) < 3:
            continue
        a2, a4, a6 = solve3([(x * x, x, Q(1)) for x in xs], [y * y - x ** 3 for x, y in pts])
        E = Curve(a2, a4, a6)
        return [CurvePoint(E, x, y) for x, y in pts]


# field


def test_qi_field():
    rng = random.Random(1)
    for _ in range(200):
        a, b = rand_qi(rng), rand_qi(rng)
        if b:
            assert (a / b) * b == a
        assert (a * b).conj() == a.conj() * b.conj()
        assert a.conj().conj() == a


# torsion and the group law


def test_torsion_list():
    pts = torsion_points()
    listed = [CurvePoint(E_PLUS) if xy is None else CurvePoint(E_PLUS, *xy) for xy in LISTED_TORSION]
    assert pts == listed
    assert torsion_point("3R") == CurvePoint(E_PLUS, -1, 0)
    assert ec_add(torsion_point("4R"), torsion_point("R")) == CurvePoint(E_PLUS, 2, -3)
    assert scalar_mul(6, torsion_point("R")).is_infinity
    with pytest.raises(ValueError):
        torsion_points(-1)


def test_torsion_closed():
    pts = torsion_points()
    for P in pts:
        assert -P in pts
        assert 6 % order(P) == 0
        for Q_ in pts:
            assert P + Q_ in pts


def test_add_examples():
    R = CurvePoint(E_PLUS, 2, 3)
    assert ec_add(R, R) == CurvePoint(E_PLUS, 0, 1)
    assert ec_add(CurvePoint(E_PLUS, 0, 1), CurvePoint(E_PLUS, 0, -1)).is_infinity
    O = CurvePoint.infinity(E_PLUS)
    assert ec_add(R, O) == R and ec_add(O, R) == R
    with pytest.raises(ValueError):
        ec_add(R, CurvePoint(E_MINUS, 1, 0))
    with pytest.raises(ValueError):
        CurvePoint(E_PLUS, 1, 1)
    with pytest.raises(ValueError):
        Curve.mordell(2)


def test_group_law_random_generic():
    rng = random.Random(11)
    for _ in range(60):
        P, Q_, R = random_curve_with_points(rng)
        assert (P + Q_) + R == P + (Q_ + R)
        assert P + (-P) == CurvePoint.infinity(P.curve)
        assert P + Q_ == Q_ + P


# trace


def test_trace_examples():
    assert trace(CurvePoint(E_MINUS, -2, Q(0, 3))).is_infinity
    assert trace(CurvePoint(E_PLUS, 2, 3)) == CurvePoint(E_PLUS, 0, 1)
    assert trace(CurvePoint.infinity(E_PLUS)).is_infinity


def _real_curve_sample(rng):
    # y^2 = x^3 + a x + b with rational a, b through a rational point and a point (x2, i*y2)
    while True:
        x1, y1 = F(rng.randint(-5, 5), rng.randint(1, 3)), F(rng.randint(1, 5), rng.randint(1, 3))
        x2, y2 = F(rng.randint(-5, 5), rng.randint(1, 3)), F(rng.randint(1, 5), rng.randint(1, 3))
        if x1 == x2:
            continue
        a = ((y1 * y1 - x1 ** 3) - (-y2 * y2 - x2 ** 3)) / (x1 - x2)
        b = y1 * y1 - x1 ** 3 - a * x1
        E = Curve(Q(0), Q(a), Q(b))
        return CurvePoint(E, x1, y1), CurvePoint(E, x2, Q(0, y2))


def test_trace_homomorphism_on_real_curve():
    rng = random.Random(5)
    checked = 0
    for _ in range(15):
        G1, G2 = _real_curve_sample(rng)
        sample = [scalar_mul(m, G1) + scalar_mul(n, G2) for m in (-1, 0, 1, 2) for n in (-1, 1, 2)]
        for P in sample:
            assert trace(P).is_rational()
            for Q_ in sample[:4]:
                assert trace(P + Q_) == trace(P) + trace(Q_)
                checked += 1
    assert checked > 0


# fibers


def test_fiber_quadratics():
    assert fiber_quadratic_4R(2) == (32, False)
    assert fiber_quadratic_4R(-2) == (0, False)
    assert fiber_quadratic_4R(4) == (288, False)
    assert fiber_quadratic_3R(1) == (4, False)
    assert fiber_quadratic_3R(-1) == (4, False)
    assert fiber_quadratic_3R(3) == (132, False)
    with pytest.raises(ValueError):
        fiber_quadratic_4R(3)
    with pytest.raises(ValueError):
        fiber_quadratic_3R(2)


def test_fiber_quadratic_roots_reconstruct():
    # x^2 - m^2 x - 2m = 0 with disc = m^4 + 8m: roots (m^2 +- sqrt(disc))/2 satisfy the quadratic
    for m in range(-40, 41, 2):
        disc, _ = fiber_quadratic_4R(m)
        assert disc == m ** 4 + 8 * m
        # when disc = -s^2, the roots (m^2 +- i s)/2 are Gaussian integers since m^2 is even
        if disc < 0:
            s2 = -disc
            s = int(s2 ** 0.5)
            if s * s == s2:
                for sign in (1, -1):
                    x = Q(F(m * m, 2), F(sign * s, 2))
                    assert x * x - m * m * x - 2 * m == Q(0)
                    assert x.is_gaussian_integer()
    for m in range(-41, 42, 2):
        disc, _ = fiber_quadratic_3R(m)
        assert disc == (m * m + 1) ** 2 - 4 * (1 - m * m) > 0


@pytest.mark.parametrize("target", ["R", "2R", "3R", "4R", "5R"])
def test_fibers_empty(target):
    res = fiber_decision(target)
    assert res.empty and res.certificate and res.assumptions
    if target in ("R", "2R", "5R"):
        assert "4R" in res.certificate


def test_identity_fibers():
    minus = fiber_decision(FiberTarget.INFINITY, d=-1)
    assert [(P.x, P.y) for P in minus.points] == [(Q(-2), Q(0, -3)), (Q(-2), Q(0, 3))]
    assert fiber_decision("O", d=1).empty
    assert all(trace(P).is_infinity for P in minus.points)


def test_cross_module_search_to_curve():
    sols = nontrivial(search_catalan(3, 2, 20))
    fiber = {(P.x, P.y) for P in identity_fiber(-1, 20)}
    assert len(sols) == len(fiber) == 2
    for s in sols:
        P = CurvePoint(E_MINUS, s.x, s.y)
        assert (P.x, P.y) in fiber
        assert trace(P).is_infinity
        X, Y = catalan_to_mordell(s.x, s.y)
        CurvePoint(E_PLUS, X, Y)  # the image lies on y^2 = x^3 + 1
        assert GaussianInt(-2) == s.x
