"""Certified checks of the magnitude inequalities behind the nonexistence proofs.

Each check builds the difference ``lhs - rhs`` of a claimed strict inequality
as an :class:`~zicatalan.interval.Interval`. A claim is ``Certified`` when the
whole interval is positive, ``Refuted`` when it is negative, and otherwise
the precision is doubled until the cap is hit, after which the claim stays
``Undecided``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable, Mapping

from .gaussian import GaussianInt
from .interval import (
    Interval,
    IntervalLike,
    rational_power,
    root,
    sin_pi_fraction,
)
from .residue import congruence_size_violations

START_BITS = 64
DEFAULT_PRECISION_CAP = 512


class Verdict(str, Enum):
    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class BoundReport:
    """Outcome of one claim.

    ``margin`` is the lower end of ``lhs - rhs`` for a certified claim and the
    upper end (a negative number) for a refuted one.
    """

    name: str
    parameters: Mapping[str, object]
    verdict: Verdict
    margin: Fraction
    precision: int
    details: tuple[BoundReport, ...] = ()
    note: str = ""

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED


def shrink(x: Fraction, bits: int) -> Fraction:
    """Round ``x`` toward zero onto the grid ``2**-bits``.

    Rationals that already have a small denominator, and those that would
    round to zero, are returned unchanged.
    """
    scale = 1 << bits
    if x.denominator <= scale:
        return x
    r = Fraction(math.floor(abs(x) * scale), scale)
    if r == 0:
        return x
    return r if x > 0 else -r


def decide(name: str, parameters: Mapping[str, object],
           difference: Callable[[int], Interval],
           cap: int = DEFAULT_PRECISION_CAP, note: str = "") -> BoundReport:
    """Settle ``difference(bits) > 0``, doubling ``bits`` from 64 up to ``cap``."""
    bits = min(START_BITS, cap)
    while True:
        d = difference(bits)
        if d.lo > 0:
            return BoundReport(name, dict(parameters), Verdict.CERTIFIED,
                               shrink(d.lo, bits), bits, note=note)
        if d.hi < 0:
            return BoundReport(name, dict(parameters), Verdict.REFUTED,
                               shrink(d.hi, bits), bits, note=note)
        if bits >= cap:
            return BoundReport(name, dict(parameters), Verdict.UNDECIDED, d.lo, bits, note=note)
        bits = min(2 * bits, cap)


def combine(name: str, parameters: Mapping[str, object],
            parts: list[BoundReport], note: str = "",
            primary: BoundReport | None = None) -> BoundReport:
    """Fold sub-claims into one report.

    The margin is the smallest one among the sub-claims, or the margin of
    ``primary`` when that is given and the whole claim is certified.
    """
    if any(r.verdict is Verdict.REFUTED for r in parts):
        verdict = Verdict.REFUTED
        margin = min(r.margin for r in parts if r.verdict is Verdict.REFUTED)
    elif all(r.certified for r in parts):
        verdict = Verdict.CERTIFIED
        margin = min(r.margin for r in parts)
    else:
        verdict = Verdict.UNDECIDED
        margin = min(r.margin for r in parts)
    if primary is not None and verdict is Verdict.CERTIFIED:
        margin = primary.margin
    precision = max(r.precision for r in parts)
    return BoundReport(name, dict(parameters), verdict, margin, precision, tuple(parts), note)


def _check_odd(p: int, least: int) -> None:
    if p % 2 == 0 or p < least:
        raise ValueError(f"p must be an odd integer >= {least}, got {p}")


# coprime case: (n+1)^(p/2) - n^(p/2) >= 5/2

def gap(n: int, p: int, bits: int = START_BITS) -> Interval:
    """Enclosure of ``(n+1)^(p/2) - n^(p/2)``."""
    return root((n + 1) ** p, 2, bits) - root(n ** p, 2, bits)


def check_gap_bound(p: int, n_max: int = 100, cap: int = DEFAULT_PRECISION_CAP) -> BoundReport:
    """``(n+1)^(p/2) - n^(p/2) > 5/2`` for ``1 <= n <= n_max`` and, by monotonicity, all ``n``.

    The monotonicity certificate: the derivative of ``t -> (t+1)^(p/2) - t^(p/2)``
    is ``(p/2)((t+1)^e - t^e)`` with ``e = (p-2)/2``, positive whenever ``e > 0``.
    Consecutive enclosures are also checked to be strictly increasing.
    """
    if p < 3 or p % 2 == 0:
        raise ValueError("p must be an odd integer >= 3")
    threshold = Fraction(5, 2)
    exponent = Fraction(p - 2, 2)

    def at(n: int) -> BoundReport:
        return decide("gap", {"p": p, "n": n}, lambda b: gap(n, p, b) - threshold, cap)

    first = at(1)
    parts = [first]
    monotone = exponent > 0
    if first.certified:
        prev = gap(1, p, first.precision)
        steps = []
        for n in range(2, n_max + 1):
            cur = gap(n, p, first.precision)
            steps.append(cur.lo - prev.hi)
            monotone = monotone and steps[-1] > 0
            prev = cur
            margin = cur.lo - threshold
            if margin <= 0:
                parts.append(at(n))
                if not parts[-1].certified:
                    break
        mono = BoundReport(
            "gap_monotone", {"p": p, "n_max": n_max, "exponent": str(exponent)},
            Verdict.CERTIFIED if monotone else Verdict.UNDECIDED,
            shrink(min(steps, default=exponent), first.precision) if monotone else Fraction(0),
            first.precision,
            note="derivative (p/2)((t+1)^e - t^e) > 0 since e = (p-2)/2 > 0")
        parts.append(mono)
    gap1 = gap(1, p, first.precision)
    params = {"p": p, "n_max": n_max, "threshold": "5/2", "gap_at_1": gap1}
    return combine("gap_bound", params, parts,
                   note="gap >= 5/2 > 2 = |2i| contradicts x1^p - x2^p = 2i",
                   primary=min(parts[:-1], key=lambda r: r.margin) if first.certified else None)


# size of a solution when y+i and y-i share a factor

def size_threshold(p: int, bits: int = START_BITS) -> Interval:
    """Enclosure of ``sqrt(2) * (2^((p-4)/2) - 1)``."""
    sqrt2 = root(2, 2, bits)
    return sqrt2 * (rational_power(2, p - 4, 2, bits) - 1)


def check_lemma1_bound(p: int, cap: int = DEFAULT_PRECISION_CAP,
                       sample_bound: int = 20) -> BoundReport:
    """The threshold ``sqrt(2)(2^((p-4)/2) - 1)`` on ``|x|`` and whether it exceeds 1.

    The congruence step (``-x2 = 1`` mod ``(1+i)^(p-4)`` giving
    ``|x2| >= 2^((p-4)/2) - 1``) is re-checked on every non-unit ``x2`` of a
    sampled box.
    """
    if p < 5 or p % 2 == 0:
        raise ValueError("p must be an odd integer >= 5")
    size = decide("size_threshold_exceeds_unit", {"p": p},
                  lambda b: size_threshold(p, b) - 1, cap)
    bad = congruence_size_violations(p, sample_bound)
    sampled = BoundReport(
        "congruence_sample", {"p": p, "bound": sample_bound, "violations": len(bad)},
        Verdict.CERTIFIED if not bad else Verdict.REFUTED,
        Fraction(1) if not bad else Fraction(-len(bad)), 0,
        note="every non-unit x2 with -x2 = 1 mod (1+i)^(p-4) has |x2| >= 2^((p-4)/2) - 1")
    note = "" if size.certified else "threshold below 1: no restriction on |x|"
    params = {"p": p, "threshold": size_threshold(p, size.precision).rounded(size.precision)}
    return combine("size_bound", params, [size, sampled], note=note, primary=size)


# the claim n = 0: |sin(2 pi n / p)| beats (6/p) 3^(-(p-3)/2) for n != 0

def sin_threshold(p: int) -> Fraction:
    return Fraction(6, p) / 3 ** ((p - 3) // 2)


def check_sin_bound(p: int, cap: int = DEFAULT_PRECISION_CAP) -> BoundReport:
    _check_odd(p, 7)
    tau = sin_threshold(p)
    parts = [decide("sin_gap", {"p": p, "n": n},
                    lambda b, n=n: abs(sin_pi_fraction(Fraction(2 * n, p), b)) - tau, cap)
             for n in range(1, p)]
    worst = min(range(len(parts)), key=lambda j: parts[j].margin)
    params = {"p": p, "threshold": tau, "argmin_n": worst + 1}
    return combine("sin_bound", params, parts)


# geometric domination of the binomial tail

def binomial_tail_bound(abs_x2: IntervalLike, p: int, bits: int = START_BITS) -> Interval:
    """Enclosure of ``1 / (1 - |x2|^-p)``, the geometric sum dominating the tail.

    ``abs_x2`` is the absolute value ``|x2|`` (a rational or an enclosure).
    """
    x = Interval.coerce(abs_x2)
    if x.lo <= 1:
        raise ValueError("need |x2| > 1 for the geometric series to converge")
    return (1 - (x ** p).reciprocal()).reciprocal()


def x2_floor(bits: int = START_BITS) -> Interval:
    """``2^(3/2) - 1``, the lower bound on ``|x2|`` used with ``p >= 7``."""
    return rational_power(2, 3, 2, bits) - 1


def liouville_gap_from_norm(norm_x2: int, p: int, bits: int = START_BITS) -> Interval:
    """Upper side ``4^(1/p) (1/p) |x2|^-(p-1) * tail`` given ``|x2|^2``."""
    if norm_x2 <= 1:
        raise ValueError("x2 must be neither zero nor a unit")
    abs_x2 = root(norm_x2, 2, bits)
    scale = rational_power(4, 1, p, bits) / p
    return scale * rational_power(norm_x2, -(p - 1), 2, bits) * binomial_tail_bound(abs_x2, p, bits)


def liouville_gap(x2: GaussianInt, p: int, bits: int = START_BITS) -> Interval:
    return liouville_gap_from_norm(GaussianInt.coerce(x2).norm(), p, bits)


def mean_value_hull(a: IntervalLike, b: IntervalLike) -> Interval:
    """Where the mean-value point between ``a`` and ``b`` may lie."""
    return Interval.coerce(a).hull(b)


# final chain for p >= 7

def chain_epsilon(p: int, bits: int = START_BITS) -> Interval:
    """Bound on ``|eps|`` where ``xi = 4^(1/p) + eps``, from ``|x2| >= 2^(3/2) - 1`` and ``|a2| >= 1``."""
    x = x2_floor(bits)
    scale = rational_power(4, 1, p, bits) / p
    return scale * (x ** (p - 1)).reciprocal() * binomial_tail_bound(x, p, bits)


def check_prop1_final(p: int, cap: int = DEFAULT_PRECISION_CAP) -> BoundReport:
    """The closing inequalities for a candidate exponent ``p``.

    * ``2^((p-1)/2) > 4 + 4^(1/p)`` (needed for ``p >= 7``);
    * ``2^((p-1)/2) > 4 * (1 + 1/10)`` (the sub-case ``|a3/a2| < 4^(1/p)``);
    * every binomial term ``C(p-1, k) 4^((p-1-k)/p) eps^k`` is below ``1/p``.
    """
    _check_odd(p, 5)
    lhs = Fraction(2 ** ((p - 1) // 2))
    main = decide("final_chain", {"p": p},
                  lambda b: lhs - (4 + rational_power(4, 1, p, b)), cap)
    sub = decide("subcase_chain", {"p": p}, lambda b: Interval.point(lhs - Fraction(44, 10)), cap)
    terms = [decide("binomial_term", {"p": p, "k": k},
                    lambda b, k=k: Fraction(1, p) - comb(p - 1, k)
                    * rational_power(4, p - 1 - k, p, b) * chain_epsilon(p, b) ** k, cap)
             for k in range(1, p)]
    coeff = combine("binomial_terms", {"p": p}, terms)
    note = ""
    if p < 7:
        note = "p = 5 lies outside the p >= 7 range of the chain"
    if not sub.certified:
        note += ("; " if note else "") + \
            "2^((p-1)/2) < 4(1 + 1/10) is possible here, so the sub-case is not excluded"
    bits = main.precision
    params = {"p": p, "lhs": lhs, "rhs_enclosure": 4 + rational_power(4, 1, p, bits),
              "epsilon": chain_epsilon(p, bits).rounded(bits)}
    return combine("final_chain_bound", params, [main, sub, coeff], note=note, primary=main)


# explicit constants for x3^5 - 4 x2^5 = 4

ETA_BOUND = Fraction(1, 40)
TAU_BOUND = Fraction(1, 20)


def geometric_cofactor_upper(eps: Fraction) -> Fraction:
    """Triangle-inequality upper bound on ``|1 + t + ... + t^4|`` for ``|1 - t| <= eps``."""
    return 5 + 10 * eps + 10 * eps ** 2 + 5 * eps ** 3 + eps ** 4


def geometric_cofactor_lower(eps: Fraction) -> Fraction:
    """Matching lower bound: ``(1 - (1-e)^5)/e = 5 - 10e + 10e^2 - 5e^3 + e^4``."""
    return 5 - (10 * eps + 10 * eps ** 2 + 5 * eps ** 3 + eps ** 4)


def check_theorem2_constants() -> BoundReport:
    upper = geometric_cofactor_upper(TAU_BOUND)
    lower = geometric_cofactor_lower(ETA_BOUND)
    ratio = 4 * Fraction(4, 5) ** 4 * Fraction(56, 10) / Fraction(47, 10)

    def exact(name: str, diff: Fraction, params: dict) -> BoundReport:
        return decide(name, params, lambda b: Interval.point(diff))

    parts = [
        exact("cofactor_upper", Fraction(56, 10) - upper,
              {"value": upper, "bound": Fraction(56, 10), "relation": "<"}),
        exact("cofactor_lower", lower - Fraction(47, 10),
              {"value": lower, "bound": Fraction(47, 10), "relation": ">"}),
        exact("cofactor_ratio", 2 - ratio,
              {"value": ratio, "bound": Fraction(2), "relation": "<"}),
    ]
    return combine("shifted_constants", {}, parts,
                   note="(b) is checked for |1 + eta + ... + eta^4|, the reciprocal of the "
                        "displayed ratio (1 - eta)/(1 - eta^5)")
