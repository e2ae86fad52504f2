"""JSON/CSV serialization of search results, bound reports and fiber results.

Everything numeric that is not a plain integer is written as an exact
string: rationals as ``"num/den"``, Gaussian integers as ``"a+bi"``,
intervals as ``{"lo": ..., "hi": ...}``. No floats ever reach the file, so a
report is a byte-stable function of its configuration.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable

from .bounds import BoundReport
from .elliptic import CurvePoint, FiberResult, QiNumber
from .gaussian import GaussianInt
from .interval import Interval
from .search import CatalanSolution

SCHEMA = "zicatalan.report"
SCHEMA_VERSION = 1


def rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def encode(obj: Any) -> Any:
    """Map library values onto JSON-safe, float-free structures."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, GaussianInt):
        return str(obj)
    if isinstance(obj, QiNumber):
        return {"re": rational(obj.re), "im": rational(obj.im)}
    if isinstance(obj, Interval):
        return {"lo": rational(obj.lo), "hi": rational(obj.hi)}
    if isinstance(obj, CurvePoint):
        if obj.is_infinity:
            return "O"
        return {"x": encode(obj.x), "y": encode(obj.y)}
    if isinstance(obj, CatalanSolution):
        return {"x": str(obj.x), "y": str(obj.y), "p": obj.p, "q": obj.q, "trivial": obj.trivial}
    if isinstance(obj, BoundReport):
        return {
            "claim": obj.name,
            "parameters": {k: encode(v) for k, v in obj.parameters.items()},
            "verdict": obj.verdict.value,
            "margin": rational(obj.margin),
            "precision_bits": obj.precision,
            "note": obj.note,
            "details": [encode(d) for d in obj.details],
        }
    if isinstance(obj, FiberResult):
        return {
            "target": obj.target.value,
            "curve_d": obj.curve_d,
            "empty": obj.empty,
            "points": [encode(P) for P in obj.points],
            "certificate": obj.certificate,
            "assumptions": list(obj.assumptions),
        }
    if isinstance(obj, dict):
        return {str(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class SearchRecord:
    """One executed search with its expected nontrivial set (``None`` if no claim covers it)."""

    equation: str
    parameters: dict
    solutions: list
    nontrivial: list
    expected: list | None
    flags: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.expected is None:
            return "unchecked"
        def canon(items: list) -> list[str]:
            return sorted(json.dumps(encode(v), sort_keys=True) for v in items)
        return "as-expected" if canon(self.nontrivial) == canon(self.expected) else "unexpected"

    def to_json(self) -> dict:
        return {
            "equation": self.equation,
            "parameters": encode(self.parameters),
            "solutions": encode(self.solutions),
            "nontrivial": encode(self.nontrivial),
            "expected_nontrivial": None if self.expected is None else encode(self.expected),
            "status": self.status,
            "flags": list(self.flags),
        }


@dataclass
class SearchReport:
    config: dict
    searches: list[SearchRecord] = field(default_factory=list)
    bound_reports: list[BoundReport] = field(default_factory=list)
    fiber_results: list[tuple[FiberResult, bool]] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    wall_time: float | None = None
    version: str = ""

    @property
    def passed(self) -> bool:
        return (all(s.status != "unexpected" for s in self.searches)
                and all(r.certified for r in self.bound_reports)
                and all(ok for _, ok in self.fiber_results))

    def failures(self) -> list[str]:
        out = [f"search {s.equation} {encode(s.parameters)}: {s.status}"
               for s in self.searches if s.status == "unexpected"]
        out += [f"claim {r.name} {encode(dict(r.parameters))}: {r.verdict.value}"
                for r in self.bound_reports if not r.certified]
        out += [f"fiber {f.target.value} (d={f.curve_d}): unexpected points"
                for f, ok in self.fiber_results if not ok]
        return out

    def to_json(self) -> dict:
        doc = {
            "schema": SCHEMA,
            "schema_version": SCHEMA_VERSION,
            "version": self.version,
            "config": encode(self.config),
            "searches": [s.to_json() for s in self.searches],
            "bound_reports": [encode(r) for r in self.bound_reports],
            "fiber_results": [dict(encode(f), as_expected=ok) for f, ok in self.fiber_results],
            "skipped": list(self.skipped),
            "status": "pass" if self.passed else "fail",
            "failures": self.failures(),
        }
        if self.wall_time is not None:
            # opt-in only: timing breaks byte-identical reports
            doc["wall_time_ms"] = round(self.wall_time * 1000)
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def csv_rows(self) -> Iterable[list[str]]:
        yield ["kind", "name", "parameters", "outcome", "margin"]
        for s in self.searches:
            yield ["search", s.equation, json.dumps(encode(s.parameters), sort_keys=True),
                   s.status, str(len(s.nontrivial))]
        for r in self.bound_reports:
            yield ["claim", r.name, json.dumps(encode(dict(r.parameters)), sort_keys=True),
                   r.verdict.value, rational(r.margin)]
        for f, ok in self.fiber_results:
            yield ["fiber", f.target.value, json.dumps({"curve_d": f.curve_d}),
                   "as-expected" if ok else "unexpected", str(len(f.points))]

    def dumps_csv(self) -> str:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(self.csv_rows())
        return buf.getvalue()
