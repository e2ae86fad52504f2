"""Figures for the report directory.

Plots use float midpoints of the certified enclosures; they are pictures of
the certificates, never part of them.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bounds import gap, sin_threshold  # noqa: E402
from .interval import sin_pi_fraction  # noqa: E402
from .search import CatalanSolution  # noqa: E402


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    # fixed metadata keeps the PNG bytes independent of the matplotlib build
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_gap_bound(ps: Sequence[int], n_max: int, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = range(1, n_max + 1)
    for p in ps:
        ax.plot(ns, [float(gap(n, p).mid) for n in ns], marker=".", label=f"p = {p}")
    ax.axhline(2.5, color="k", linestyle="--", linewidth=1, label="5/2")
    ax.set_yscale("log")
    ax.set_xlabel("n = |x2|^2")
    ax.set_ylabel("(n+1)^(p/2) - n^(p/2)")
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)


def plot_sin_margins(ps: Sequence[int], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    mins = [min(float(abs(sin_pi_fraction(Fraction(2 * n, p)).mid)) for n in range(1, p))
            for p in ps]
    ax.semilogy(ps, mins, "o-", label="min |sin(2 pi n / p)|, n = 1..p-1")
    ax.semilogy(ps, [float(sin_threshold(p)) for p in ps], "s--", label="(6/p) 3^(-(p-3)/2)")
    ax.set_xlabel("p")
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)


def plot_solutions(solutions: Sequence[CatalanSolution], title: str, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(5, 5))
    for attr, marker in (("x", "o"), ("y", "x")):
        pts = [getattr(s, attr) for s in solutions]
        ax.scatter([z.re for z in pts], [z.im for z in pts], marker=marker, label=attr)
    ax.axhline(0, color="0.7", linewidth=0.8)
    ax.axvline(0, color="0.7", linewidth=0.8)
    ax.set_aspect("equal")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    return _save(fig, path)
