"""Tabulated data for plots of |C_n^lambda| around ellipses and of rho_n*.

Figures 1-3 are |C_n^lambda(z(theta))| on a uniform theta-grid of [0, 2 pi),
one column per rho.  Figure 4 is the critical-radius sequence.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .ellipse import BernsteinEllipse
from .errors import DomainError
from .extrema import rho_star
from .orthopoly import GegenbauerParam, gegenbauer_eval

__all__ = ["FigureSpec", "DEFAULT_FIGURES", "figure_table", "figure_csv", "rho_star_table", "rho_star_csv"]


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    lam: float | None = None
    n: int | None = None
    rhos: tuple = field(default=())
    theta_samples: int = 2048
    n_list: tuple = field(default=())

    def __post_init__(self):
        if self.figure_id not in (1, 2, 3, 4):
            raise DomainError(f"figure id must be 1-4, got {self.figure_id}")
        if self.figure_id == 4:
            if not self.n_list or any(k < 2 or k % 2 for k in self.n_list):
                raise DomainError("figure 4 needs a list of even n >= 2")
        else:
            if self.n is None or self.n < 1 or self.lam is None or not self.rhos:
                raise DomainError("figures 1-3 need lambda, n >= 1 and at least one rho")
            if any(r < 1 for r in self.rhos):
                raise DomainError("rho must be >= 1")
            if self.theta_samples < 1:
                raise DomainError("theta_samples must be positive")


DEFAULT_FIGURES = {
    1: FigureSpec(1, 0.25, 5, (1.05, 1.25, 2.0)),
    2: FigureSpec(2, 1 / 3, 8, (1.1, 1.2, 2.0)),
    3: FigureSpec(3, -1 / 3, 7, (1.1, 1.2, 2.0)),
    4: FigureSpec(4, n_list=tuple(range(2, 101, 2))),
}


def figure_table(spec: FigureSpec):
    """(theta, |C_n^lambda| columns) for figures 1-3."""
    if spec.figure_id == 4:
        raise DomainError("figure 4 is a rho_n* table; use rho_star_table")
    theta = np.arange(spec.theta_samples) * (2 * math.pi / spec.theta_samples)
    g = GegenbauerParam(spec.lam)
    cols = [np.abs(gegenbauer_eval(g, spec.n, BernsteinEllipse(r).z(theta))) for r in spec.rhos]
    return theta, cols


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def figure_csv(spec: FigureSpec) -> str:
    """Theta-major CSV, 12 significant digits, LF line endings."""
    if spec.figure_id == 4:
        return rho_star_csv(max(spec.n_list), n_list=spec.n_list)
    theta, cols = figure_table(spec)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["theta"] + [f"abs_rho_{r:g}" for r in spec.rhos])
    for i, t in enumerate(theta):
        w.writerow([_fmt(t)] + [_fmt(c[i]) for c in cols])
    return buf.getvalue()


def rho_star_table(n_max: int, n_list=None) -> list:
    if n_max < 2 or n_max % 2:
        raise DomainError(f"n_max must be even and >= 2, got {n_max}")
    ns = n_list if n_list is not None else range(2, n_max + 1, 2)
    return [(k, rho_star(k).rho_star) for k in ns]


def rho_star_csv(n_max: int, n_list=None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "rho_star"])
    for k, r in rho_star_table(n_max, n_list):
        w.writerow([k, repr(r)])
    return buf.getvalue()
