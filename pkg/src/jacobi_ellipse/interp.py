"""Error bound for polynomial interpolation of functions analytic in E_rho.

For f analytic inside and on E_rho with M = max |f| there, interpolation at
the zeros of omega_n = P_n^{(alpha,beta)} satisfies

    |f(x) - p_n(x)| <= M L / (2 pi d) * max_{[-1,1]} |omega_n| / min_{E_rho} |omega_n|,

with L the perimeter of E_rho and d its distance to [-1, 1].
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.special import ellipe

from .ellipse import BernsteinEllipse
from .errors import DomainError, InvariantError
from .extrema import min_on_ellipse
from .orthopoly import JacobiParams, golden_section, jacobi_interval_max

__all__ = [
    "InterpBound",
    "ellipse_circumference",
    "ellipse_circumference_elliptic",
    "distance_to_interval",
    "interp_bound",
]


def ellipse_circumference(e: BernsteinEllipse) -> float:
    """Perimeter by adaptive quadrature of the arc-length element."""
    a, b = e.semi_major, e.semi_minor
    val, _ = quad(lambda t: math.hypot(a * math.sin(t), b * math.cos(t)), 0, math.pi / 2, epsabs=0, epsrel=1e-13, limit=200)
    return 4 * val


def ellipse_circumference_elliptic(e: BernsteinEllipse) -> float:
    """Perimeter 4 a E(m), m = 1 - b^2/a^2 (complete elliptic integral)."""
    a, b = e.semi_major, e.semi_minor
    return 4 * a * float(ellipe(1 - (b / a) ** 2))


def _dist(e: BernsteinEllipse, theta):
    z = e.z(theta)
    return np.abs(z - np.clip(z.real, -1.0, 1.0))


def distance_to_interval(e: BernsteinEllipse, *, grid: int = 4096) -> float:
    """Distance from the ellipse curve to [-1, 1], by sampling and refinement."""
    if not e.rho > 1:
        raise DomainError("distance is zero for rho <= 1")
    h = 2 * math.pi / grid
    theta = np.arange(grid) * h
    vals = _dist(e, theta)
    i = int(np.argmin(vals))
    _, best = golden_section(lambda t: _dist(e, t), np.array([theta[i] - h]), np.array([theta[i] + h]), tol=1e-14)
    d = float(min(best[0], vals[i]))
    # the end of the major axis is always a candidate, so d cannot exceed its distance
    if d > (e.rho - 1) ** 2 / (2 * e.rho) + 1e-12 or d <= 0:
        raise InvariantError(f"ellipse-to-interval distance {d} out of range")
    return d


@dataclass(frozen=True)
class InterpBound:
    alpha: float
    beta: float
    n: int
    rho: float
    M: float
    circumference: float
    distance: float
    interval_max: float
    ellipse_min: float
    ellipse_min_method: str
    bound: float
    warnings: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "n": self.n,
            "rho": self.rho,
            "M": self.M,
            "circumference": self.circumference,
            "distance": self.distance,
            "interval_max": self.interval_max,
            "ellipse_min": self.ellipse_min,
            "ellipse_min_method": self.ellipse_min_method,
            "bound": self.bound,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> InterpBound:
        obj = dict(obj)
        obj["warnings"] = tuple(obj.get("warnings", ()))
        return cls(**obj)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def interp_bound(p: JacobiParams, n: int, rho: float, M: float, *, grid: int = 2**16) -> InterpBound:
    """Assemble the interpolation error bound and all of its factors."""
    if not (math.isfinite(rho) and rho > 1):
        raise DomainError(f"rho must exceed 1 (the bound degenerates at rho = 1), got {rho!r}")
    if not (math.isfinite(M) and M > 0):
        raise DomainError(f"M must be positive and finite, got {M!r}")
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    e = BernsteinEllipse(rho)
    warnings = []
    if rho < 1.01:
        warnings.append("near-degenerate: rho < 1.01, the distance to [-1,1] is tiny and the bound is large")
    L = ellipse_circumference(e)
    d = distance_to_interval(e)
    imax = jacobi_interval_max(p, n).value
    rep = min_on_ellipse(p, n, e, grid=grid)
    bound = M * L / (2 * math.pi * d) * imax / rep.value
    return InterpBound(p.alpha, p.beta, n, rho, M, L, d, imax, rep.value, rep.method, bound, tuple(warnings))
