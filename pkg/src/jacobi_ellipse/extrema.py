"""Extrema of |polynomial| over Bernstein ellipses.

Closed forms are returned where a known result applies; everything else, and
every cross-check, goes through :func:`sample_extremum`, a dense-grid search
over the parameter angle followed by local refinement.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .ellipse import BernsteinEllipse, EllipsePoint
from .errors import DomainError, InvariantError, NoRootError
from .orthopoly import (
    GegenbauerParam,
    JacobiParams,
    cheb_T,
    cheb_U,
    gegenbauer_eval,
    gegenbauer_prefactor,
    golden_section,
    jacobi_eval,
    jacobi_eval_derivative,
    newton_bisect,
)

__all__ = [
    "RHO2_STAR",
    "ExtremumReport",
    "CriticalRadius",
    "RadiusEstimate",
    "sample_extremum",
    "max_on_ellipse",
    "min_cheb_T",
    "rho_star",
    "min_cheb_U",
    "min_gegenbauer",
    "min_on_ellipse",
    "lemma_rational_max",
    "fold_angle",
    "estimate_critical_radius",
]

TWO_PI = 2 * math.pi
RHO2_STAR = 0.5 * (math.sqrt(2.0) + math.sqrt(6.0))
DEFAULT_GRID = 2**16
TIE_RTOL = 1e-9


@dataclass(frozen=True)
class ExtremumReport:
    """Extremum of |f| on an ellipse and the angles where it is attained.

    ``sampled_value``/``discrepancy`` are filled when a closed-form result was
    cross-checked against the sampler.
    """

    kind: str
    value: float
    rho: float
    thetas: tuple
    method: str
    theorem_conditions_met: bool
    theorem_tag: str = ""
    note: str = ""
    sampled_value: float | None = None
    discrepancy: float | None = None

    def __post_init__(self):
        if self.kind not in ("max", "min"):
            raise DomainError(f"kind must be 'max' or 'min', got {self.kind!r}")
        if self.method not in ("closed-form", "sampled"):
            raise DomainError(f"unknown method {self.method!r}")
        if self.method == "closed-form" and not self.theorem_conditions_met:
            raise InvariantError("closed-form report without its hypotheses")
        object.__setattr__(self, "thetas", tuple(float(t) for t in self.thetas))

    @property
    def locations(self) -> tuple:
        return tuple(EllipsePoint(self.rho, t) for t in self.thetas)

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind,
            "value": self.value,
            "theta_locations": list(self.thetas),
            "rho": self.rho,
            "method": self.method,
            "theorem_tag": self.theorem_tag,
            "conditions_met": self.theorem_conditions_met,
            "note": self.note,
        }
        if self.sampled_value is not None:
            out["sampled_value"] = self.sampled_value
            out["discrepancy"] = self.discrepancy
        return out

    @classmethod
    def from_dict(cls, obj: dict) -> ExtremumReport:
        return cls(
            kind=obj["kind"],
            value=obj["value"],
            rho=obj["rho"],
            thetas=tuple(obj["theta_locations"]),
            method=obj["method"],
            theorem_conditions_met=obj["conditions_met"],
            theorem_tag=obj.get("theorem_tag", ""),
            note=obj.get("note", ""),
            sampled_value=obj.get("sampled_value"),
            discrepancy=obj.get("discrepancy"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> ExtremumReport:
        return cls.from_dict(json.loads(text))


def _wrap(theta):
    t = np.mod(theta, TWO_PI)
    return np.where(t >= TWO_PI - 1e-13, 0.0, t)


def _circ_dist(a, b):
    d = np.abs(np.mod(a - b, TWO_PI))
    return np.minimum(d, TWO_PI - d)


def _dedupe(thetas, vals, radius):
    keep_t, keep_v = [], []
    for t, v in sorted(zip(thetas, vals)):
        if keep_t and _circ_dist(t, keep_t[-1]) <= radius:
            continue
        keep_t.append(t)
        keep_v.append(v)
    # the first and last entry may also be neighbours across theta = 0
    if len(keep_t) > 1 and _circ_dist(keep_t[0], keep_t[-1]) <= radius:
        keep_t.pop()
        keep_v.pop()
    return keep_t, keep_v


def sample_extremum(
    evaluator,
    e: BernsteinEllipse,
    kind: str,
    *,
    grid: int = DEFAULT_GRID,
    derivative=None,
    tie_rtol: float = TIE_RTOL,
    theta_tol: float = 1e-12,
    on_theta: bool = False,
    flat_rtol: float = 1e-14,
    max_candidates: int | None = None,
) -> ExtremumReport:
    """Global extremum of |evaluator(z)| over the ellipse, by brute force.

    ``evaluator`` maps an array of points z on the ellipse to complex values.
    The uniform theta-grid is scanned for local extrema; those whose grid
    value is within 1e-3 (relative) of the best are refined by golden-section
    search to ``theta_tol`` and, when ``derivative`` (d/dz of the evaluator)
    is given, polished as roots of d|f|^2/dtheta.  Every refined extremum
    within ``tie_rtol`` of the best is reported.

    With ``on_theta=True`` the evaluator receives the angles themselves and
    may return any values supporting abs() and ordering, e.g. mpmath numbers.
    This is the route for functions whose modulus varies by less than double
    precision can resolve, such as |T_n| on a large ellipse; lower
    ``flat_rtol`` (the relative spread below which |f| counts as constant)
    to match the evaluator's precision.

    ``max_candidates`` refines only that many of the best grid extrema.  Use
    it when only the value matters and |f| has very many near-equal
    extrema; the reported locations are then incomplete.
    """
    if kind not in ("max", "min"):
        raise DomainError(f"kind must be 'max' or 'min', got {kind!r}")
    h = TWO_PI / grid
    theta = np.arange(grid) * h
    point = (lambda t: t) if on_theta else e.z
    vals = np.abs(np.asarray(evaluator(point(theta))))
    vmax, vmin = vals.max(), vals.min()
    best_grid = vmax if kind == "max" else vmin

    if vmax - vmin <= flat_rtol * max(vmax, 1e-300):
        return ExtremumReport(
            kind, float(best_grid), e.rho, tuple(theta), "sampled", False,
            note="degenerate: |f| is constant on the ellipse; all grid points tie",
        )

    sgn = 1.0 if kind == "max" else -1.0
    sv = sgn * vals
    local = (sv >= np.roll(sv, 1)) & (sv >= np.roll(sv, -1))
    idx = np.flatnonzero(local & (np.abs(vals - best_grid) <= 1e-3 * vmax))
    if max_candidates is not None and len(idx) > max_candidates:
        idx = idx[np.argsort(-sv[idx], kind="stable")[:max_candidates]]

    f_abs = lambda t: np.abs(np.asarray(evaluator(point(t))))  # noqa: E731
    lo, hi = theta[idx] - h, theta[idx] + h
    ts = np.empty(len(idx))
    fs = np.empty(len(idx))
    todo = np.ones(len(idx), dtype=bool)
    if derivative is not None and not on_theta:
        ts, fs, done = _polish(evaluator, derivative, e, lo, hi)
        todo = ~done
    if np.any(todo):
        tg, fg = golden_section(f_abs, lo[todo], hi[todo], maximize=kind == "max", tol=theta_tol)
        ts[todo] = np.atleast_1d(tg).astype(float)
        fs[todo] = np.atleast_1d(fg).astype(float)

    best = float(fs.max() if kind == "max" else fs.min())
    scale = max(abs(best), 1e-300)
    tied = np.abs(fs - best) <= tie_rtol * scale
    locs, _ = _dedupe(list(_wrap(ts[tied])), list(fs[tied]), 2 * h)
    return ExtremumReport(kind, best, e.rho, tuple(sorted(locs)), "sampled", False)


def _polish(evaluator, derivative, e, lo, hi):
    """Extrema as sign changes of d|f|^2/dtheta on the brackets, all at once.

    Returns (theta, |f|, done); brackets without a sign change (e.g. a kink
    where f vanishes) have done=False and are left to the caller.
    """
    def dg(t):
        u = e.rho * np.exp(1j * t)
        z = 0.5 * (u + 1 / u)
        dz = 0.5j * (u - 1 / u)
        return np.real(np.conj(evaluator(z)) * derivative(z) * dz)

    ts = np.full(len(lo), np.nan)
    fs = np.full(len(lo), np.nan)
    if len(lo) == 0:
        return ts, fs, np.zeros(0, dtype=bool)
    glo, ghi = dg(lo), dg(hi)
    ok = np.sign(glo) * np.sign(ghi) < 0
    if not np.any(ok):
        return ts, fs, ok
    lo, hi, glo, ghi = lo[ok], hi[ok], glo[ok], ghi[ok]
    # Illinois variant of regula falsi: keeps the bracket, converges superlinearly
    active = np.ones(len(lo), dtype=bool)
    for _ in range(200):
        with np.errstate(divide="ignore", invalid="ignore"):
            x = hi - ghi * (hi - lo) / (ghi - glo)
        x = np.where((x > np.minimum(lo, hi)) & (x < np.maximum(lo, hi)), x, 0.5 * (lo + hi))
        gx = np.where(active, dg(np.where(active, x, lo)), 0.0)
        flip = np.sign(gx) * np.sign(ghi) < 0
        lo_new = np.where(flip, hi, lo)
        glo_new = np.where(flip, ghi, 0.5 * glo)
        lo = np.where(active, lo_new, lo)
        glo = np.where(active, glo_new, glo)
        hi = np.where(active, x, hi)
        ghi = np.where(active, gx, ghi)
        width = np.abs(hi - lo)
        active &= (gx != 0) & (width > 4 * np.spacing(np.abs(hi)))
        if not np.any(active):
            break
    lo = hi = np.where(np.abs(ghi) <= np.abs(glo), hi, lo)
    t1 = 0.5 * (lo + hi)
    ts[ok] = t1
    fs[ok] = np.abs(np.asarray(evaluator(e.z(t1))))
    return ts, fs, ok


def _cross_check(report: ExtremumReport, evaluator, e, derivative=None, grid=DEFAULT_GRID):
    s = sample_extremum(evaluator, e, report.kind, grid=grid, derivative=derivative)
    disc = abs(s.value - report.value) / max(abs(report.value), 1e-300)
    return ExtremumReport(
        report.kind, report.value, report.rho, report.thetas, report.method,
        report.theorem_conditions_met, report.theorem_tag, report.note,
        sampled_value=s.value, discrepancy=disc,
    )


def _finish(report, evaluator, e, derivative, cross_check, grid):
    if cross_check and report.method == "closed-form":
        return _cross_check(report, evaluator, e, derivative, grid)
    return report


def _sampled(kind, evaluator, e, derivative, grid, tag="", note=""):
    s = sample_extremum(evaluator, e, kind, grid=grid, derivative=derivative)
    if not note:
        note = s.note
    return ExtremumReport(kind, s.value, e.rho, s.thetas, "sampled", False, tag, note)


def _jacobi_funcs(p: JacobiParams, n: int):
    return (lambda z: jacobi_eval(p, n, z)), (lambda z: jacobi_eval_derivative(p, n, z))


# -- maxima -------------------------------------------------------------------

def max_on_ellipse(
    p: JacobiParams, n: int, e: BernsteinEllipse, *, cross_check: bool = False, grid: int = DEFAULT_GRID
) -> ExtremumReport:
    """Maximum of |P_n^{(alpha,beta)}| on the ellipse.

    Closed form: for alpha + beta >= -1 the maximum sits at the right end of
    the major axis when alpha > beta and at the left end when alpha < beta;
    for alpha == beta >= -1/2 at both ends, and for alpha == beta == -1/2 at
    the 2n angles k pi / n.  Other parameters are sampled.
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    f, df = _jacobi_funcs(p, n)
    a, b = p.alpha, p.beta
    if a > b and a + b >= -1:
        thetas, tag = (0.0,), "max-right-endpoint"
    elif a < b and a + b >= -1:
        thetas, tag = (math.pi,), "max-left-endpoint"
    elif a == b == -0.5:
        thetas, tag = tuple(k * math.pi / n for k in range(2 * n)), "max-chebyshev-first"
    elif a == b and a >= -0.5:
        thetas, tag = (0.0, math.pi), "max-both-endpoints"
    else:
        return _sampled("max", f, e, df, grid, note="parameters outside the closed-form cases")
    value = float(abs(jacobi_eval(p, n, e.z(thetas[0]))))
    rep = ExtremumReport("max", value, e.rho, thetas, "closed-form", True, tag)
    return _finish(rep, f, e, df, cross_check, grid)


# -- Chebyshev minima ---------------------------------------------------------

def min_cheb_T(n: int, e: BernsteinEllipse, *, cross_check: bool = False, grid: int = DEFAULT_GRID) -> ExtremumReport:
    """min |T_n| = (rho^n - rho^-n)/2, attained at theta = (2k+1) pi / (2n)."""
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    if not e.rho > 1:
        raise DomainError("the minimum of |T_n| needs rho > 1")
    r = e.rho
    value = 0.5 * (r**n - r**-n)
    thetas = tuple((2 * k + 1) * math.pi / (2 * n) for k in range(2 * n))
    rep = ExtremumReport("min", value, r, thetas, "closed-form", True, "min-chebyshev-T")
    f = lambda z: cheb_T(n, z)  # noqa: E731
    df = lambda z: n * cheb_U(n - 1, z)  # noqa: E731
    return _finish(rep, f, e, df, cross_check, grid)


def _a(k: int, rho: float) -> float:
    return 0.5 * (rho**k + rho**-k)


@dataclass(frozen=True)
class CriticalRadius:
    """Root rho > 1 of a_{n+1}(rho) - (n+1) a_1(rho) for even n."""

    n: int
    rho_star: float
    residual: float = field(default=0.0)

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise DomainError(f"n must be even and >= 2, got {self.n}")
        if not self.rho_star > 1:
            raise InvariantError(f"critical radius must exceed 1, got {self.rho_star}")


def rho_star(n: int) -> CriticalRadius:
    """Radius beyond which min |U_n| (n even) sits on the minor axis."""
    if n < 2 or n % 2:
        raise DomainError(f"n must be even and >= 2, got {n}")

    def f(r):
        return _a(n + 1, r) - (n + 1) * _a(1, r)

    def df(r):
        return 0.5 * (n + 1) * (r**n - r ** (-n - 2)) - 0.5 * (n + 1) * (1 - r**-2)

    lo, hi = 1 + 1e-12, 4.0
    if f(lo) >= 0:
        raise NoRootError(f"no sign change at the lower bracket end for n={n}")
    while f(hi) <= 0:
        hi *= 2
        if hi > 1e6:
            raise NoRootError(f"could not bracket the critical radius for n={n}")
    # bisect to a tight bracket, then let safeguarded Newton finish
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-9:
            break
    r = newton_bisect(f, df, lo, hi)
    # keep whichever neighbouring double has the smallest residual
    r = min((np.nextafter(r, 0.0), r, np.nextafter(r, 8.0)), key=lambda x: abs(f(x)))
    r = float(r)
    res = f(r)
    # one ulp in rho moves f by ulp*f'; for large n that alone exceeds 1e-12
    tol = max(1e-12, 2 * math.ulp(r) * abs(df(r)))
    if abs(res) > tol:
        raise InvariantError(f"critical radius residual {res} exceeds {tol} for n={n}")
    return CriticalRadius(n, r, res)


def fold_angle(theta):
    """Map theta to [0, pi/2] using the symmetries theta -> -theta, pi - theta."""
    t = np.mod(theta, math.pi)
    return np.where(t > math.pi / 2, math.pi - t, t)


def min_cheb_U(n: int, e: BernsteinEllipse, *, cross_check: bool = False, grid: int = DEFAULT_GRID) -> ExtremumReport:
    """Minimum of |U_n| on the ellipse.

    Closed form at z = +-i(rho - 1/rho)/2 for odd n, and for even n once rho
    reaches the critical radius.  Below it the minimum is sampled and the
    note records whether the folded minimiser lies in
    ((n/(n+1)) pi/2, pi/2).
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    if not e.rho > 1:
        raise DomainError("the minimum of |U_n| needs rho > 1")
    r = e.rho
    f = lambda z: cheb_U(n, z)  # noqa: E731
    df = _cheb_U_derivative(n)
    minor = (0.5 * math.pi, 1.5 * math.pi)
    if n % 2:
        value = (r ** (n + 1) - r ** (-n - 1)) / (r + 1 / r)
        rep = ExtremumReport("min", value, r, minor, "closed-form", True, "min-chebyshev-U-odd")
        return _finish(rep, f, e, df, cross_check, grid)
    crit = rho_star(n).rho_star
    if r >= crit:
        value = (r ** (n + 1) + r ** (-n - 1)) / (r + 1 / r)
        rep = ExtremumReport("min", value, r, minor, "closed-form", True, "min-chebyshev-U-even")
        return _finish(rep, f, e, df, cross_check, grid)
    s = sample_extremum(f, e, "min", grid=grid, derivative=df)
    folded = fold_angle(np.array(s.thetas))
    lo = n / (n + 1) * math.pi / 2
    inside = bool(np.all((folded > lo) & (folded < math.pi / 2)))
    note = (
        f"rho below critical radius {crit!r}; folded minimiser(s) "
        f"{'inside' if inside else 'OUTSIDE'} ({lo!r}, pi/2)"
    )
    return ExtremumReport("min", s.value, r, s.thetas, "sampled", False, "min-chebyshev-U-subcritical", note)


def _cheb_U_derivative(n: int):
    # U_n = P_n^{(1/2,1/2)} scaled; differentiate through the Jacobi form
    if n == 0:
        return lambda z: np.zeros_like(np.asarray(z, dtype=complex))
    p = JacobiParams(0.5, 0.5)
    scale = float(gegenbauer_prefactor(GegenbauerParam(1.0), n))
    return lambda z: scale * jacobi_eval_derivative(p, n, z)


# -- Gegenbauer minima --------------------------------------------------------

def _gegenbauer_funcs(g: GegenbauerParam, n: int):
    scale = float(gegenbauer_prefactor(g, n))
    p = g.jacobi
    return (lambda z: gegenbauer_eval(g, n, z)), (lambda z: scale * jacobi_eval_derivative(p, n, z))


def gegenbauer_min_conditions(lam: float, n: int, rho: float) -> tuple[bool, str]:
    """Whether a closed-form minor-axis minimum is established, and its tag."""
    if n == 1:
        return True, "min-gegenbauer-linear"
    if lam == 1.0:
        if n % 2 or rho >= rho_star(n).rho_star:
            return True, "min-chebyshev-U"
        return False, ""
    if rho >= RHO2_STAR and (lam > 1 or (0 < lam < 1 and n % 2 == 1)):
        return True, "min-gegenbauer-minor-axis"
    return False, ""


def min_gegenbauer(
    g: GegenbauerParam, n: int, e: BernsteinEllipse, *, cross_check: bool = False, grid: int = DEFAULT_GRID
) -> ExtremumReport:
    """Minimum of |C_n^lambda| on the ellipse.

    The minor-axis endpoints are certified for n = 1, for rho >= rho_2* when
    lambda > 1 or (0 < lambda < 1 and n odd), and for lambda = 1 under the
    U_n conditions.  Other cases, including -1/2 < lambda < 0, are sampled.
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    if g.lam == 0:
        raise DomainError("lambda must be nonzero")
    if not e.rho > 1:
        raise DomainError("the minimum on the ellipse needs rho > 1")
    f, df = _gegenbauer_funcs(g, n)
    ok, tag = gegenbauer_min_conditions(g.lam, n, e.rho)
    if not ok:
        return _sampled("min", f, e, df, grid, note="outside the certified parameter range")
    value = float(abs(gegenbauer_eval(g, n, 1j * e.semi_minor)))
    rep = ExtremumReport("min", value, e.rho, (0.5 * math.pi, 1.5 * math.pi), "closed-form", True, tag)
    return _finish(rep, f, e, df, cross_check, grid)


def min_on_ellipse(p: JacobiParams, n: int, e: BernsteinEllipse, *, grid: int = DEFAULT_GRID) -> ExtremumReport:
    """Minimum of |P_n^{(alpha,beta)}| on the ellipse, certified when possible.

    For alpha == beta the Gegenbauer/Chebyshev results apply after removing
    the positive normalisation constant; otherwise the minimum is sampled.
    """
    if p.alpha == p.beta:
        lam = p.alpha + 0.5
        if lam == 0:
            c = math.exp(math.lgamma(n + 0.5) - math.lgamma(0.5) - math.lgamma(n + 1))
            rep = min_cheb_T(n, e, grid=grid)
        else:
            g = GegenbauerParam(lam)
            c = 1.0 / float(gegenbauer_prefactor(g, n))
            rep = min_gegenbauer(g, n, e, grid=grid)
        return ExtremumReport(
            "min", c * rep.value, e.rho, rep.thetas, rep.method,
            rep.theorem_conditions_met, rep.theorem_tag, rep.note,
        )
    f, df = _jacobi_funcs(p, n)
    return _sampled("min", f, e, df, grid)


# -- rational factor ----------------------------------------------------------

def lemma_rational_max(
    s: float, t: float, e: BernsteinEllipse, *, cross_check: bool = False, grid: int = DEFAULT_GRID
) -> ExtremumReport:
    """Maximum of |(z^2 - s^2)/(z^2 - t^2)| on the ellipse for 0 < t < s < 1.

    For rho >= rho_2* it is (b^2 + s^2)/(b^2 + t^2) at the minor-axis
    endpoints, b the semi-minor axis.
    """
    if not (0 < t < s < 1):
        raise DomainError(f"need 0 < t < s < 1, got s={s!r}, t={t!r}")
    if not e.rho > 1:
        raise DomainError("rho must exceed 1 (the interval contains the poles)")
    f = lambda z: (z * z - s * s) / (z * z - t * t)  # noqa: E731
    df = lambda z: 2 * z * (s * s - t * t) / (z * z - t * t) ** 2  # noqa: E731
    note = "near-degenerate: s and t nearly coincide, the ratio is close to 1" if s - t < 1e-6 else ""
    if e.rho >= RHO2_STAR:
        b2 = e.semi_minor**2
        value = (b2 + s * s) / (b2 + t * t)
        rep = ExtremumReport(
            "max", value, e.rho, (0.5 * math.pi, 1.5 * math.pi), "closed-form", True,
            "rational-factor-minor-axis", note,
        )
        return _finish(rep, f, e, df, cross_check, grid)
    return _sampled("max", f, e, df, grid, note=note or "rho below rho_2*")


# -- exploratory critical radius ---------------------------------------------

@dataclass(frozen=True)
class RadiusEstimate:
    """Numerical estimate of the radius where the minimiser of |C_n^lambda|
    reaches the minor axis.  Not certified: it rests on sampling only."""

    n: int
    lam: float
    rho_estimate: float
    certified: bool = False
    note: str = "exploratory estimate from sampled minimisers; not certified"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda": self.lam,
            "rho_estimate": self.rho_estimate,
            "certified": self.certified,
            "note": self.note,
        }


def _on_minor_axis(g, n, rho, grid, theta_tol):
    f, df = _gegenbauer_funcs(g, n)
    s = sample_extremum(f, BernsteinEllipse(rho), "min", grid=grid, derivative=df)
    folded = fold_angle(np.array(s.thetas))
    return bool(np.all(np.abs(folded - math.pi / 2) <= theta_tol))


def estimate_critical_radius(
    g: GegenbauerParam,
    n: int,
    *,
    lo: float = 1.0 + 1e-3,
    hi: float = 4.0,
    rtol: float = 1e-10,
    grid: int = 2**12,
    theta_tol: float = 1e-5,
) -> RadiusEstimate:
    """Bisection in rho on "the sampled minimiser lies on the minor axis".

    Assumes the predicate is false at ``lo`` and true at ``hi``; raises
    NoRootError otherwise.
    """
    if n < 2 or n % 2:
        raise DomainError(f"n must be even and >= 2, got {n}")
    if _on_minor_axis(g, n, lo, grid, theta_tol):
        raise NoRootError(f"minimiser already on the minor axis at rho={lo}")
    if not _on_minor_axis(g, n, hi, grid, theta_tol):
        raise NoRootError(f"minimiser still off the minor axis at rho={hi}")
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if _on_minor_axis(g, n, mid, grid, theta_tol):
            hi = mid
        else:
            lo = mid
    return RadiusEstimate(n, g.lam, 0.5 * (lo + hi))
