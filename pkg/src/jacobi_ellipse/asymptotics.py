"""Large-degree behaviour of Jacobi polynomials on Bernstein ellipses.

On E_rho (rho > 1), with z = (u + 1/u)/2,

    sqrt(pi n) 2^-(a+b) u^-n P_n(z)
        = (1 - 1/u)^(-a-1/2) (1 + 1/u)^(-b-1/2) * (1 + c(u)/n + O(1/n^2)),

and the first-order error is bounded by Lambda(rho, a, b)/n.  This module
provides the ingredients (conformal map, Szego function, correction terms),
the constant Lambda, a measured-error report, the large-n expansion of the
leading coefficient, and the resulting lower bound for min |P_n| on E_rho.

All fractional powers use the principal branch.  For |u| > 1 the bases
1 +- 1/u have positive real part, and z +- 1 leave the negative real axis
only where the combined expression is continuous.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .ellipse import BernsteinEllipse, coeffs_recurrence, eval_ellipse_series_scaled
from .errors import DomainError, InvariantError, PoleError
from .extrema import sample_extremum
from .orthopoly import JacobiParams, golden_section, jacobi_eval, jacobi_eval_derivative
from .scalar import LogScaled, sqrt_zsq_minus_1

__all__ = [
    "AsymptoticReport",
    "CircleMax",
    "DEFAULT_CN",
    "phi",
    "szego_D",
    "szego_D_infinity",
    "szego_D_quadrature",
    "pi1",
    "pi1_hat",
    "pi2",
    "leading_term",
    "lambda_constant",
    "estimate_error",
    "kn_expansion",
    "circle_max",
    "lower_bound",
]

DEFAULT_CN = 0.9
CSV_FIELDS = ("n", "rho", "alpha", "beta", "Lambda", "max_error", "n_times_error", "lower_bound", "min_abs")


def _scalar(out):
    return out[()] if np.ndim(out) == 0 else out


def phi(z):
    """phi(z) = z + sqrt(z^2 - 1); maps the cut plane onto |w| > 1."""
    return _scalar(np.asarray(z, dtype=complex) + sqrt_zsq_minus_1(z))


def szego_D(p: JacobiParams, z):
    """Szego function of (1-x)^a (1+x)^b: (z-1)^(a/2) (z+1)^(b/2) / phi(z)^((a+b)/2)."""
    z = np.asarray(z, dtype=complex)
    w = phi(z)
    a, b = p.alpha, p.beta
    return _scalar((z - 1) ** (a / 2) * (z + 1) ** (b / 2) / w ** ((a + b) / 2))


def szego_D_infinity(p: JacobiParams) -> float:
    """Limit of the Szego function at infinity, 2^(-(a+b)/2)."""
    return 2.0 ** (-p.ab / 2)


def szego_D_quadrature(p: JacobiParams, z: complex) -> complex:
    """Szego function from its defining integral, by adaptive quadrature.

    With x = cos t the integral becomes
        sqrt(z^2-1)/(2 pi) * int_0^pi log w(cos t) / (z - cos t) dt,
    and log(1 -+ cos t) = log 2 + 2 log sin(t/2) resp. 2 log cos(t/2) keeps
    the endpoint singularities accurate.  Independent of :func:`szego_D`.
    """
    z = complex(z)
    if z.imag == 0 and -1 <= z.real <= 1:
        raise DomainError("the Szego function is undefined on [-1, 1]")
    a, b = p.alpha, p.beta
    ln2 = math.log(2.0)

    def logw(t):
        out = 0.0
        if a:
            out += a * (ln2 + 2 * math.log(math.sin(t / 2)))
        if b:
            out += b * (ln2 + 2 * math.log(math.cos(t / 2)))
        return out

    # near [-1, 1] the kernel is sharply peaked at t0 = arccos(Re z); subtract
    # log w(cos t0) and integrate that constant exactly:
    # int_0^pi dt / (z - cos t) = pi / sqrt(z^2 - 1)
    root = complex(sqrt_zsq_minus_1(z))
    t0 = math.acos(min(1.0, max(-1.0, z.real)))
    c0 = logw(t0) if -1 < z.real < 1 else 0.0

    def re(t):
        return ((logw(t) - c0) / (z - math.cos(t))).real

    def im(t):
        return ((logw(t) - c0) / (z - math.cos(t))).imag

    # breaks graded toward both ends and toward the kernel peak resolve a
    # peak sitting on (or next to) a log singularity
    grade = [math.pi * 2.0**-k for k in range(1, 25)]
    near = [t0 + sg * g for g in grade for sg in (-1, 1)]
    pts = [0.0, math.pi, t0, *grade, *(math.pi - g for g in grade), *near]
    breaks = sorted({t for t in pts if 0.0 <= t <= math.pi})
    kw = dict(limit=200, epsabs=1e-12, epsrel=1e-12)
    integral = 0j
    for lo, hi in zip(breaks, breaks[1:]):
        integral += quad(re, lo, hi, **kw)[0] + 1j * quad(im, lo, hi, **kw)[0]
    integral += c0 * math.pi / root
    return complex(np.exp(root / (2 * math.pi) * integral))


def _check_poles(w, what):
    w = np.asarray(w, dtype=complex)
    if np.any(w == 1) or np.any(w == -1):
        raise PoleError(f"{what} has a pole at +-1")


def pi1_hat(u, p: JacobiParams):
    """(4b^2-1)/(8(u+1)) - (4a^2-1)/(8(u-1))."""
    u = np.asarray(u, dtype=complex)
    _check_poles(u, "pi1_hat")
    a, b = p.alpha, p.beta
    return _scalar((4 * b * b - 1) / (8 * (u + 1)) - (4 * a * a - 1) / (8 * (u - 1)))


def pi1(z, p: JacobiParams):
    """First correction term of the monic expansion, as a function of z."""
    z = np.asarray(z, dtype=complex)
    _check_poles(z, "pi1")
    w = np.asarray(phi(z))
    a, b = p.alpha, p.beta
    return _scalar(-(4 * a * a - 1) / (8 * (w - 1)) + (4 * b * b - 1) / (8 * (w + 1)))


def pi2(z, p: JacobiParams):
    """Second correction term, implemented exactly as commonly printed.

    The printed bracket carries an 8 in the (phi+1)^-2 denominator but not in
    the (phi-1)^-2 one, which looks like a misprint.  The term is not used by
    any bound in this package.
    """
    z = np.asarray(z, dtype=complex)
    _check_poles(z, "pi2")
    w = np.asarray(phi(z))
    a, b = p.alpha, p.beta
    s = a + b
    A, B = 4 * a * a - 1, 4 * b * b - 1
    out = (
        A * s / (16 * (w - 1))
        - B * s / (16 * (w + 1))
        - A * B / (128 * (z * z - 1))
        + (2 * a * a + 2 * b * b - 5) / 64 * (A / (w - 1) ** 2 + B / (8 * (w + 1) ** 2))
    )
    return _scalar(out)


def _check_bases(u):
    w = 1 / np.asarray(u, dtype=complex)
    if np.any((1 - w).real <= 0) or np.any((1 + w).real <= 0):
        raise InvariantError("1 +- 1/u left the right half-plane; principal powers are not smooth")
    return w


def leading_term(p: JacobiParams, u):
    """(1 - 1/u)^(-a-1/2) (1 + 1/u)^(-b-1/2) for |u| > 1 (arrays allowed)."""
    u = np.asarray(u, dtype=complex)
    if np.any(np.abs(u) <= 1):
        raise DomainError("leading term requires |u| > 1")
    w = _check_bases(u)
    return _scalar((1 - w) ** (-p.alpha - 0.5) * (1 + w) ** (-p.beta - 0.5))


def _lambda_integrand(p: JacobiParams, u):
    u = np.asarray(u, dtype=complex)
    w = _check_bases(u)
    s = p.ab
    num = 4 * np.asarray(pi1_hat(u, p)) - s * s - s - 0.5
    den = 4 * (1 - w) ** (p.alpha + 0.5) * (1 + w) ** (p.beta + 0.5)
    return np.abs(num / den)


def _circle_argmax(func, rho, samples):
    """Max of a real function of theta on |u| = rho: sampling + golden refinement."""
    h = 2 * math.pi / samples
    theta = np.arange(samples) * h
    vals = func(rho * np.exp(1j * theta))
    local = (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))
    idx = np.flatnonzero(local & (vals >= vals.max() * (1 - 1e-3)))
    ts, fs = golden_section(
        lambda t: func(rho * np.exp(1j * t)), theta[idx] - h, theta[idx] + h, maximize=True, tol=1e-12
    )
    ts, fs = np.atleast_1d(ts), np.atleast_1d(fs)
    best = float(fs.max())
    tied = np.mod(ts[fs >= best * (1 - 1e-10)], 2 * math.pi)
    return best, tuple(sorted(float(t) for t in tied))


def lambda_constant(p: JacobiParams, e: BernsteinEllipse, *, samples: int = 4096) -> float:
    """Lambda(rho, a, b), the first-order error constant (maximum over |u| = rho)."""
    if not e.rho > 1:
        raise DomainError("Lambda needs rho > 1")
    return _circle_argmax(lambda u: _lambda_integrand(p, u), e.rho, samples)[0]


@dataclass(frozen=True)
class AsymptoticReport:
    """Measured first-order error of the scaled polynomial on one ellipse."""

    n: int
    alpha: float
    beta: float
    rho: float
    lambda_const: float
    max_abs_error: float
    first_order_ratio: float
    lower_bound: float
    min_abs_poly: float

    def __post_init__(self):
        if self.lambda_const < 0 or self.lower_bound <= 0 or self.min_abs_poly < 0:
            raise InvariantError(f"inconsistent asymptotic report: {self}")

    @property
    def params(self) -> JacobiParams:
        return JacobiParams(self.alpha, self.beta)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "beta": self.beta,
            "rho": self.rho,
            "Lambda": self.lambda_const,
            "max_error": self.max_abs_error,
            "n_times_error": self.n * self.max_abs_error,
            "first_order_ratio": self.first_order_ratio,
            "lower_bound": self.lower_bound,
            "min_abs": self.min_abs_poly,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> AsymptoticReport:
        return cls(
            n=int(obj["n"]),
            alpha=float(obj["alpha"]),
            beta=float(obj["beta"]),
            rho=float(obj["rho"]),
            lambda_const=float(obj["Lambda"]),
            max_abs_error=float(obj["max_error"]),
            first_order_ratio=float(obj.get("first_order_ratio", float(obj["n_times_error"]) / float(obj["Lambda"]))),
            lower_bound=float(obj["lower_bound"]),
            min_abs_poly=float(obj["min_abs"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> AsymptoticReport:
        return cls.from_dict(json.loads(text))

    def csv_row(self) -> list:
        d = self.to_dict()
        return [repr(d[k]) if isinstance(d[k], float) else str(d[k]) for k in CSV_FIELDS]


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        w.writerow(r.csv_row())
    return buf.getvalue()


def reports_from_csv(text: str) -> list:
    rows = csv.DictReader(io.StringIO(text))
    return [AsymptoticReport.from_dict(r) for r in rows]


def estimate_error(
    p: JacobiParams,
    n: int,
    e: BernsteinEllipse,
    *,
    grid: int = 4096,
    cn: float = DEFAULT_CN,
    min_grid: int = 2**14,
) -> AsymptoticReport:
    """Sup over a theta-grid of |leading term - sqrt(pi n) 2^-(a+b) u^-n P_n(z)|.

    The scaled polynomial is summed from its Laurent coefficients without
    forming u^n, so nothing overflows up to the maximum supported degree.
    ``min_abs_poly`` is the sampled minimum value of |P_n| on the ellipse.
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    if not e.rho > 1:
        raise DomainError("asymptotic estimate needs rho > 1")
    t = coeffs_recurrence(p, n)
    u = e.u(np.arange(grid) * (2 * math.pi / grid))
    err = float(np.max(np.abs(leading_term(p, u) - eval_ellipse_series_scaled(t, u))))
    lam = lambda_constant(p, e)
    lb = lower_bound(p, n, e, cn=cn)
    smin = sample_extremum(
        lambda z: jacobi_eval(p, n, z), e, "min", grid=min_grid,
        derivative=lambda z: jacobi_eval_derivative(p, n, z), max_candidates=64,
    )
    return AsymptoticReport(n, p.alpha, p.beta, e.rho, lam, err, n * err / lam, lb, smin.value)


def kn_expansion(p: JacobiParams, n: int) -> tuple[LogScaled, float]:
    """Two-term large-n form of the leading coefficient.

    k_n = 2^(n+a+b)/sqrt(pi n) * [1 - ((a+b)^2 + (a+b) + 1/2)/(4n) + O(1/n^2)];
    returns (2^(n+a+b)/sqrt(pi n) in log form, the 1/n correction).
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    s = p.ab
    lead = LogScaled((n + s) * math.log(2.0) - 0.5 * math.log(math.pi * n), 1)
    return lead, -(s * s + s + 0.5) / (4 * n)


@dataclass(frozen=True)
class CircleMax:
    """max_{|u|=rho} |(1-1/u)^(a+1/2) (1+1/u)^(b+1/2)| and its maximisers."""

    value: float
    thetas: tuple
    method: str
    sampled_value: float
    sampled_thetas: tuple = ()


def _bases_modulus(p: JacobiParams, u):
    w = _check_bases(u)
    return np.abs((1 - w) ** (p.alpha + 0.5) * (1 + w) ** (p.beta + 0.5))


def circle_max(p: JacobiParams, e: BernsteinEllipse, *, samples: int = 4096) -> CircleMax:
    """Circle maximum entering the lower bound.

    For a == b it is |1 - u^-2|^(a+1/2) maximised: (1 + rho^-2)^(a+1/2) at
    u = +-i rho when a >= -1/2, else (1 - rho^-2)^(a+1/2) at u = +-rho.
    The sampled value is always computed as a cross-check.
    """
    if not e.rho > 1:
        raise DomainError("circle maximum needs rho > 1")
    sampled, thetas = _circle_argmax(lambda u: _bases_modulus(p, u), e.rho, samples)
    if p.alpha == p.beta:
        x = e.rho**-2
        if p.alpha >= -0.5:
            return CircleMax((1 + x) ** (p.alpha + 0.5), (0.5 * math.pi, 1.5 * math.pi), "closed-form", sampled, thetas)
        return CircleMax((1 - x) ** (p.alpha + 0.5), (0.0, math.pi), "closed-form", sampled, thetas)
    return CircleMax(sampled, thetas, "sampled", sampled, thetas)


def lower_bound(p: JacobiParams, n: int, e: BernsteinEllipse, *, cn: float = DEFAULT_CN) -> float:
    """cn 2^(a+b) pi^(-1/2) rho^n / (M sqrt(n)), M the circle maximum.

    Valid for large n with cn close to 1; cn is a tunable constant.
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    m = circle_max(p, e).value
    logv = math.log(cn) + p.ab * math.log(2.0) - 0.5 * math.log(math.pi) + n * math.log(e.rho) - math.log(m) - 0.5 * math.log(n)
    return math.exp(logv)
