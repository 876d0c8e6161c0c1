"""Bernstein ellipses and the Laurent expansion of Jacobi polynomials on them.

On the ellipse z = (u + 1/u)/2, |u| = rho, a Jacobi polynomial is a symmetric
Laurent polynomial in u:

    P_n(z) = sum_{k=-n}^{n} d_{|k|,n} u^k.

The coefficients d_{k,n} are available through three independent routes: the
terminating 3F2 formula, a downward three-term recurrence in k, and a discrete
cosine transform of samples on [-1, 1].  For alpha == beta there is also a
closed form in Gamma functions.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.fft import dct

from .errors import DomainError
from .orthopoly import JacobiParams, jacobi_eval
from .scalar import (
    LogScaled,
    hyp3f2_terminating_exact,
    log_gamma_signed,
    log_pochhammer,
    pochhammer,
)

__all__ = [
    "MAX_DEGREE",
    "BernsteinEllipse",
    "EllipsePoint",
    "CoefficientMethod",
    "CoefficientTable",
    "SignPattern",
    "SignClassification",
    "coeffs_explicit",
    "coeffs_recurrence",
    "coeffs_gegenbauer_closed",
    "coeffs_transform_oracle",
    "series_at_u",
    "eval_ellipse_series",
    "eval_ellipse_series_scaled",
    "classify_signs",
]

MAX_DEGREE = 512


@dataclass(frozen=True)
class BernsteinEllipse:
    """Ellipse with foci +-1 and major/minor semi-axes (rho +- 1/rho)/2."""

    rho: float

    def __post_init__(self):
        if not (math.isfinite(self.rho) and self.rho >= 1):
            raise DomainError(f"rho must be >= 1, got {self.rho!r}")
        object.__setattr__(self, "rho", float(self.rho))

    @property
    def semi_major(self) -> float:
        return 0.5 * (self.rho + 1 / self.rho)

    @property
    def semi_minor(self) -> float:
        return 0.5 * (self.rho - 1 / self.rho)

    @property
    def is_degenerate(self) -> bool:
        return self.rho == 1.0

    def point(self, theta: float) -> EllipsePoint:
        return EllipsePoint(self.rho, theta)

    def u(self, theta):
        """u = rho e^{i theta}, vectorised over theta."""
        theta = np.asarray(theta, dtype=float)
        return self.rho * np.exp(1j * theta)

    def z(self, theta):
        u = self.u(theta)
        return 0.5 * (u + 1 / u)


@dataclass(frozen=True)
class EllipsePoint:
    """Point of E_rho given by its parameter angle; theta is reduced to [0, 2 pi)."""

    rho: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.rho) and self.rho >= 1):
            raise DomainError(f"rho must be >= 1, got {self.rho!r}")
        theta = math.fmod(float(self.theta), 2 * math.pi)
        if theta < 0:
            theta += 2 * math.pi
        if theta >= 2 * math.pi:
            theta = 0.0
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "theta", theta)

    @property
    def u(self) -> complex:
        return complex(self.rho * math.cos(self.theta), self.rho * math.sin(self.theta))

    @property
    def z(self) -> complex:
        u = self.u
        return 0.5 * (u + 1 / u)


class CoefficientMethod(str, enum.Enum):
    EXPLICIT_3F2 = "explicit-3F2"
    RECURRENCE = "recurrence"
    TRANSFORM_ORACLE = "transform-oracle"
    GEGENBAUER_CLOSED = "gegenbauer-closed"


@dataclass(frozen=True)
class CoefficientTable:
    """Coefficients d_{0,n}, ..., d_{n,n} for fixed (n, alpha, beta)."""

    n: int
    params: JacobiParams
    d: tuple
    method: CoefficientMethod

    def __post_init__(self):
        if len(self.d) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.d)}")
        object.__setattr__(self, "d", tuple(float(x) for x in self.d))
        object.__setattr__(self, "method", CoefficientMethod(self.method))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.d)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "method": self.method.value,
            "d": list(self.d),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> CoefficientTable:
        return cls(
            n=int(obj["n"]),
            params=JacobiParams(float(obj["alpha"]), float(obj["beta"])),
            d=tuple(float(x) for x in obj["d"]),
            method=CoefficientMethod(obj["method"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> CoefficientTable:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "d_k"])
        for k, v in enumerate(self.d):
            w.writerow([k, repr(v)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, params: JacobiParams, method) -> CoefficientTable:
        rows = list(csv.DictReader(io.StringIO(text)))
        d = [float(r["d_k"]) for r in sorted(rows, key=lambda r: int(r["k"]))]
        return cls(len(d) - 1, params, tuple(d), method)


def _check_degree(n: int):
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    if n > MAX_DEGREE:
        raise DomainError(
            f"degree {n} exceeds the supported maximum {MAX_DEGREE} for double precision"
        )


def coeffs_explicit(p: JacobiParams, n: int) -> CoefficientTable:
    """d_{k,n} from the terminating 3F2 representation.

    d_{k,n} = (n+a+b+1)_k (k+a+1)_{n-k} / ((n-k)! 4^k k!)
              * 3F2(k-n, n+k+a+b+1, k+1/2; k+a+1, 2k+1; 1)

    Every factor is rational in (a, b), so each entry is assembled exactly and
    rounded once.  Cost grows roughly like n^3 in big-integer work; use
    :func:`coeffs_recurrence` for large degrees.
    """
    _check_degree(n)
    a, b = Fraction(p.alpha), Fraction(p.beta)
    s = a + b
    d = []
    for k in range(n + 1):
        pref = pochhammer(n + s + 1, k) * pochhammer(k + a + 1, n - k)
        pref /= math.factorial(n - k) * 4**k * math.factorial(k)
        f = hyp3f2_terminating_exact(k - n, n + k + s + 1, Fraction(2 * k + 1, 2), k + a + 1, 2 * k + 1)
        d.append(float(pref * f))
    return CoefficientTable(n, p, tuple(d), CoefficientMethod.EXPLICIT_3F2)


def _top_coefficients(p: JacobiParams, n: int) -> tuple[float, float]:
    # d_{n,n} = (n+a+b+1)_n / (4^n n!) as a product of O(1) factors, which
    # neither overflows nor suffers the cancellation of a log-gamma difference;
    # d_{n-1,n} = (a-b) d_{n,n} 2n / (2n+a+b)  (n >= 1)
    s = p.ab
    dnn = 1.0
    for j in range(1, n + 1):
        dnn *= (n + s + j) / (4 * j)
    return dnn, (p.alpha - p.beta) * dnn * 2 * n / (2 * n + s)


def coeffs_recurrence(p: JacobiParams, n: int) -> CoefficientTable:
    """d_{k,n} by the downward three-term recurrence from k = n.

    The common denominator n(n+a+b+1) - k^2 - (a+b+1)k equals
    (n-k)(n+k+a+b+1), which is positive for 0 <= k <= n-2.
    """
    _check_degree(n)
    if n == 0:
        return CoefficientTable(0, p, (1.0,), CoefficientMethod.RECURRENCE)
    a, b, s = p.alpha, p.beta, p.ab
    d = [0.0] * (n + 1)
    d[n], d[n - 1] = _top_coefficients(p, n)
    nn = n * (n + s + 1)
    for k in range(n - 2, -1, -1):
        den = (n - k) * (n + k + s + 1)
        c1 = 2 * (a - b) * (k + 1)
        c2 = nn - (k + 2) ** 2 + (s + 1) * (k + 2)
        d[k] = (c1 * d[k + 1] + c2 * d[k + 2]) / den
    return CoefficientTable(n, p, tuple(d), CoefficientMethod.RECURRENCE)


def coeffs_gegenbauer_closed(p: JacobiParams, n: int) -> CoefficientTable:
    """Closed-form d_{k,n} when alpha == beta; entries with n-k odd vanish.

    For n-k even,
        d_{k,n} = 4^a Gamma(n+a+1) Gamma((k+n+1)/2 + a) Gamma((n-k+1)/2 + a)
                  / (sqrt(pi) Gamma(n+2a+1) Gamma((k+n)/2 + 1) Gamma((n-k)/2 + 1) Gamma(a+1/2)).
    The ratio Gamma((n-k+1)/2 + a) / Gamma(a + 1/2) is taken as the Pochhammer
    symbol (a+1/2)_{(n-k)/2}, which stays finite at a = -1/2.
    """
    _check_degree(n)
    if p.alpha != p.beta:
        raise DomainError("closed form requires alpha == beta")
    a = p.alpha
    if n == 0:
        return CoefficientTable(0, p, (1.0,), CoefficientMethod.GEGENBAUER_CLOSED)
    common = (
        LogScaled(2 * a * math.log(2.0) - 0.5 * math.log(math.pi), 1)
        * log_gamma_signed(n + a + 1)
        / log_gamma_signed(n + 2 * a + 1)
    )
    d = []
    for k in range(n + 1):
        if (n - k) % 2:
            d.append(0.0)
            continue
        h = (n - k) // 2
        term = (
            common
            * log_gamma_signed((k + n + 1) / 2 + a)
            * log_pochhammer(a + 0.5, h)
            / LogScaled(math.lgamma((k + n) / 2 + 1) + math.lgamma(h + 1), 1)
        )
        d.append(term.to_float())
    return CoefficientTable(n, p, tuple(d), CoefficientMethod.GEGENBAUER_CLOSED)


def coeffs_transform_oracle(p: JacobiParams, n: int, m: int | None = None) -> CoefficientTable:
    """d_{k,n} = (1/pi) int_0^pi P_n(cos t) cos(k t) dt by trapezoidal DCT-I.

    The trapezoid rule on m+1 equispaced nodes of [0, pi] is exact for cosine
    polynomials of degree < 2m; the integrand has degree n + k <= 2n, so any
    m > n is exact.  The default m = 4n keeps the margin the design calls for.
    """
    _check_degree(n)
    if m is None:
        m = max(4 * n, 4)
    if m < 4 * n:
        raise DomainError(f"need at least 4n = {4 * n} sample intervals, got {m}")
    t = np.linspace(0.0, math.pi, m + 1)
    x = np.cos(t)
    x[0], x[-1] = 1.0, -1.0
    vals = np.asarray(jacobi_eval(p, n, x)).real
    y = dct(vals, type=1) / (2 * m)
    return CoefficientTable(n, p, tuple(y[: n + 1]), CoefficientMethod.TRANSFORM_ORACLE)


def _laurent_coefficients(t: CoefficientTable) -> np.ndarray:
    # c_j = d_{|n-j|}, j = 0..2n, so that sum_k d_|k| u^k = u^n sum_j c_j u^-j
    d = t.array
    return np.concatenate([d[::-1], d[1:]])


def series_at_u(t: CoefficientTable, u, *, scaled: bool = False):
    """Evaluate the Laurent series at (arrays of) u.

    Horner's scheme in w = 1/u starts from the k = -n end, so for |u| > 1 the
    smallest terms are accumulated first.  With ``scaled=True`` the factor u^n
    is omitted, i.e. sum_k d_|k| u^(k-n) is returned; all powers involved then
    have modulus <= 1.
    """
    u = np.asarray(u, dtype=complex)
    w = 1 / u
    c = _laurent_coefficients(t)
    acc = np.full_like(u, c[-1])
    for cj in c[-2::-1]:
        acc = acc * w + cj
    out = acc if scaled else acc * u**t.n
    return out[()] if out.ndim == 0 else out


def eval_ellipse_series(t: CoefficientTable, pt: EllipsePoint) -> complex:
    """P_n(z) at an ellipse point from its Laurent coefficients."""
    return complex(series_at_u(t, pt.u))


def scaled_prefactor(p: JacobiParams, n: int) -> float:
    """sqrt(pi n) 2^-(alpha+beta)."""
    return math.sqrt(math.pi * n) * 2.0 ** (-p.ab)


def eval_ellipse_series_scaled(t: CoefficientTable, pt) -> complex:
    """sqrt(pi n) 2^-(a+b) u^-n P_n(z), formed without the factor u^n.

    ``pt`` may be an EllipsePoint or an array of u values.
    """
    if t.n < 1:
        raise DomainError("scaled series needs n >= 1")
    u = pt.u if isinstance(pt, EllipsePoint) else pt
    if np.any(np.abs(np.asarray(u)) <= 1):
        raise DomainError("scaled series requires |u| = rho > 1")
    out = scaled_prefactor(t.params, t.n) * series_at_u(t, u, scaled=True)
    return complex(out) if np.ndim(out) == 0 else out


class SignPattern(str, enum.Enum):
    ALL_POSITIVE = "all-positive"
    ALTERNATING = "alternating"
    GEGENBAUER_EVEN_POSITIVE = "gegenbauer-even-positive"
    CHEBYSHEV_FIRST_DEGENERATE = "chebyshev-first-degenerate"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class SignClassification:
    pattern: SignPattern
    signs: tuple = field(default=())


def classify_signs(t: CoefficientTable, *, zero_tol: float = 1e-14) -> SignClassification:
    """Match the sign pattern of a table against the known parameter cases.

    Coefficients with |d_k| <= zero_tol * max|d| count as zero.  A case is
    returned only when its parameter hypotheses hold *and* the observed signs
    agree; otherwise the result is UNCLASSIFIED with the signs attached.
    """
    d = t.array
    thresh = zero_tol * np.max(np.abs(d))
    signs = np.where(np.abs(d) <= thresh, 0, np.sign(d)).astype(int)
    k = np.arange(t.n + 1)
    a, b = t.params.alpha, t.params.beta
    obs = tuple(int(s) for s in signs)

    if a > b and a + b >= -1 and np.all(signs > 0):
        return SignClassification(SignPattern.ALL_POSITIVE, obs)
    if a < b and a + b >= -1 and np.all(signs * (-1.0) ** (t.n - k) > 0):
        return SignClassification(SignPattern.ALTERNATING, obs)
    if a == b == -0.5:
        rest_zero = t.n == 0 or np.all(signs[:-1] == 0)
        if signs[-1] > 0 and rest_zero:
            return SignClassification(SignPattern.CHEBYSHEV_FIRST_DEGENERATE, obs)
    elif a == b and a > -0.5:
        even = (t.n - k) % 2 == 0
        if np.all(signs[even] > 0) and np.all(signs[~even] == 0):
            return SignClassification(SignPattern.GEGENBAUER_EVEN_POSITIVE, obs)
    return SignClassification(SignPattern.UNCLASSIFIED, obs)
