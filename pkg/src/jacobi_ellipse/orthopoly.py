"""Jacobi, Gegenbauer and Chebyshev polynomials at real and complex points.

Evaluation uses the classical three-term recurrences; the explicit
double-binomial sum for Jacobi polynomials is kept only as an independent
check.  All evaluators broadcast over numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoRootError
from .scalar import LogScaled, log_gamma, log_pochhammer

__all__ = [
    "JacobiParams",
    "GegenbauerParam",
    "IntervalMax",
    "jacobi_eval",
    "jacobi_eval_def_sum",
    "jacobi_def_sum_condition",
    "jacobi_eval_derivative",
    "gegenbauer_eval",
    "gegenbauer_recurrence",
    "gegenbauer_prefactor",
    "gegenbauer_leading_coeff",
    "cheb_T",
    "cheb_U",
    "jacobi_leading_coeff",
    "jacobi_interval_max",
    "gegenbauer_zeros",
    "newton_bisect",
    "golden_section",
]


@dataclass(frozen=True)
class JacobiParams:
    """Jacobi parameters (alpha, beta), both strictly greater than -1."""

    alpha: float
    beta: float

    def __post_init__(self):
        for name in ("alpha", "beta"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > -1):
                raise DomainError(f"{name} must exceed -1, got {v!r}")
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))

    @property
    def is_gegenbauer(self) -> bool:
        return self.alpha == self.beta

    @property
    def is_cheb_first(self) -> bool:
        return self.alpha == self.beta == -0.5

    @property
    def is_cheb_second(self) -> bool:
        return self.alpha == self.beta == 0.5

    @property
    def ab(self) -> float:
        return self.alpha + self.beta


@dataclass(frozen=True)
class GegenbauerParam:
    """Gegenbauer parameter lambda > -1/2.

    ``lambda`` is a keyword, so the field is named ``lam``.
    """

    lam: float

    def __post_init__(self):
        if not (math.isfinite(self.lam) and self.lam > -0.5):
            raise DomainError(f"lambda must exceed -1/2, got {self.lam!r}")
        object.__setattr__(self, "lam", float(self.lam))

    @property
    def jacobi(self) -> JacobiParams:
        return JacobiParams(self.lam - 0.5, self.lam - 0.5)


def _as_complex(z):
    return np.asarray(z, dtype=complex)


def _unwrap(out):
    return out[()] if np.ndim(out) == 0 else out


def jacobi_eval(p: JacobiParams, n: int, z):
    """P_n^{(alpha, beta)}(z) by the three-term recurrence in the degree."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    z = _as_complex(z)
    a, b = p.alpha, p.beta
    p0 = np.ones_like(z)
    if n == 0:
        return _unwrap(p0)
    p1 = 0.5 * (a + b + 2) * z + 0.5 * (a - b)
    for k in range(2, n + 1):
        s = 2 * k + a + b
        c0 = 2 * k * (k + a + b) * (s - 2)
        c1 = (s - 1) * (s * (s - 2))
        c2 = (s - 1) * (a * a - b * b)
        c3 = 2 * (k + a - 1) * (k + b - 1) * s
        p0, p1 = p1, ((c1 * z + c2) * p1 - c3 * p0) / c0
    return _unwrap(p1)


def jacobi_eval_derivative(p: JacobiParams, n: int, z):
    """d/dz P_n^{(alpha,beta)}(z) = (n+alpha+beta+1)/2 * P_{n-1}^{(alpha+1,beta+1)}(z)."""
    if n == 0:
        return _unwrap(np.zeros_like(_as_complex(z)))
    shifted = JacobiParams(p.alpha + 1, p.beta + 1)
    return 0.5 * (n + p.ab + 1) * jacobi_eval(shifted, n - 1, z)


def _gen_binom(x: float, k: int) -> float:
    # C(x, k) for real x, integer k >= 0, as a product.
    out = 1.0
    for i in range(k):
        out *= (x - i) / (i + 1)
    return out


def _def_sum_terms(p: JacobiParams, n: int, z):
    z = _as_complex(z)
    terms = []
    for k in range(n + 1):
        c = _gen_binom(n + p.alpha, n - k) * _gen_binom(n + p.beta, k)
        terms.append(c * (z - 1) ** k * (z + 1) ** (n - k))
    return terms


def jacobi_eval_def_sum(p: JacobiParams, n: int, z):
    """P_n via the explicit double-binomial sum (oracle only, n <= 64).

    P_n(z) = 2^-n sum_k C(n+alpha, n-k) C(n+beta, k) (z-1)^k (z+1)^(n-k)
    """
    if n > 64:
        raise DomainError("definitional sum is only supported for n <= 64")
    terms = _def_sum_terms(p, n, z)
    return _unwrap(np.sum(terms, axis=0) / 2.0**n)


def jacobi_def_sum_condition(p: JacobiParams, n: int, z):
    """Cancellation factor sum|terms| / |sum| of the definitional sum.

    Multiplied by machine epsilon this bounds the relative rounding error of
    :func:`jacobi_eval_def_sum`; large values flag points where the oracle
    itself is unreliable.
    """
    terms = _def_sum_terms(p, n, z)
    mag = np.sum(np.abs(terms), axis=0)
    tot = np.abs(np.sum(terms, axis=0))
    with np.errstate(divide="ignore", invalid="ignore"):
        return _unwrap(np.where(tot > 0, mag / tot, np.inf))


def _check_lambda(g: GegenbauerParam):
    if g.lam == 0:
        raise DomainError("C_n^lambda is identically zero for lambda = 0 and n >= 1")


def gegenbauer_prefactor(g: GegenbauerParam, n: int) -> LogScaled:
    """Ratio C_n^lambda / P_n^{(lambda-1/2, lambda-1/2)}.

    Gamma(lam+1/2) Gamma(n+2 lam) / (Gamma(2 lam) Gamma(n+lam+1/2)), rewritten
    as (2 lam)_n / (lam+1/2)_n so that negative lambda is handled without
    evaluating Gamma at negative arguments.
    """
    _check_lambda(g)
    return log_pochhammer(2 * g.lam, n) / log_pochhammer(g.lam + 0.5, n)


def gegenbauer_eval(g: GegenbauerParam, n: int, z):
    """C_n^lambda(z) via the Jacobi recurrence and the Gegenbauer prefactor."""
    pref = gegenbauer_prefactor(g, n).to_float()
    return pref * jacobi_eval(g.jacobi, n, z)


def gegenbauer_recurrence(g: GegenbauerParam, n: int, z):
    """C_n^lambda(z) by its own three-term recurrence (independent check).

    k C_k = 2 (k + lam - 1) z C_{k-1} - (k + 2 lam - 2) C_{k-2}
    """
    z = _as_complex(z)
    lam = g.lam
    c0 = np.ones_like(z)
    if n == 0:
        return _unwrap(c0)
    c1 = 2 * lam * z
    for k in range(2, n + 1):
        c0, c1 = c1, (2 * (k + lam - 1) * z * c1 - (k + 2 * lam - 2) * c0) / k
    return _unwrap(c1)


def gegenbauer_leading_coeff(g: GegenbauerParam, n: int) -> LogScaled:
    """Coefficient of z^n in C_n^lambda: 2^n (lam)_n / n!."""
    _check_lambda(g)
    return LogScaled(n * math.log(2.0) - math.lgamma(n + 1), 1) * log_pochhammer(g.lam, n)


def cheb_T(n: int, z=None, *, u=None):
    """Chebyshev polynomial of the first kind.

    With ``u`` given (a point u = rho e^{i theta} of an ellipse parametrisation)
    the closed form (u^n + u^-n)/2 is used; otherwise the recurrence in z.
    """
    if u is not None:
        u = _as_complex(u)
        return _unwrap(0.5 * (u**n + u ** (-n)))
    z = _as_complex(z)
    t0 = np.ones_like(z)
    if n == 0:
        return _unwrap(t0)
    t1 = z.copy()
    for _ in range(2, n + 1):
        t0, t1 = t1, 2 * z * t1 - t0
    return _unwrap(t1)


def cheb_U(n: int, z=None, *, u=None):
    """Chebyshev polynomial of the second kind; u-form (u^{n+1}-u^{-n-1})/(u-u^-1)."""
    if u is not None:
        u = _as_complex(u)
        return _unwrap((u ** (n + 1) - u ** (-n - 1)) / (u - 1 / u))
    z = _as_complex(z)
    u0 = np.ones_like(z)
    if n == 0:
        return _unwrap(u0)
    u1 = 2 * z
    for _ in range(2, n + 1):
        u0, u1 = u1, 2 * z * u1 - u0
    return _unwrap(u1)


def jacobi_leading_coeff(p: JacobiParams, n: int) -> LogScaled:
    """k_n = Gamma(2n+a+b+1) / (2^n n! Gamma(n+a+b+1)) in log form."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    if n == 0:
        return LogScaled(0.0, 1)
    s = p.ab
    return LogScaled(
        log_gamma(2 * n + s + 1) - n * math.log(2.0) - log_gamma(n + 1) - log_gamma(n + s + 1),
        1,
    )


# -- one-dimensional search helpers ------------------------------------------

_INVPHI = (math.sqrt(5.0) - 1) / 2


def golden_section(f, a, b, *, maximize=False, tol=1e-12, maxiter=200):
    """Vectorised golden-section search on the brackets [a, b].

    ``f`` must accept an array and return real values of the same shape.
    Returns (x, f(x)) arrays; each bracket is assumed unimodal.
    """
    a = np.array(a, dtype=float, copy=True)
    b = np.array(b, dtype=float, copy=True)
    sgn = -1.0 if maximize else 1.0
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = sgn * f(c)
    fd = sgn * f(d)
    for _ in range(maxiter):
        if np.all(b - a <= tol):
            break
        left = fc < fd
        # minimum in [a, d]: d <- c; otherwise in [c, b]: c <- d
        a, b = np.where(left, a, c), np.where(left, d, b)
        c, d = np.where(left, b - _INVPHI * (b - a), d), np.where(left, c, a + _INVPHI * (b - a))
        fc, fd = np.where(left, np.nan, fd), np.where(left, fc, np.nan)
        fnew = sgn * f(np.where(left, c, d))
        fc = np.where(left, fnew, fc)
        fd = np.where(left, fd, fnew)
    x = np.where(fc < fd, c, d)
    return x, sgn * np.minimum(fc, fd)


def newton_bisect(f, fprime, a, b, *, xtol=1e-15, maxiter=200):
    """Safeguarded Newton iteration on a sign-change bracket [a, b].

    Newton steps that leave the current bracket are replaced by bisection.
    """
    fa, fb = f(a), f(b)
    if fa == 0:
        return a
    if fb == 0:
        return b
    if (fa > 0) == (fb > 0):
        raise NoRootError(f"no sign change on [{a}, {b}]: f(a)={fa}, f(b)={fb}")
    x = 0.5 * (a + b)
    for _ in range(maxiter):
        fx = f(x)
        if fx == 0:
            return x
        if (fx > 0) == (fa > 0):
            a, fa = x, fx
        else:
            b = x
        d = fprime(x)
        step_ok = False
        if d != 0 and math.isfinite(d):
            xn = x - fx / d
            # a converged step may land exactly on the bracket end x itself
            if abs(xn - x) <= xtol * max(1.0, abs(x)):
                return xn
            step_ok = min(a, b) < xn < max(a, b)
        if not step_ok:
            xn = 0.5 * (a + b)
        if abs(xn - x) <= xtol * max(1.0, abs(x)):
            return xn
        x = xn
    return x


@dataclass(frozen=True)
class IntervalMax:
    """Maximum of |P_n| on [-1, 1]: value, a location, and all tied locations."""

    value: float
    location: float
    locations: tuple

    def __iter__(self):
        # allows ``value, location = jacobi_interval_max(...)``
        return iter((self.value, self.location))


def jacobi_interval_max(p: JacobiParams, n: int, *, grid: int = 100_001) -> IntervalMax:
    """max_{x in [-1,1]} |P_n^{(alpha,beta)}(x)| and where it is attained.

    For q = max(alpha, beta) >= -1/2 the maximum is C(n+q, n) at the endpoint
    on the side of the larger parameter.  Otherwise it is interior and is
    located by dense sampling plus golden-section refinement.
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    q = max(p.alpha, p.beta)
    if q >= -0.5:
        value = math.exp(math.lgamma(n + q + 1) - math.lgamma(q + 1) - math.lgamma(n + 1))
        if p.alpha > p.beta:
            locs = (1.0,)
        elif p.alpha < p.beta:
            locs = (-1.0,)
        else:
            locs = (1.0, -1.0)
        return IntervalMax(value, locs[0], locs)

    x = np.linspace(-1.0, 1.0, grid)
    fx = np.abs(jacobi_eval(p, n, x))
    h = x[1] - x[0]
    interior = np.flatnonzero((fx[1:-1] >= fx[:-2]) & (fx[1:-1] >= fx[2:])) + 1
    cand = interior[fx[interior] >= fx.max() * (1 - 1e-3)]
    if cand.size == 0:
        cand = np.array([int(np.argmax(fx))])
    lo = np.clip(x[cand] - h, -1, 1)
    hi = np.clip(x[cand] + h, -1, 1)
    xs, vals = golden_section(
        lambda t: np.abs(jacobi_eval(p, n, t)), lo, hi, maximize=True, tol=1e-12
    )
    best = vals.max()
    tied = sorted({float(v) for v in xs[vals >= best * (1 - 1e-12)]}, reverse=True)
    # nearest to the reference point (beta-alpha)/(alpha+beta+1) comes first
    ref = (p.beta - p.alpha) / (p.ab + 1)
    tied.sort(key=lambda t: abs(t - ref))
    return IntervalMax(float(best), tied[0], tuple(tied))


def gegenbauer_zeros(g: GegenbauerParam, n: int) -> np.ndarray:
    """The n zeros of C_n^lambda in decreasing order.

    Zeros coincide with those of P_n^{(lam-1/2, lam-1/2)}, so lambda = 0 gives
    the Chebyshev T_n zeros.  Positive zeros are found by deflated Newton
    iteration seeded at the T_n zeros and then mirrored; a sign-change scan
    with safeguarded Newton takes over if Newton misbehaves.
    """
    if n < 1:
        raise DomainError(f"degree must be positive, got {n}")
    p = g.jacobi
    m = n // 2
    pos = _positive_zeros_newton(p, n, m)
    if pos is None:
        pos = _positive_zeros_bracketed(p, n, m)
    mid = [0.0] if n % 2 else []
    return np.array(list(pos) + mid + [-x for x in reversed(pos)])


def _positive_zeros_newton(p: JacobiParams, n: int, m: int):
    found: list[float] = []
    for j in range(1, m + 1):
        x = math.cos((2 * j - 1) * math.pi / (2 * n))
        for _ in range(100):
            f = jacobi_eval(p, n, x).real
            if f == 0:
                break
            df = jacobi_eval_derivative(p, n, x).real
            # Newton on f / prod(x - r) over the zeros already found
            step = 1.0 / (df / f - sum(1.0 / (x - r) for r in found))
            x -= step
            if abs(step) <= 1e-15 * max(1.0, abs(x)):
                break
        else:
            return None
        if not (0 < x < 1) or (found and not x < found[-1] - 1e-14):
            return None
        found.append(x)
    return found


def _positive_zeros_bracketed(p: JacobiParams, n: int, m: int):
    def f(x):
        return float(jacobi_eval(p, n, x).real)

    def df(x):
        return float(jacobi_eval_derivative(p, n, x).real)

    samples = 64 * (n + 1)
    while True:
        theta = np.linspace(0.0, math.pi / 2, samples + 1)
        x = np.cos(theta)
        # drop x = 0 so that odd-degree zeros at the origin are not counted
        x = x[:-1] if n % 2 else x
        fx = jacobi_eval(p, n, x).real
        idx = np.flatnonzero(np.sign(fx[:-1]) != np.sign(fx[1:]))
        if idx.size >= m or samples > 2**22:
            break
        samples *= 8
    if idx.size < m:
        raise NoRootError(f"found {idx.size} of {m} positive zeros")
    return [newton_bisect(f, df, float(x[i + 1]), float(x[i])) for i in idx[:m]]
