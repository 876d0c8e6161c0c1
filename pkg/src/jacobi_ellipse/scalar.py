"""Scalar kernels: gamma-family functions, Pochhammer symbols, terminating
hypergeometric sums and the exterior branch of sqrt(z**2 - 1).

Gamma ratios that appear in leading coefficients and prefactors overflow
double precision long before the polynomials themselves do, so they are
carried as :class:`LogScaled` values and exponentiated once at the call site.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

__all__ = [
    "LogScaled",
    "log_gamma",
    "log_gamma_signed",
    "pochhammer",
    "log_pochhammer",
    "hyp3f2_terminating",
    "hyp3f2_terminating_exact",
    "sqrt_zsq_minus_1",
]

_LOG_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class LogScaled:
    """A real number stored as ``sign * exp(log_magnitude)``.

    ``sign == 0`` means the value is exactly zero; ``log_magnitude`` is then
    ignored (and normalised to ``-inf``).
    """

    log_magnitude: float
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign!r}")
        if self.sign == 0:
            object.__setattr__(self, "log_magnitude", -math.inf)

    @classmethod
    def from_float(cls, x: float) -> LogScaled:
        if x == 0:
            return cls(-math.inf, 0)
        return cls(math.log(abs(x)), 1 if x > 0 else -1)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        """Plain float value; raises OverflowError if it is not representable."""
        if self.sign == 0:
            return 0.0
        if self.log_magnitude > _LOG_MAX:
            raise OverflowError(
                f"exp({self.log_magnitude}) is not representable as a double"
            )
        return self.sign * math.exp(self.log_magnitude)

    def __float__(self) -> float:
        return self.to_float()

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            other = LogScaled.from_float(float(other))
        if not isinstance(other, LogScaled):
            return NotImplemented
        if self.sign == 0 or other.sign == 0:
            return LogScaled(-math.inf, 0)
        return LogScaled(self.log_magnitude + other.log_magnitude, self.sign * other.sign)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            other = LogScaled.from_float(float(other))
        if not isinstance(other, LogScaled):
            return NotImplemented
        if other.sign == 0:
            raise ZeroDivisionError("division by a LogScaled zero")
        if self.sign == 0:
            return self
        return LogScaled(self.log_magnitude - other.log_magnitude, self.sign * other.sign)

    def __pow__(self, k: int) -> LogScaled:
        if self.sign == 0:
            return self if k > 0 else LogScaled(0.0, 1)
        return LogScaled(k * self.log_magnitude, self.sign**k)


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def log_gamma_signed(x: float) -> LogScaled:
    """Gamma(x) as a LogScaled value, valid for any x that is not a pole."""
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"Gamma has a pole at {x!r}")
    if x > 0:
        return LogScaled(math.lgamma(x), 1)
    # Gamma alternates in sign between consecutive negative integers.
    sign = -1 if math.floor(x) % 2 else 1
    return LogScaled(math.lgamma(x), sign)


def pochhammer(a: float, j: int) -> float:
    """Rising factorial (a)_j = a (a+1) ... (a+j-1), with (a)_0 = 1.

    Computed as a direct product so that a nonpositive integer ``a`` gives an
    exact zero once a factor vanishes.
    """
    if j < 0:
        raise DomainError(f"pochhammer order must be nonnegative, got {j}")
    out = 1.0 if isinstance(a, float) else 1
    for i in range(j):
        out *= a + i
        if out == 0.0:
            break
    return out


def log_pochhammer(a: float, j: int) -> LogScaled:
    """(a)_j in log form, accumulated factor by factor."""
    if j < 0:
        raise DomainError(f"pochhammer order must be nonnegative, got {j}")
    logmag = 0.0
    sign = 1
    for i in range(j):
        f = a + i
        if f == 0.0:
            return LogScaled(-math.inf, 0)
        if f < 0:
            sign = -sign
        logmag += math.log(abs(f))
    return LogScaled(logmag, sign)


def hyp3f2_terminating_exact(a1, a2, a3, b1, b2) -> Fraction:
    """Terminating 3F2(a1, a2, a3; b1, b2; 1) in exact rational arithmetic.

    Every double is a binary rational, so for float (or Fraction) parameters
    the sum is computed without any rounding at all.
    """
    m = -a1
    if m < 0 or m != math.floor(m):
        raise DomainError(f"a1 must be a nonpositive integer, got {a1!r}")
    m = int(m)
    a1, a2, a3, b1, b2 = (Fraction(x) for x in (a1, a2, a3, b1, b2))
    term = Fraction(1)
    total = Fraction(1)
    for j in range(m):
        den = (b1 + j) * (b2 + j)
        if den == 0:
            raise DomainError(
                f"denominator parameter reaches zero at j={j} before termination"
            )
        term = term * ((a1 + j) * (a2 + j) * (a3 + j)) / (den * (j + 1))
        total += term
    return total


def hyp3f2_terminating(a1: float, a2: float, a3: float, b1: float, b2: float) -> float:
    """Terminating 3F2(a1, a2, a3; b1, b2; 1) with a1 a nonpositive integer.

    At unit argument the terms alternate and grow far beyond the sum (already
    ~1e15 against O(1) at degree 24), so neither plain nor compensated
    floating-point summation is adequate.  Terms are summed in increasing j in
    exact rational arithmetic and the result is rounded once.
    """
    return float(hyp3f2_terminating_exact(a1, a2, a3, b1, b2))


def sqrt_zsq_minus_1(z):
    """Branch of sqrt(z**2 - 1) analytic off [-1, 1] and asymptotic to z.

    The product of principal roots sqrt(z-1)*sqrt(z+1) has its cuts on
    (-inf, 1] and (-inf, -1]; on (-inf, -1) both factors flip sign, so the
    only remaining cut is [-1, 1].  Accepts scalars or arrays.
    """
    z = np.asarray(z, dtype=complex)
    on_cut = (z.imag == 0) & (np.abs(z.real) <= 1)
    if np.any(on_cut):
        raise DomainError("sqrt(z^2-1) is undefined on the cut [-1, 1]")
    out = np.sqrt(z - 1) * np.sqrt(z + 1)
    return out[()] if out.ndim == 0 else out
