"""Jacobi, Gegenbauer and Chebyshev polynomials on Bernstein ellipses.

Submodules:

- :mod:`.scalar` -- Gamma-family kernels, Pochhammer symbols, terminating 3F2
- :mod:`.orthopoly` -- polynomial evaluation, leading coefficients, zeros
- :mod:`.ellipse` -- ellipse geometry and the Laurent coefficients d_{k,n}
- :mod:`.extrema` -- extrema of |polynomial| on ellipses
- :mod:`.asymptotics` -- large-degree estimates and lower bounds
- :mod:`.interp` -- interpolation error bound
- :mod:`.figures` -- tabulated figure data
"""

from .ellipse import (
    BernsteinEllipse,
    CoefficientTable,
    EllipsePoint,
    classify_signs,
    coeffs_explicit,
    coeffs_gegenbauer_closed,
    coeffs_recurrence,
    coeffs_transform_oracle,
    eval_ellipse_series,
    eval_ellipse_series_scaled,
)
from .errors import DomainError, InvariantError, NoRootError, PoleError
from .orthopoly import GegenbauerParam, JacobiParams, cheb_T, cheb_U, gegenbauer_eval, jacobi_eval

__all__ = [
    "BernsteinEllipse",
    "CoefficientTable",
    "EllipsePoint",
    "GegenbauerParam",
    "JacobiParams",
    "DomainError",
    "InvariantError",
    "NoRootError",
    "PoleError",
    "cheb_T",
    "cheb_U",
    "classify_signs",
    "coeffs_explicit",
    "coeffs_gegenbauer_closed",
    "coeffs_recurrence",
    "coeffs_transform_oracle",
    "eval_ellipse_series",
    "eval_ellipse_series_scaled",
    "gegenbauer_eval",
    "jacobi_eval",
]
