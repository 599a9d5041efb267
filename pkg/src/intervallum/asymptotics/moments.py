"""Exponential moments of score functions and the null limit of W(h)."""

import math

from intervallum.asymptotics.models import ExpMoments
from intervallum.asymptotics.quadrature import DEFAULT_QUAD_TOL, integrate_half_line
from intervallum.statistics.models import HFunction, HKind

# E(Z - 2)^2 for Z standard exponential
_E_QUAD = 2.0

_builtin_cache: dict[tuple[HFunction, float], ExpMoments] = {}


def exp_moments(h: HFunction, quad_tol: float = DEFAULT_QUAD_TOL) -> ExpMoments:
    """E h(Z), Var h(Z), Cov(h(Z), Z) and Cov(h(Z), (Z - 2)^2) by adaptive quadrature.

    Built-in score functions are cached per tolerance.

    Raises:
        QuadratureError: If an integral does not converge (custom h only)
    """
    key = (h, quad_tol)
    if h.kind is not HKind.CUSTOM and key in _builtin_cache:
        return _builtin_cache[key]

    def h_at(z: float) -> float:
        return float(h(z))

    e_h = integrate_half_line(lambda z: h_at(z) * math.exp(-z), quad_tol)
    e_h2 = integrate_half_line(lambda z: h_at(z) ** 2 * math.exp(-z), quad_tol)
    e_hz = integrate_half_line(lambda z: h_at(z) * z * math.exp(-z), quad_tol)
    e_hq = integrate_half_line(lambda z: h_at(z) * (z - 2.0) ** 2 * math.exp(-z), quad_tol)

    mean = e_h.value
    moments = ExpMoments(
        mean_h=mean,
        var_h=e_h2.value - mean**2,
        cov_hz=e_hz.value - mean,
        cov_h_quad=e_hq.value - _E_QUAD * mean,
        abs_error=e_h.abs_error + e_h2.abs_error + e_hz.abs_error + e_hq.abs_error,
    )

    if h.kind is not HKind.CUSTOM:
        _builtin_cache[key] = moments
    return moments


def null_limit(h: HFunction, quad_tol: float = DEFAULT_QUAD_TOL) -> tuple[float, float]:
    """Centering and variance of the normal limit of sqrt(n) (W(h) - E h(Z)).

    Identical for usual and centre-outward spacings.
    """
    moments = exp_moments(h, quad_tol)
    return moments.mean_h, moments.null_variance
