"""Distribution functions of the families on [0, 1].

All functions accept a scalar or an array and return the same shape; scalars
come back as Python floats.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special, stats

from intervallum.errors import DomainError
from intervallum.sampling.models import AlternativeFamily, FamilyKind
from intervallum.sampling.rng import RngStream


def _unit_array(x: ArrayLike, name: str) -> NDArray[np.float64]:
    arr = np.asarray(x, dtype=np.float64)
    if np.any(np.isnan(arr)) or np.any((arr < 0.0) | (arr > 1.0)):
        bad = arr[~((arr >= 0.0) & (arr <= 1.0))]
        raise DomainError(
            f"{name} must lie in [0, 1]",
            {name: bad.ravel()[:5].tolist()},
        )
    return arr


def _out(arr: NDArray[np.float64], like: ArrayLike) -> float | NDArray[np.float64]:
    if np.ndim(like) == 0:
        return float(arr)
    return arr


def cdf(family: AlternativeFamily, x: ArrayLike) -> float | NDArray[np.float64]:
    """Distribution function F(x) of the family.

    Raises:
        DomainError: If any x lies outside [0, 1]
    """
    xs = _unit_array(x, "x")
    if family.is_uniform:
        return _out(xs.copy(), x)

    k = family.k
    match family.kind:
        case FamilyKind.A:
            values = 1.0 - (1.0 - xs) ** k
        case FamilyKind.B:
            lower = 0.5 * (2.0 * np.minimum(xs, 0.5)) ** k
            upper = 1.0 - 0.5 * (2.0 * (1.0 - np.maximum(xs, 0.5))) ** k
            values = np.where(xs <= 0.5, lower, upper)
        case FamilyKind.C:
            lower = 0.5 - 0.5 * (1.0 - 2.0 * np.minimum(xs, 0.5)) ** k
            upper = 0.5 + 0.5 * (2.0 * np.maximum(xs, 0.5) - 1.0) ** k
            values = np.where(xs <= 0.5, lower, upper)
        case FamilyKind.BETA:
            values = special.betainc(k, k, xs)

    return _out(np.clip(values, 0.0, 1.0), x)


def pdf(family: AlternativeFamily, x: ArrayLike) -> float | NDArray[np.float64]:
    """Density f(x) of the family.

    Endpoint values for k < 1 (and x = 1/2 for C(k), k < 1) are the infinite
    one-sided limits; quadrature callers integrate over open intervals.

    Raises:
        DomainError: If any x lies outside [0, 1]
    """
    xs = _unit_array(x, "x")
    if family.is_uniform:
        return _out(np.ones_like(xs), x)

    k = family.k
    with np.errstate(divide="ignore"):
        match family.kind:
            case FamilyKind.A:
                values = k * (1.0 - xs) ** (k - 1.0)
            case FamilyKind.B:
                # distance from the nearest endpoint, doubled
                values = k * (2.0 * np.minimum(xs, 1.0 - xs)) ** (k - 1.0)
            case FamilyKind.C:
                values = k * np.abs(2.0 * xs - 1.0) ** (k - 1.0)
            case FamilyKind.BETA:
                values = stats.beta.pdf(xs, k, k)
                if k < 1.0:
                    values = np.where((xs == 0.0) | (xs == 1.0), np.inf, values)

    return _out(np.asarray(values, dtype=np.float64), x)


def quantile(family: AlternativeFamily, u: ArrayLike) -> float | NDArray[np.float64]:
    """Inverse distribution function.

    A, B and C use closed-form inverses; Beta(k, k) uses scipy's inverse of the
    regularized incomplete beta function.

    Raises:
        DomainError: If any u lies outside [0, 1]
    """
    us = _unit_array(u, "u")
    if family.is_uniform:
        return _out(us.copy(), u)

    inv_k = 1.0 / family.k
    match family.kind:
        case FamilyKind.A:
            values = 1.0 - (1.0 - us) ** inv_k
        case FamilyKind.B:
            lower = 0.5 * (2.0 * np.minimum(us, 0.5)) ** inv_k
            upper = 1.0 - 0.5 * (2.0 * (1.0 - np.maximum(us, 0.5))) ** inv_k
            values = np.where(us <= 0.5, lower, upper)
        case FamilyKind.C:
            lower = 0.5 - 0.5 * (1.0 - 2.0 * np.minimum(us, 0.5)) ** inv_k
            upper = 0.5 + 0.5 * (2.0 * np.maximum(us, 0.5) - 1.0) ** inv_k
            values = np.where(us <= 0.5, lower, upper)
        case FamilyKind.BETA:
            values = special.betaincinv(family.k, family.k, us)

    return _out(np.clip(values, 0.0, 1.0), u)


def sample(family: AlternativeFamily, n: int, rng: RngStream) -> NDArray[np.float64]:
    """Draw n i.i.d. variates by inverse-CDF applied to the stream's uniforms.

    Raises:
        DomainError: If n < 1
    """
    if n < 1:
        raise DomainError("sample size must be at least 1", {"n": n})
    return np.asarray(quantile(family, rng.uniforms(n)), dtype=np.float64)


def probability_integral_transform(
    values: ArrayLike, family: AlternativeFamily
) -> NDArray[np.float64]:
    """Map observations from `family` onto the U(0,1) null scale."""
    return np.asarray(cdf(family, values), dtype=np.float64)
