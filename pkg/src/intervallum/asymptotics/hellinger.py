"""Hellinger distances between densities on [0, 1] and the centre-outward fold."""

import logging
import math
from collections.abc import Iterable

from intervallum.asymptotics.models import Density, HellingerResult
from intervallum.asymptotics.quadrature import DEFAULT_QUAD_TOL, integrate_unit
from intervallum.infra.observability import log_check_result
from intervallum.sampling.distributions import pdf
from intervallum.sampling.models import AlternativeFamily, FamilyKind

logger = logging.getLogger(__name__)

# Radicands this far below zero are roundoff
_RADICAND_SLACK = 1e-12

FOLD_KINDS = (FamilyKind.A, FamilyKind.B, FamilyKind.C, FamilyKind.BETA)
FOLD_SHAPES = (0.5, 1.5, 2.5)


def uniform_density(x: float) -> float:
    return 1.0


def family_density(family: AlternativeFamily) -> Density:
    def density(x: float) -> float:
        return float(pdf(family, x))

    return density


def co_density(family: AlternativeFamily) -> Density:
    """Density of R = |2X - 1|: f_R(y) = (f((1 + y) / 2) + f((1 - y) / 2)) / 2."""

    def density(y: float) -> float:
        return 0.5 * (float(pdf(family, (1.0 + y) / 2.0)) + float(pdf(family, (1.0 - y) / 2.0)))

    return density


def _distance(affinity: float) -> float:
    radicand = 1.0 - affinity
    if radicand < 0.0:
        if radicand < -_RADICAND_SLACK:
            logger.debug(
                "hellinger.radicand_clamped",
                extra={"data": {"name": "hellinger.radicand_clamped", "radicand": radicand}},
            )
        radicand = 0.0
    return math.sqrt(min(radicand, 1.0))


def _error_bound(distance: float, abs_error: float) -> float:
    # d sqrt(r) = dr / (2 sqrt(r)), useless near r = 0 where sqrt(dr) bounds it
    root = math.sqrt(abs_error)
    if distance > root:
        return abs_error / (2.0 * distance)
    return root


def hellinger_with_error(
    f1: Density, f2: Density, quad_tol: float = DEFAULT_QUAD_TOL
) -> tuple[float, float]:
    """Hellinger distance and a bound on its quadrature error.

    Raises:
        QuadratureError: If the affinity integral does not converge
    """
    affinity = integrate_unit(lambda x: math.sqrt(max(f1(x) * f2(x), 0.0)), quad_tol)
    distance = _distance(affinity.value)
    return distance, _error_bound(distance, affinity.abs_error)


def hellinger(f1: Density, f2: Density, quad_tol: float = DEFAULT_QUAD_TOL) -> float:
    """sqrt(1 - int sqrt(f1 f2)) over (0, 1).

    Raises:
        QuadratureError: If the affinity integral does not converge
    """
    return hellinger_with_error(f1, f2, quad_tol)[0]


def fold_check(family: AlternativeFamily, quad_tol: float = DEFAULT_QUAD_TOL) -> HellingerResult:
    """Distances from U(0,1) of a family and of its centre-outward fold."""
    hd_direct, direct_error = hellinger_with_error(uniform_density, family_density(family), quad_tol)
    hd_co, co_error = hellinger_with_error(uniform_density, co_density(family), quad_tol)
    result = HellingerResult(
        family=family.spec,
        hd_direct=hd_direct,
        hd_co=hd_co,
        quadrature_error_bound=max(direct_error, co_error),
    )
    log_check_result(
        logger,
        "hellinger_fold",
        result.holds,
        family=family.spec,
        hd_direct=hd_direct,
        hd_co=hd_co,
        error_bound=result.quadrature_error_bound,
    )
    return result


def fold_grid(
    kinds: Iterable[FamilyKind] = FOLD_KINDS,
    shapes: Iterable[float] = FOLD_SHAPES,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> list[HellingerResult]:
    """fold_check over every (kind, k) pair, kinds outermost."""
    shapes = tuple(shapes)
    return [fold_check(AlternativeFamily(kind, k), quad_tol) for kind in kinds for k in shapes]
