"""Efficacies, Pitman relative efficiency and local-alternative limit means."""

import logging
from collections.abc import Callable, Sequence

from intervallum.asymptotics.local import co_perturbation_derivative, square_integral
from intervallum.asymptotics.models import AREResult, LocalAlternative, Perturbation
from intervallum.asymptotics.moments import exp_moments
from intervallum.asymptotics.quadrature import DEFAULT_QUAD_TOL
from intervallum.errors import ZeroEfficacyError
from intervallum.spacings.models import Ordering
from intervallum.statistics.models import HFunction

logger = logging.getLogger(__name__)


def efficacy_with_error(
    h: HFunction,
    l: Callable[[float], float],  # noqa: E741
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> tuple[float, float]:
    """Efficacy and a first-order bound on its quadrature error.

    e(h) = (int l^2) Cov(h(Z), (Z - 2)^2) / (2 sigma_h). Passing l* from
    co_perturbation gives the efficacy of the centre-outward statistic.

    Raises:
        DegenerateVarianceError: If h is affine
    """
    moments = exp_moments(h, quad_tol)
    snr = moments.signal_to_noise
    l2, l2_error = square_integral(l, quad_tol)
    value = l2 * snr / 2.0
    # moments error enters through cov_h_quad and sigma; l2 error scales with snr
    error = abs(snr) * l2_error / 2.0 + l2 * moments.abs_error / moments.sigma
    return value, error


def efficacy(
    h: HFunction,
    l: Callable[[float], float],  # noqa: E741
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> float:
    """Efficacy of W(h) along the perturbation direction l.

    Raises:
        DegenerateVarianceError: If h is affine
    """
    return efficacy_with_error(h, l, quad_tol)[0]


def pitman_are(
    h1: HFunction,
    h2: HFunction,
    l: Callable[[float], float],  # noqa: E741
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> AREResult:
    """Relative efficiency of W(h1) against W(h2).

    Both the efficacy ratio and its square are reported; their ordering agrees.

    Raises:
        ZeroEfficacyError: If the efficacy of h2 is zero
    """
    e1 = efficacy(h1, l, quad_tol)
    e2 = efficacy(h2, l, quad_tol)
    if e2 == 0.0:
        raise ZeroEfficacyError(
            f"efficacy of '{h2.name}' is zero along this perturbation",
            {"h1": h1.name, "h2": h2.name, "efficacy_1": e1},
        )
    return AREResult(efficacy_1=e1, efficacy_2=e2)


def most_efficient(
    candidates: Sequence[HFunction],
    l: Callable[[float], float],  # noqa: E741
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> HFunction:
    """Score function with the largest efficacy along l."""
    scored = [(efficacy(h, l, quad_tol), h) for h in candidates]
    best_value, best = max(scored, key=lambda pair: pair[0])
    logger.debug(
        "efficacy.argmax",
        extra={
            "data": {
                "name": "efficacy.argmax",
                "best": best.name,
                "value": best_value,
                "candidates": {h.name: value for value, h in scored},
            }
        },
    )
    return best


def limit_mean(
    h: HFunction,
    alt: LocalAlternative | Perturbation,
    ordering: Ordering = Ordering.USUAL,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> float:
    """Mean of the normal limit of sqrt(n) (W(h) - E h(Z)) under x + L(x) / n^(1/4).

    Usual spacings: (1/2) (int l^2) Cov(h(Z), (Z - 2)^2). Centre-outward
    spacings replace l by the derivative of L*(y) = L((1 + y) / 2) - L((1 - y) / 2).
    """
    direction = alt.l if isinstance(alt, LocalAlternative) else alt
    if ordering is Ordering.CENTRE_OUTWARD:
        direction = co_perturbation_derivative(direction)
    l2, _ = square_integral(direction, quad_tol)
    return 0.5 * l2 * exp_moments(h, quad_tol).cov_h_quad
