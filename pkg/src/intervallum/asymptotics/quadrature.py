"""Adaptive quadrature on top of scipy.integrate.quad.

Integrals over [0, 1] always break at 1/2 (where C(k) densities with k < 1
are singular); integrals over (0, inf) split at 1 so the finite part and the
tail each get their own QUADPACK routine. No rule evaluates an endpoint.
"""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

from scipy import integrate

from intervallum.errors import QuadratureError

logger = logging.getLogger(__name__)

DEFAULT_QUAD_TOL = 1e-10

# quad's relative tolerance; tighter requests trigger roundoff warnings
_EPSREL = 1e-11

_LIMIT = 500

# QUADPACK reports ier = 5 with this wording
_DIVERGENT = "divergent"


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error: float

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(self.value + other.value, self.abs_error + other.abs_error)


def _quad(
    func: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    points: tuple[float, ...] | None = None,
) -> QuadratureResult:
    value, abs_error, _, *message = integrate.quad(
        func, a, b, epsabs=tol, epsrel=_EPSREL, limit=_LIMIT, points=points, full_output=1
    )
    issue = message[0] if message else None

    # divergence always fails; other QUADPACK warnings pass only with a small error
    acceptable = max(1e3 * tol, 1e-8 * abs(value))
    divergent = issue is not None and _DIVERGENT in issue
    if not math.isfinite(value) or divergent or (issue and abs_error > acceptable):
        raise QuadratureError(
            f"quadrature on ({a}, {b}) did not converge",
            {"value": value, "abs_error": abs_error, "warning": issue},
        )
    if issue:
        logger.debug(
            "quadrature.warning",
            extra={"data": {"name": "quadrature.warning", "interval": [a, b], "warning": issue}},
        )
    return QuadratureResult(float(value), float(abs_error))


def integrate_unit(func: Callable[[float], float], tol: float = DEFAULT_QUAD_TOL) -> QuadratureResult:
    """Integral of func over the open interval (0, 1).

    Raises:
        QuadratureError: If the integral does not converge
    """
    return _quad(func, 0.0, 1.0, tol, points=(0.5,))


def integrate_half_line(func: Callable[[float], float], tol: float = DEFAULT_QUAD_TOL) -> QuadratureResult:
    """Integral of func over (0, inf).

    Raises:
        QuadratureError: If the integral does not converge
    """
    return _quad(func, 0.0, 1.0, tol / 2) + _quad(func, 1.0, math.inf, tol / 2)
