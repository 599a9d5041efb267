"""Local alternatives F_n(x) = x + L(x) / n^(1/4) and their centre-outward versions."""

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from intervallum.asymptotics.models import LocalAlternative, Perturbation
from intervallum.asymptotics.quadrature import DEFAULT_QUAD_TOL, integrate_unit
from intervallum.errors import DomainError

LINEAR = LocalAlternative(
    l=lambda x: 2.0 * x - 1.0,
    L=lambda x: x * x - x,
    name="linear",
)

COSINE = LocalAlternative(
    l=lambda x: np.cos(2.0 * np.pi * x),
    L=lambda x: np.sin(2.0 * np.pi * x) / (2.0 * np.pi),
    name="cosine",
)

CUBIC = LocalAlternative(
    l=lambda x: (2.0 * x - 1.0) ** 3,
    L=lambda x: ((2.0 * x - 1.0) ** 4 - 1.0) / 8.0,
    name="cubic",
)

PERTURBATIONS = {alt.name: alt for alt in (LINEAR, COSINE, CUBIC)}


def get_perturbation(name: str) -> LocalAlternative:
    """Look up a named perturbation.

    Raises:
        KeyError: If the name is unknown
    """
    try:
        return PERTURBATIONS[name.lower()]
    except KeyError:
        raise KeyError(
            f"Perturbation '{name}' not found. Available perturbations: {', '.join(PERTURBATIONS)}"
        ) from None


def validate_perturbation(alt: LocalAlternative, tol: float = 1e-8) -> None:
    """Check that l integrates to zero, as L(0) = L(1) = 0 requires.

    Raises:
        DomainError: If the integral of l is not zero within tol
    """
    total = integrate_unit(lambda x: float(alt.l(x)), DEFAULT_QUAD_TOL)
    if abs(total.value) > tol:
        raise DomainError(
            f"perturbation '{alt.name}' must integrate to zero",
            {"integral": total.value},
        )


def _direction(alt: LocalAlternative | Perturbation) -> Perturbation:
    return alt.l if isinstance(alt, LocalAlternative) else alt


def co_perturbation(alt: LocalAlternative | Perturbation) -> Callable[[float], float]:
    """l*(x) = l((1 + x) / 2) - l((1 - x) / 2), the efficacy direction of CO statistics."""
    l = _direction(alt)  # noqa: E741

    def l_star(x: float) -> float:
        return l((1.0 + x) / 2.0) - l((1.0 - x) / 2.0)

    return l_star


def co_perturbation_derivative(alt: LocalAlternative | Perturbation) -> Callable[[float], float]:
    """Derivative of L*(y) = L((1 + y) / 2) - L((1 - y) / 2): (l((1 + y) / 2) + l((1 - y) / 2)) / 2."""
    l = _direction(alt)  # noqa: E741

    def derivative(y: float) -> float:
        return 0.5 * (l((1.0 + y) / 2.0) + l((1.0 - y) / 2.0))

    return derivative


@dataclass(frozen=True)
class PerturbedUniform:
    """The local alternative F_n(x) = x + L(x) / n^(1/4) at a fixed n.

    Sampling inverts F_n on a uniform grid with linear interpolation.

    Attributes:
        alternative: Perturbation with L available
        n: Sample size setting the perturbation scale n^(-1/4)
        grid_size: Inversion grid points
    """

    alternative: LocalAlternative
    n: int
    grid_size: int = 2**16 + 1

    def __post_init__(self) -> None:
        """Validate that F_n is a distribution function."""
        if self.alternative.L is None:
            raise DomainError(f"perturbation '{self.alternative.name}' has no L for sampling")
        if self.n < 1:
            raise DomainError("n must be at least 1", {"n": self.n})
        values = self.cdf(self._grid)
        if np.any(np.diff(values) < -1e-15) or abs(values[0]) > 1e-12 or abs(values[-1] - 1.0) > 1e-12:
            raise DomainError(
                f"x + L(x) / n^(1/4) is not a distribution function for n={self.n}",
                {"perturbation": self.alternative.name},
            )

    @property
    def scale(self) -> float:
        return self.n ** -0.25

    @property
    def _grid(self) -> NDArray[np.float64]:
        return np.linspace(0.0, 1.0, self.grid_size)

    def cdf(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        xs = np.asarray(x, dtype=np.float64)
        return xs + self.scale * np.asarray(self.alternative.L(xs), dtype=np.float64)

    def quantile(self, u: NDArray[np.float64]) -> NDArray[np.float64]:
        grid = self._grid
        return np.interp(u, self.cdf(grid), grid)


def square_integral(func: Callable[[float], float], quad_tol: float = DEFAULT_QUAD_TOL) -> tuple[float, float]:
    """Integral of func^2 over (0, 1) with its error estimate."""
    result = integrate_unit(lambda x: float(func(x)) ** 2, quad_tol)
    if not math.isfinite(result.value):
        raise DomainError("perturbation is not square-integrable")
    return result.value, result.abs_error
