import math
from collections.abc import Callable
from dataclasses import dataclass, field

from intervallum.errors import DegenerateVarianceError

Perturbation = Callable[[float], float]
Density = Callable[[float], float]

# Relative size below which a null variance counts as zero
_ZERO_VARIANCE = 1e-10


@dataclass(frozen=True)
class ExpMoments:
    """Moments of h(Z) for Z standard exponential.

    Attributes:
        mean_h: E h(Z)
        var_h: Var h(Z)
        cov_hz: Cov(h(Z), Z)
        cov_h_quad: Cov(h(Z), (Z - 2)^2)
        abs_error: Accumulated quadrature error bound
    """

    mean_h: float
    var_h: float
    cov_hz: float
    cov_h_quad: float
    abs_error: float = 0.0

    @property
    def null_variance(self) -> float:
        """sigma_h^2 = Var h(Z) - Cov^2(h(Z), Z), clamped at zero against roundoff."""
        return max(self.var_h - self.cov_hz**2, 0.0)

    @property
    def is_degenerate(self) -> bool:
        """True for affine h, whose null variance vanishes."""
        return self.null_variance <= _ZERO_VARIANCE * max(self.var_h, 1.0)

    @property
    def sigma(self) -> float:
        """sqrt(sigma_h^2).

        Raises:
            DegenerateVarianceError: If the null variance is zero
        """
        if self.is_degenerate:
            raise DegenerateVarianceError(
                "score function has zero null variance (affine h)",
                {"var_h": self.var_h, "cov_hz": self.cov_hz},
            )
        return math.sqrt(self.null_variance)

    @property
    def signal_to_noise(self) -> float:
        """Cov(h(Z), (Z - 2)^2) / sigma_h: the h-dependent factor of every efficacy."""
        return self.cov_h_quad / self.sigma


@dataclass(frozen=True)
class LocalAlternative:
    """Perturbation direction of the local alternatives F_n(x) = x + L(x) / n^(1/4).

    Attributes:
        l: L'(x), the derivative of the perturbation
        L: The perturbation itself, L(0) = L(1) = 0 (needed only for sampling)
        name: Registry name
    """

    l: Perturbation = field(compare=False)  # noqa: E741
    L: Perturbation | None = field(default=None, compare=False)
    name: str = "custom"


@dataclass(frozen=True)
class AREResult:
    """Pitman relative efficiency of h1 against h2, under both exponent conventions.

    Attributes:
        efficacy_1: Efficacy of the first statistic
        efficacy_2: Efficacy of the second statistic
    """

    efficacy_1: float
    efficacy_2: float

    @property
    def efficacy_ratio(self) -> float:
        return self.efficacy_1 / self.efficacy_2

    @property
    def squared_ratio(self) -> float:
        return self.efficacy_ratio**2


@dataclass(frozen=True)
class HellingerResult:
    """Hellinger distances of a family and of its centre-outward fold from U(0,1).

    Attributes:
        family: Family spec string
        hd_direct: HD(F0, F)
        hd_co: HD(F0, F_R)
        quadrature_error_bound: Bound on the error of either distance
    """

    family: str
    hd_direct: float
    hd_co: float
    quadrature_error_bound: float

    @property
    def gap(self) -> float:
        return self.hd_direct - self.hd_co

    @property
    def holds(self) -> bool:
        """HD(F0, F_R) <= HD(F0, F) within the quadrature error."""
        return self.hd_co <= self.hd_direct + self.quadrature_error_bound + 1e-12
