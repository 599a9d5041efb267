from intervallum.asymptotics.efficacy import (
    efficacy,
    efficacy_with_error,
    limit_mean,
    most_efficient,
    pitman_are,
)
from intervallum.asymptotics.hellinger import (
    FOLD_KINDS,
    FOLD_SHAPES,
    co_density,
    family_density,
    fold_check,
    fold_grid,
    hellinger,
    hellinger_with_error,
    uniform_density,
)
from intervallum.asymptotics.local import (
    COSINE,
    CUBIC,
    LINEAR,
    PERTURBATIONS,
    PerturbedUniform,
    co_perturbation,
    co_perturbation_derivative,
    get_perturbation,
    validate_perturbation,
)
from intervallum.asymptotics.models import (
    AREResult,
    ExpMoments,
    HellingerResult,
    LocalAlternative,
)
from intervallum.asymptotics.moments import exp_moments, null_limit
from intervallum.asymptotics.quadrature import (
    DEFAULT_QUAD_TOL,
    QuadratureResult,
    integrate_half_line,
    integrate_unit,
)

__all__ = [
    # Models
    "ExpMoments",
    "LocalAlternative",
    "AREResult",
    "HellingerResult",
    # Quadrature
    "DEFAULT_QUAD_TOL",
    "QuadratureResult",
    "integrate_unit",
    "integrate_half_line",
    # Moments
    "exp_moments",
    "null_limit",
    # Local alternatives
    "LINEAR",
    "COSINE",
    "CUBIC",
    "PERTURBATIONS",
    "PerturbedUniform",
    "get_perturbation",
    "validate_perturbation",
    "co_perturbation",
    "co_perturbation_derivative",
    # Efficacy
    "efficacy",
    "efficacy_with_error",
    "pitman_are",
    "most_efficient",
    "limit_mean",
    # Hellinger distance
    "hellinger",
    "hellinger_with_error",
    "uniform_density",
    "family_density",
    "co_density",
    "fold_check",
    "fold_grid",
    "FOLD_KINDS",
    "FOLD_SHAPES",
]
