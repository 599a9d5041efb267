from intervallum.statistics.evaluation import (
    combined_max_statistic,
    evaluate,
    evaluate_matrix,
    h_eval,
    scaled_mean,
    statistic,
)
from intervallum.statistics.models import (
    BUILTIN_H_FUNCTIONS,
    ENTROPY,
    GREENWOOD,
    MORAN,
    RAO,
    HFunction,
    HKind,
    StatisticSpec,
    StatisticValue,
)
from intervallum.statistics.registry import (
    HFunctionRegistry,
    get_default_registry,
    parse_statistic,
)

__all__ = [
    # Models
    "HFunction",
    "HKind",
    "StatisticSpec",
    "StatisticValue",
    "GREENWOOD",
    "MORAN",
    "RAO",
    "ENTROPY",
    "BUILTIN_H_FUNCTIONS",
    # Evaluation
    "h_eval",
    "statistic",
    "combined_max_statistic",
    "evaluate",
    "evaluate_matrix",
    "scaled_mean",
    # Registry
    "HFunctionRegistry",
    "get_default_registry",
    "parse_statistic",
]
