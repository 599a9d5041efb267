from intervallum.montecarlo.cache import CriticalValueCache
from intervallum.montecarlo.checks import (
    EqualityCheck,
    LocalAlternativeCheck,
    NormalityCheck,
    equality_check,
    local_alternative_check,
    normality_check,
    standardised_null_statistics,
)
from intervallum.montecarlo.models import (
    Decision,
    MethodKind,
    PowerStudyConfig,
    PowerTable,
    TestMethod,
    TestReport,
)
from intervallum.montecarlo.null import (
    NullDistribution,
    critical_value,
    null_critical_values,
    simulate_null,
)
from intervallum.montecarlo.power import power_study, rejection_counts
from intervallum.montecarlo.runner import run_test
from intervallum.montecarlo.serialization import (
    power_table_csv,
    power_table_document,
    read_power_table,
    sidecar_path,
    write_power_table,
)

__all__ = [
    # Models
    "Decision",
    "MethodKind",
    "TestMethod",
    "TestReport",
    "PowerStudyConfig",
    "PowerTable",
    # Null distributions
    "NullDistribution",
    "simulate_null",
    "critical_value",
    "null_critical_values",
    "CriticalValueCache",
    # Tests and studies
    "run_test",
    "power_study",
    "rejection_counts",
    # Checks
    "EqualityCheck",
    "NormalityCheck",
    "LocalAlternativeCheck",
    "equality_check",
    "normality_check",
    "local_alternative_check",
    "standardised_null_statistics",
    # Serialization
    "write_power_table",
    "read_power_table",
    "power_table_csv",
    "power_table_document",
    "sidecar_path",
]
