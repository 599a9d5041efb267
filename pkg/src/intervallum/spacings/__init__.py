from intervallum.spacings.construction import (
    anchored_order_statistics,
    co_rank,
    gaps_matrix,
    halfspace_depth,
    m_step_spacings,
    simple_spacings,
    simplicial_depth,
    validate_scheme,
)
from intervallum.spacings.models import (
    Layout,
    Ordering,
    Sample,
    SpacingScheme,
    SpacingsVector,
)

__all__ = [
    # Models
    "Layout",
    "Ordering",
    "Sample",
    "SpacingScheme",
    "SpacingsVector",
    # Constructions
    "co_rank",
    "halfspace_depth",
    "simplicial_depth",
    "simple_spacings",
    "m_step_spacings",
    # Batch kernels
    "anchored_order_statistics",
    "gaps_matrix",
    "validate_scheme",
]
