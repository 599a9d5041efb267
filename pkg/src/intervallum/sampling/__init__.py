from intervallum.sampling.distributions import (
    cdf,
    pdf,
    probability_integral_transform,
    quantile,
    sample,
)
from intervallum.sampling.models import AlternativeFamily, FamilyKind
from intervallum.sampling.rng import RNG_ALGORITHM, RngStream, derive_stream_id

__all__ = [
    # Models
    "AlternativeFamily",
    "FamilyKind",
    # Distribution functions
    "cdf",
    "pdf",
    "quantile",
    "sample",
    "probability_integral_transform",
    # Random streams
    "RngStream",
    "RNG_ALGORITHM",
    "derive_stream_id",
]
