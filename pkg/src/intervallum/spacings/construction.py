"""Centre-outward ranks and spacing constructions.

The batch kernels work on (replications x N) matrices so the Monte Carlo
engine can evaluate thousands of samples per call; the single-sample API
delegates to them with one row.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from intervallum.errors import DomainError, SchemeError
from intervallum.spacings.models import (
    Layout,
    Ordering,
    Sample,
    SpacingScheme,
    SpacingsVector,
)


def co_rank(x: ArrayLike) -> float | NDArray[np.float64]:
    """Centre-outward rank |2x - 1| under the uniform null.

    Equals the probability that an independent U(0,1) point is at least as deep
    as x, for both half-space and simplicial depth.

    Raises:
        DomainError: If any x lies outside [0, 1]
    """
    arr = np.asarray(x, dtype=np.float64)
    if np.any(~((arr >= 0.0) & (arr <= 1.0))):
        raise DomainError("co_rank argument must lie in [0, 1]", {"x": np.ravel(arr)[:5].tolist()})
    ranks = np.abs(2.0 * arr - 1.0)
    if ranks.ndim == 0:
        return float(ranks)
    return ranks


def halfspace_depth(x: ArrayLike) -> NDArray[np.float64]:
    """Univariate half-space depth min(F, 1 - F) under the uniform null."""
    arr = np.asarray(x, dtype=np.float64)
    return np.minimum(arr, 1.0 - arr)


def simplicial_depth(x: ArrayLike) -> NDArray[np.float64]:
    """Univariate simplicial depth 2F(1 - F) under the uniform null."""
    arr = np.asarray(x, dtype=np.float64)
    return 2.0 * arr * (1.0 - arr)


def anchored_order_statistics(values: NDArray[np.float64], ordering: Ordering) -> NDArray[np.float64]:
    """Sorted rows with 0 prepended and 1 appended.

    For the centre-outward ordering the rows are replaced by their CO ranks
    first. The upper anchor is 1, so the N + 1 gaps always sum to 1.
    """
    rows = np.atleast_2d(np.asarray(values, dtype=np.float64))
    if ordering is Ordering.CENTRE_OUTWARD:
        rows = np.abs(2.0 * rows - 1.0)
    rows = np.sort(rows, axis=1)
    n_rows = rows.shape[0]
    return np.hstack([np.zeros((n_rows, 1)), rows, np.ones((n_rows, 1))])


def gaps_matrix(values: NDArray[np.float64], scheme: SpacingScheme) -> NDArray[np.float64]:
    """Spacings of every row of a (replications x N) matrix of null-scale values.

    Raises:
        SchemeError: If the step does not fit n_effective = N + 1
    """
    anchored = anchored_order_statistics(values, scheme.ordering)
    n_effective = anchored.shape[1] - 1
    validate_scheme(scheme, n_effective)

    m = scheme.m
    windows = anchored[:, m:] - anchored[:, :-m]
    if m > 1 and scheme.layout is Layout.DISJOINT:
        windows = windows[:, ::m]
    return windows


def validate_scheme(scheme: SpacingScheme, n_effective: int) -> None:
    """Check that a scheme can be applied to n_effective simple gaps.

    Raises:
        SchemeError: If m exceeds n_effective, or a disjoint m does not divide it
    """
    if scheme.m > n_effective:
        raise SchemeError(
            f"step m={scheme.m} exceeds the {n_effective} available spacings",
            {"m": scheme.m, "n_effective": n_effective},
        )
    if scheme.m > 1 and scheme.layout is Layout.DISJOINT and n_effective % scheme.m:
        raise SchemeError(
            f"disjoint step m={scheme.m} must divide n_effective={n_effective}",
            {"m": scheme.m, "n_effective": n_effective},
        )


def simple_spacings(sample: Sample, ordering: Ordering = Ordering.USUAL) -> SpacingsVector:
    """The N + 1 simple spacings of a sample, usual or centre-outward."""
    return m_step_spacings(sample, SpacingScheme(ordering=ordering))


def m_step_spacings(sample: Sample, scheme: SpacingScheme) -> SpacingsVector:
    """m-step spacings of a sample in the given scheme.

    Overlapping: windows k = 1 .. n_effective - m + 1.
    Disjoint: windows k = 1, m + 1, 2m + 1, ...

    Raises:
        SchemeError: If the step does not fit n_effective
    """
    gaps = gaps_matrix(sample.as_array()[np.newaxis, :], scheme)[0]
    return SpacingsVector(
        gaps=np.clip(gaps, 0.0, None),
        scheme=scheme,
        n_effective=sample.size + 1,
    )
