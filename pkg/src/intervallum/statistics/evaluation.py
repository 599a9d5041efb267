"""Evaluation of spacings statistics for single samples and sample matrices."""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from intervallum.errors import DomainError
from intervallum.spacings.construction import gaps_matrix, m_step_spacings, simple_spacings
from intervallum.spacings.models import Ordering, Sample, SpacingScheme, SpacingsVector
from intervallum.statistics.models import HFunction, StatisticSpec, StatisticValue


def h_eval(h: HFunction, x: ArrayLike) -> float | NDArray[np.float64]:
    """Evaluate a score function; infinities propagate as extended reals.

    Raises:
        DomainError: If any x is negative
    """
    xs = np.asarray(x, dtype=np.float64)
    if np.any(xs < 0.0):
        raise DomainError("score functions are defined for x >= 0", {"x": np.ravel(xs)[:5].tolist()})
    values = h(xs)
    if values.ndim == 0:
        return float(values)
    return values


def scaled_mean(gaps: NDArray[np.float64], h: HFunction, n_effective: int, m: int) -> NDArray[np.float64]:
    """Row-wise (1/K) sum h(n * gap / m) of a (replications x K) gap matrix.

    For simple spacings (m = 1, K = n) this is W(h) = (1/n) sum h(n D_i).
    """
    return h(n_effective * gaps / m).mean(axis=-1)


def statistic(gaps: SpacingsVector, h: HFunction) -> StatisticValue:
    """W(h) over a spacings vector, usual or centre-outward, simple or m-step.

    A zero gap under a log-based h yields +inf, reported as degenerate.
    """
    value = float(scaled_mean(gaps.gaps, h, gaps.n_effective, gaps.scheme.m))
    return StatisticValue(
        value=value,
        h=h,
        scheme=gaps.scheme,
        n_effective=gaps.n_effective,
    )


def combined_max_statistic(sample: Sample, h: HFunction) -> StatisticValue:
    """max(W(h), W*(h)) over usual and centre-outward simple spacings of one sample."""
    usual = statistic(simple_spacings(sample, Ordering.USUAL), h)
    co = statistic(simple_spacings(sample, Ordering.CENTRE_OUTWARD), h)
    return StatisticValue(
        value=max(usual.value, co.value),
        h=h,
        scheme=SpacingScheme(),
        n_effective=sample.size + 1,
        combined=True,
    )


def evaluate(spec: StatisticSpec, sample: Sample) -> StatisticValue:
    """Evaluate a statistic spec on one sample."""
    if spec.combined:
        return combined_max_statistic(sample, spec.h)
    return statistic(m_step_spacings(sample, spec.scheme), spec.h)


def evaluate_matrix(spec: StatisticSpec, values: NDArray[np.float64]) -> NDArray[np.float64]:
    """Evaluate a statistic spec on every row of a (replications x N) matrix.

    Raises:
        SchemeError: If the spec's step does not fit N + 1 spacings
    """
    values = np.atleast_2d(values)
    n_effective = values.shape[1] + 1
    if spec.combined:
        usual = scaled_mean(gaps_matrix(values, SpacingScheme(Ordering.USUAL)), spec.h, n_effective, 1)
        co = scaled_mean(
            gaps_matrix(values, SpacingScheme(Ordering.CENTRE_OUTWARD)), spec.h, n_effective, 1
        )
        return np.maximum(usual, co)
    gaps = gaps_matrix(values, spec.scheme)
    return scaled_mean(gaps, spec.h, n_effective, spec.scheme.m)
