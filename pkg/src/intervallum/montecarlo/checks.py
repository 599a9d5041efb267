"""Numerical checks of distributional properties of spacings statistics."""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np
from scipy import stats

from intervallum.asymptotics.efficacy import limit_mean
from intervallum.asymptotics.local import PerturbedUniform
from intervallum.asymptotics.models import LocalAlternative
from intervallum.asymptotics.moments import exp_moments
from intervallum.asymptotics.quadrature import DEFAULT_QUAD_TOL
from intervallum.infra.observability import log_check_result
from intervallum.montecarlo.null import DEFAULT_CHUNK_SIZE
from intervallum.montecarlo.parallel import chunk_ranges
from intervallum.sampling.distributions import quantile
from intervallum.sampling.models import AlternativeFamily
from intervallum.sampling.rng import RngStream
from intervallum.spacings.models import Ordering, SpacingScheme
from intervallum.statistics.evaluation import evaluate_matrix
from intervallum.statistics.models import GREENWOOD, HFunction, StatisticSpec

logger = logging.getLogger(__name__)

# p-value threshold of the distributional-equality check
EQUALITY_LEVEL = 0.01

# Anderson-Darling significance level (percent) used for the normality verdict
NORMALITY_LEVEL = 1.0


@dataclass(frozen=True)
class EqualityCheck:
    """Two-sample Kolmogorov-Smirnov comparison of usual and centre-outward statistics.

    Attributes:
        statistic: Score function name
        n_obs: Observations per sample
        replications: Statistics per side
        co_family: Family the centre-outward side samples from
        ks_statistic: Two-sample KS distance
        p_value: Two-sample KS p-value
    """

    statistic: str
    n_obs: int
    replications: int
    co_family: str
    ks_statistic: float
    p_value: float

    @property
    def passed(self) -> bool:
        return self.p_value > EQUALITY_LEVEL

    def to_dict(self) -> dict[str, Any]:
        return {**asdict(self), "passed": self.passed}


@dataclass(frozen=True)
class NormalityCheck:
    """Standardised statistic sqrt(n) (W - E h(Z)) / sigma_h under the null.

    Attributes:
        statistic: Statistic spec
        n_obs: Observations per sample
        replications: Simulated statistics
        mean: Sample mean of the standardised statistic
        variance: Sample variance
        skewness: Sample skewness
        ad_statistic: Anderson-Darling statistic against the normal family
        ad_critical_value: Critical value at NORMALITY_LEVEL percent
    """

    statistic: str
    n_obs: int
    replications: int
    mean: float
    variance: float
    skewness: float
    ad_statistic: float
    ad_critical_value: float

    @property
    def passed(self) -> bool:
        return self.ad_statistic < self.ad_critical_value

    def to_dict(self) -> dict[str, Any]:
        return {**asdict(self), "passed": self.passed}


@dataclass(frozen=True)
class LocalAlternativeCheck:
    """Empirical mean of sqrt(n) (W - E h(Z)) under x + L(x) / n^(1/4) against its limit.

    Attributes:
        statistic: Statistic spec
        perturbation: Perturbation name
        n_obs: Observations per sample
        replications: Simulated statistics
        empirical_mean: Monte Carlo mean
        standard_error: Its standard error
        limit_mean: Mean of the normal limit
    """

    statistic: str
    perturbation: str
    n_obs: int
    replications: int
    empirical_mean: float
    standard_error: float
    limit_mean: float

    @property
    def relative_error(self) -> float:
        if self.limit_mean == 0.0:
            return math.inf if self.empirical_mean != 0.0 else 0.0
        return abs(self.empirical_mean - self.limit_mean) / abs(self.limit_mean)

    def to_dict(self) -> dict[str, Any]:
        return {**asdict(self), "relative_error": self.relative_error}


def _statistics(
    spec: StatisticSpec,
    n_obs: int,
    replications: int,
    stream: RngStream,
    family: AlternativeFamily,
    chunk_size: int,
) -> np.ndarray:
    parts = []
    for start, count in chunk_ranges(replications, chunk_size):
        uniforms = stream.replication_block(n_obs, start, count)
        parts.append(evaluate_matrix(spec, np.asarray(quantile(family, uniforms))))
    return np.concatenate(parts)


def equality_check(
    n_obs: int,
    replications: int,
    rng: RngStream,
    h: HFunction = GREENWOOD,
    co_family: AlternativeFamily | None = None,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> EqualityCheck:
    """Compare W(h) on uniform samples with W*(h) on independent samples.

    Under U(0,1) both sides have the same law, since centre-outward ranks of
    a uniform sample are again a uniform sample. co_family lets the
    centre-outward side sample from an alternative instead.
    """
    co_family = co_family or AlternativeFamily.uniform()
    usual = _statistics(
        StatisticSpec(h, SpacingScheme(Ordering.USUAL)),
        n_obs,
        replications,
        rng.substream("equality", "usual", n_obs),
        AlternativeFamily.uniform(),
        chunk_size,
    )
    co = _statistics(
        StatisticSpec(h, SpacingScheme(Ordering.CENTRE_OUTWARD)),
        n_obs,
        replications,
        rng.substream("equality", "co", co_family.spec, n_obs),
        co_family,
        chunk_size,
    )
    result = stats.ks_2samp(usual, co)
    check = EqualityCheck(
        statistic=h.name,
        n_obs=n_obs,
        replications=replications,
        co_family=co_family.spec,
        ks_statistic=float(result.statistic),
        p_value=float(result.pvalue),
    )
    log_check_result(logger, "spacings_equality", check.passed, **asdict(check))
    return check


def standardised_null_statistics(
    spec: StatisticSpec,
    n_obs: int,
    replications: int,
    rng: RngStream,
    quad_tol: float = DEFAULT_QUAD_TOL,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> np.ndarray:
    """sqrt(n) (W - E h(Z)) / sigma_h over null samples, n = n_obs + 1 spacings."""
    moments = exp_moments(spec.h, quad_tol)
    values = _statistics(
        spec,
        n_obs,
        replications,
        rng.substream("normality", spec.spec, n_obs),
        AlternativeFamily.uniform(),
        chunk_size,
    )
    return math.sqrt(n_obs + 1) * (values - moments.mean_h) / moments.sigma


def normality_check(
    n_obs: int = 500,
    replications: int = 10_000,
    rng: RngStream | None = None,
    spec: StatisticSpec | None = None,
    quad_tol: float = DEFAULT_QUAD_TOL,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> NormalityCheck:
    """Anderson-Darling check of the normal null limit (Greenwood CO by default)."""
    spec = spec or StatisticSpec(GREENWOOD, SpacingScheme(Ordering.CENTRE_OUTWARD))
    rng = rng or RngStream(0)
    z = standardised_null_statistics(spec, n_obs, replications, rng, quad_tol, chunk_size)
    ad = stats.anderson(z, dist="norm")
    level = list(ad.significance_level).index(NORMALITY_LEVEL)
    check = NormalityCheck(
        statistic=spec.spec,
        n_obs=n_obs,
        replications=replications,
        mean=float(np.mean(z)),
        variance=float(np.var(z, ddof=1)),
        skewness=float(stats.skew(z)),
        ad_statistic=float(ad.statistic),
        ad_critical_value=float(ad.critical_values[level]),
    )
    log_check_result(logger, "null_normality", check.passed, **asdict(check))
    return check


def local_alternative_check(
    alternative: LocalAlternative,
    n_obs: int,
    replications: int,
    rng: RngStream,
    h: HFunction = GREENWOOD,
    ordering: Ordering = Ordering.CENTRE_OUTWARD,
    quad_tol: float = DEFAULT_QUAD_TOL,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> LocalAlternativeCheck:
    """Mean of sqrt(n) (W - E h(Z)) under the local alternative at n = n_obs + 1."""
    n = n_obs + 1
    spec = StatisticSpec(h, SpacingScheme(ordering))
    sampler = PerturbedUniform(alternative, n)
    stream = rng.substream("local", alternative.name, spec.spec, n_obs)
    mean_h = exp_moments(h, quad_tol).mean_h

    parts = []
    for start, count in chunk_ranges(replications, chunk_size):
        samples = sampler.quantile(stream.replication_block(n_obs, start, count))
        parts.append(math.sqrt(n) * (evaluate_matrix(spec, samples) - mean_h))
    scaled = np.concatenate(parts)

    check = LocalAlternativeCheck(
        statistic=spec.spec,
        perturbation=alternative.name,
        n_obs=n_obs,
        replications=replications,
        empirical_mean=float(np.mean(scaled)),
        standard_error=float(np.std(scaled, ddof=1) / math.sqrt(replications)),
        limit_mean=limit_mean(h, alternative, ordering, quad_tol),
    )
    logger.info(
        "check.local_alternative",
        extra={"data": {"name": "check.local_alternative", **check.to_dict()}},
    )
    return check
