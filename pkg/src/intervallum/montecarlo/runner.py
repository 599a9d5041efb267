"""Single-sample goodness-of-fit tests of H0: F(x) = x on [0, 1]."""

import logging
import math

from scipy import stats

from intervallum.asymptotics.moments import exp_moments
from intervallum.asymptotics.quadrature import DEFAULT_QUAD_TOL
from intervallum.errors import ConfigError, DegenerateVarianceError
from intervallum.infra.observability import log_test_decision
from intervallum.montecarlo.models import Decision, MethodKind, TestMethod, TestReport
from intervallum.montecarlo.null import (
    DEFAULT_CHUNK_SIZE,
    NullDistribution,
    simulate_null,
)
from intervallum.sampling.rng import RngStream
from intervallum.spacings.models import Sample
from intervallum.statistics.evaluation import evaluate
from intervallum.statistics.models import StatisticSpec, StatisticValue
from intervallum.statistics.registry import parse_statistic

logger = logging.getLogger(__name__)


def _asymptotic_tail(
    value: StatisticValue, spec: StatisticSpec, alpha: float, quad_tol: float
) -> tuple[float, float]:
    if spec.combined or not spec.scheme.is_simple:
        raise ConfigError(
            f"the asymptotic method covers simple, single statistics only: '{spec.spec}'",
            {"statistic": spec.spec},
        )
    moments = exp_moments(spec.h, quad_tol)
    if moments.is_degenerate:
        raise DegenerateVarianceError(
            f"score function '{spec.h.name}' has zero null variance",
            {"statistic": spec.spec},
        )
    mean = moments.mean_h
    scale = moments.sigma / math.sqrt(value.n_effective)
    critical = mean + float(stats.norm.isf(alpha)) * scale
    if value.degenerate:
        return 0.0, critical
    return float(stats.norm.sf((value.value - mean) / scale)), critical


def run_test(
    sample: Sample,
    statistic: StatisticSpec | str,
    alpha: float = 0.05,
    method: TestMethod | None = None,
    *,
    null: NullDistribution | None = None,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    quad_tol: float = DEFAULT_QUAD_TOL,
) -> TestReport:
    """Upper-tail test of uniformity with one spacings statistic.

    The sample must already be on the null scale (probability integral
    transform applied). Monte Carlo p-values count null replicates at least as
    large as the observed value, with the +1/+1 correction; the asymptotic
    method uses the normal limit of sqrt(n) (W(h) - E h(Z)). An infinite
    statistic is a degenerate rejection with p-value 0.

    Args:
        sample: Observations in [0, 1]
        statistic: Statistic or its spec string
        alpha: Significance level in (0, 1)
        method: Monte Carlo (default 10^4 null replications, seed 0) or asymptotic
        null: Precomputed null distribution for this statistic and sample size
        workers: Worker processes for the null simulation
        chunk_size: Replications per work unit
        quad_tol: Quadrature tolerance of the asymptotic method

    Raises:
        ConfigError: If alpha is invalid, the asymptotic method does not cover
            the statistic, or null does not match it
    """
    spec = parse_statistic(statistic) if isinstance(statistic, str) else statistic
    method = method or TestMethod.monte_carlo(10_000, 0)
    if not 0.0 < alpha < 1.0:
        raise ConfigError("alpha must lie in (0, 1)", {"alpha": alpha})

    value = evaluate(spec, sample)

    if method.kind is MethodKind.ASYMPTOTIC_NORMAL:
        p_value, critical = _asymptotic_tail(value, spec, alpha, quad_tol)
    else:
        if null is None:
            rng = RngStream(method.seed)
            null = simulate_null(
                [spec], sample.size, method.replications, rng, workers, chunk_size
            )[spec.null_key]
        elif null.null_key != spec.null_key or null.n_obs != sample.size:
            raise ConfigError(
                "null distribution does not match the statistic",
                {"null_key": null.null_key, "expected": spec.null_key, "n_obs": null.n_obs},
            )
        critical = null.critical_value(alpha)
        p_value = 0.0 if value.degenerate else null.p_value(value.value)

    decision = (
        Decision.REJECT
        if value.degenerate or value.value > critical
        else Decision.FAIL_TO_REJECT
    )
    report = TestReport(
        statistic=value,
        p_value=p_value,
        critical_value=critical,
        alpha=alpha,
        decision=decision,
        method=method,
        degenerate=value.degenerate,
    )
    log_test_decision(
        logger,
        spec.label,
        value.value,
        p_value,
        decision.value,
        degenerate=value.degenerate,
        n_obs=sample.size,
        method=method.kind.value,
    )
    return report
