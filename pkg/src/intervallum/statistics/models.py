from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special

from intervallum.errors import DomainError
from intervallum.spacings.models import Layout, Ordering, SpacingScheme

ScoreFunction = Callable[[NDArray[np.float64]], ArrayLike]

# Points where a user-supplied h must be finite
_PROBE_GRID = np.array([0.05, 0.25, 0.5, 1.0, 1.5, 2.0, 4.0, 8.0])


class HKind(str, Enum):
    GREENWOOD = "greenwood"
    MORAN = "moran"
    RAO = "rao"
    ENTROPY = "entropy"
    CUSTOM = "custom"


@dataclass(frozen=True)
class HFunction:
    """Convex score function h of a spacings statistic W(h) = (1/n) sum h(n D_i).

    Built-ins:
    - greenwood: x^2 (symbol G)
    - moran: -log x, +inf at 0 (symbol L)
    - rao: |x - 1| (symbol R)
    - entropy: x log x with 0 log 0 = 0 (symbol E)

    Attributes:
        kind: Built-in kind or CUSTOM
        name: Registry name
        symbol: Column symbol used in power tables
        func: Vectorised callable for CUSTOM kinds
    """

    kind: HKind
    name: str
    symbol: str
    func: ScoreFunction | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        """Validate score function definition."""
        if not self.name:
            raise DomainError("score function name cannot be empty")
        if (self.kind is HKind.CUSTOM) != (self.func is not None):
            raise DomainError("func must be given exactly for custom score functions")

    @classmethod
    def custom(cls, name: str, func: ScoreFunction, symbol: str | None = None) -> "HFunction":
        """Wrap a user score function.

        The caller asserts convexity and the moment conditions of the limit
        theory; only finiteness on a probe grid is checked here.

        Raises:
            DomainError: If func is not finite on the probe grid
        """
        values = np.asarray(func(_PROBE_GRID.copy()), dtype=np.float64)
        if values.shape != _PROBE_GRID.shape or not np.all(np.isfinite(values)):
            raise DomainError(
                f"custom score function '{name}' must be vectorised and finite on the probe grid",
                {"probe": _PROBE_GRID.tolist()},
            )
        return cls(HKind.CUSTOM, name, symbol or name, func)

    def __call__(self, x: ArrayLike) -> NDArray[np.float64]:
        xs = np.asarray(x, dtype=np.float64)
        match self.kind:
            case HKind.GREENWOOD:
                return xs**2
            case HKind.MORAN:
                with np.errstate(divide="ignore"):
                    return -np.log(xs)
            case HKind.RAO:
                return np.abs(xs - 1.0)
            case HKind.ENTROPY:
                return special.xlogy(xs, xs)
            case HKind.CUSTOM:
                return np.asarray(self.func(xs), dtype=np.float64)
        raise DomainError(f"unsupported score function kind: {self.kind}")

    def __str__(self) -> str:
        return self.name


GREENWOOD = HFunction(HKind.GREENWOOD, "greenwood", "G")
MORAN = HFunction(HKind.MORAN, "moran", "L")
RAO = HFunction(HKind.RAO, "rao", "R")
ENTROPY = HFunction(HKind.ENTROPY, "entropy", "E")

BUILTIN_H_FUNCTIONS = (GREENWOOD, MORAN, RAO, ENTROPY)


@dataclass(frozen=True)
class StatisticSpec:
    """A statistic: score function, spacing scheme and whether it is the max-combined test.

    Attributes:
        h: Score function
        scheme: Spacing scheme (simple usual for the combined test)
        combined: True for max(W(h), W*(h))
    """

    h: HFunction
    scheme: SpacingScheme = SpacingScheme()
    combined: bool = False

    def __post_init__(self) -> None:
        """Validate statistic definition."""
        if self.combined and (
            not self.scheme.is_simple or self.scheme.ordering is not Ordering.USUAL
        ):
            raise DomainError("the combined max statistic is defined for simple spacings only")

    @property
    def spec(self) -> str:
        """Canonical spec string (e.g. 'greenwood:co', 'moran:max', 'rao:m=2:overlap')."""
        parts = [self.h.name]
        if self.scheme.ordering is Ordering.CENTRE_OUTWARD:
            parts.append("co")
        if self.combined:
            parts.append("max")
        if not self.scheme.is_simple:
            parts.append(f"m={self.scheme.m}")
            parts.append(self.scheme.layout.value)
        return ":".join(parts)

    @property
    def label(self) -> str:
        """Power-table column label (G, G*, Gmax, G[m=2,overlap], ...)."""
        label = self.h.symbol
        if self.combined:
            return f"{label}max"
        if self.scheme.ordering is Ordering.CENTRE_OUTWARD:
            label += "*"
        if not self.scheme.is_simple:
            label += f"[m={self.scheme.m},{self.scheme.layout.value}]"
        return label

    @property
    def null_key(self) -> str:
        """Key of the null distribution; usual and CO schemes share it."""
        kind = "max" if self.combined else "single"
        layout = self.scheme.layout.value if not self.scheme.is_simple else Layout.DISJOINT.value
        return f"{self.h.name}|m={self.scheme.m}|{layout}|{kind}"

    def __str__(self) -> str:
        return self.spec


@dataclass(frozen=True)
class StatisticValue:
    """An evaluated statistic.

    Attributes:
        value: Statistic value (+inf when a zero gap met a log-based h)
        h: Score function
        scheme: Spacing scheme
        n_effective: Number of simple gaps behind the statistic
        combined: Whether this is the max-combined statistic
    """

    value: float
    h: HFunction
    scheme: SpacingScheme
    n_effective: int
    combined: bool = False

    @property
    def degenerate(self) -> bool:
        """True when the statistic is infinite (maximal clustering)."""
        return bool(np.isinf(self.value))

    @property
    def spec(self) -> StatisticSpec:
        return StatisticSpec(self.h, self.scheme, self.combined)
