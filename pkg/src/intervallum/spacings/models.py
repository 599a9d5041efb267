from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from intervallum.errors import DomainError


class Ordering(str, Enum):
    USUAL = "usual"
    CENTRE_OUTWARD = "co"


class Layout(str, Enum):
    DISJOINT = "disjoint"
    OVERLAPPING = "overlap"


@dataclass(frozen=True)
class Sample:
    """Observations already transformed to the U(0,1) null scale.

    Attributes:
        values: Observations, each in [0, 1]
    """

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        """Validate sample definition."""
        if not self.values:
            raise DomainError("sample cannot be empty")
        bad = [v for v in self.values if not 0.0 <= v <= 1.0]
        if bad:
            raise DomainError("sample values must lie in [0, 1]", {"values": bad[:5]})

    @classmethod
    def of(cls, values: Iterable[float]) -> "Sample":
        return cls(tuple(float(v) for v in values))

    @property
    def size(self) -> int:
        return len(self.values)

    def as_array(self) -> NDArray[np.float64]:
        return np.asarray(self.values, dtype=np.float64)

    def reflected(self) -> "Sample":
        """The sample x -> 1 - x."""
        return Sample(tuple(1.0 - v for v in self.values))


@dataclass(frozen=True)
class SpacingScheme:
    """Which spacing construction to apply.

    Attributes:
        ordering: Usual order statistics or centre-outward ranks
        m: Step of the spacings (1 for simple spacings)
        layout: Disjoint or overlapping windows (irrelevant when m = 1)
    """

    ordering: Ordering = Ordering.USUAL
    m: int = 1
    layout: Layout = Layout.DISJOINT

    def __post_init__(self) -> None:
        """Validate scheme definition."""
        if self.m < 1:
            raise DomainError("spacing step m must be at least 1", {"m": self.m})

    @property
    def is_simple(self) -> bool:
        return self.m == 1

    def with_ordering(self, ordering: Ordering) -> "SpacingScheme":
        return SpacingScheme(ordering, self.m, self.layout)


@dataclass(frozen=True, eq=False)
class SpacingsVector:
    """Gaps produced by a spacing scheme.

    Attributes:
        gaps: Non-negative gaps (read-only array)
        scheme: Scheme that produced them
        n_effective: Number of simple gaps (sample size + 1)
    """

    gaps: NDArray[np.float64]
    scheme: SpacingScheme
    n_effective: int

    def __post_init__(self) -> None:
        """Freeze the gap array."""
        gaps = np.array(self.gaps, dtype=np.float64)
        if gaps.ndim != 1 or gaps.size == 0:
            raise DomainError("gaps must be a non-empty vector")
        if np.any(gaps < 0.0):
            raise DomainError("gaps must be non-negative", {"min_gap": float(gaps.min())})
        gaps.setflags(write=False)
        object.__setattr__(self, "gaps", gaps)

    def __len__(self) -> int:
        return int(self.gaps.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SpacingsVector):
            return NotImplemented
        return (
            self.scheme == other.scheme
            and self.n_effective == other.n_effective
            and np.array_equal(self.gaps, other.gaps)
        )

    def __hash__(self) -> int:
        return hash((self.scheme, self.n_effective, self.gaps.tobytes()))
