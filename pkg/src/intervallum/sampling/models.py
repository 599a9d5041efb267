import math
from dataclasses import dataclass
from enum import Enum

from intervallum.errors import DomainError, SpecParseError


class FamilyKind(str, Enum):
    UNIFORM = "uniform"
    A = "A"
    B = "B"
    C = "C"
    BETA = "beta"


@dataclass(frozen=True)
class AlternativeFamily:
    """A distribution on [0, 1]: the uniform null or one of the alternative families.

    - A(k): F(x) = 1 - (1 - x)^k, skewed with a cluster near zero for k > 1
    - B(k): symmetric about 1/2, lighter tails than uniform for k > 1
    - C(k): symmetric about 1/2, heavier tails than uniform for k > 1
    - Beta(k, k): symmetric beta

    Attributes:
        kind: Family kind
        k: Positive shape parameter (None for the uniform family)
    """

    kind: FamilyKind
    k: float | None = None

    def __post_init__(self) -> None:
        """Validate family definition."""
        if self.kind is FamilyKind.UNIFORM:
            if self.k is not None:
                raise DomainError("uniform family takes no shape parameter", {"k": self.k})
            return
        if self.k is None:
            raise DomainError(f"family {self.kind.value} requires a shape parameter k")
        if not math.isfinite(self.k) or self.k <= 0:
            raise DomainError("shape parameter k must be positive", {"k": self.k})

    @classmethod
    def uniform(cls) -> "AlternativeFamily":
        return cls(FamilyKind.UNIFORM)

    @classmethod
    def from_spec(cls, spec: str) -> "AlternativeFamily":
        """Parse a family spec string.

        Accepted forms (case-insensitive): 'uniform', 'A:1.5', 'B:1.5', 'C:1.5', 'beta:2.5'.

        Raises:
            SpecParseError: If the string does not follow the grammar
        """
        text = spec.strip()
        name, sep, param = text.partition(":")
        name = name.strip().lower()

        if name == "uniform":
            if sep:
                raise SpecParseError(f"uniform takes no parameter: '{spec}'", {"spec": spec})
            return cls.uniform()

        kinds = {"a": FamilyKind.A, "b": FamilyKind.B, "c": FamilyKind.C, "beta": FamilyKind.BETA}
        if name not in kinds:
            raise SpecParseError(
                f"Unknown family '{spec}'. Available families: uniform, A:<k>, B:<k>, C:<k>, beta:<k>",
                {"spec": spec},
            )
        if not sep:
            raise SpecParseError(f"family '{spec}' requires ':<k>'", {"spec": spec})
        try:
            k = float(param)
        except ValueError as e:
            raise SpecParseError(f"invalid shape parameter in '{spec}'", {"spec": spec}) from e

        try:
            return cls(kinds[name], k)
        except DomainError as e:
            raise SpecParseError(e.message, {"spec": spec}) from e

    @property
    def spec(self) -> str:
        """Canonical spec string, accepted back by from_spec."""
        if self.kind is FamilyKind.UNIFORM:
            return "uniform"
        return f"{self.kind.value}:{self.k:.15g}"

    @property
    def label(self) -> str:
        """Human readable label used as the table row name (e.g. 'A_1.5', 'Beta(2.5,2.5)')."""
        if self.kind is FamilyKind.UNIFORM:
            return "U(0,1)"
        if self.kind is FamilyKind.BETA:
            return f"Beta({self.k:g},{self.k:g})"
        return f"{self.kind.value}_{self.k:g}"

    @property
    def is_uniform(self) -> bool:
        """True when the family coincides with U(0,1) (uniform kind, or k = 1)."""
        return self.kind is FamilyKind.UNIFORM or self.k == 1.0

    @property
    def is_symmetric(self) -> bool:
        """True when the density is symmetric about 1/2."""
        return self.kind is not FamilyKind.A or self.is_uniform

    def __str__(self) -> str:
        return self.spec
