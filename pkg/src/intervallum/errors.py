from typing import Any


class IntervallumError(Exception):
    """Base exception for every error raised by the toolkit."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        """Initialize toolkit error.

        Args:
            message: Error message
            details: Offending values and any context useful for reporting
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}


class DomainError(IntervallumError, ValueError):
    """Raised when an argument lies outside its mathematical domain."""


class SchemeError(DomainError):
    """Raised when a spacing scheme cannot be applied to a sample."""


class SpecParseError(IntervallumError, ValueError):
    """Raised when a family or statistic spec string is malformed."""


class QuadratureError(IntervallumError):
    """Raised when numerical integration does not converge."""


class DegenerateVarianceError(IntervallumError):
    """Raised when a score function has zero null variance (affine h)."""


class ZeroEfficacyError(IntervallumError):
    """Raised when a relative efficiency has a zero denominator."""


class InputError(IntervallumError):
    """Raised for malformed data files."""


class ConfigError(IntervallumError):
    """Raised for invalid run or study configuration."""
