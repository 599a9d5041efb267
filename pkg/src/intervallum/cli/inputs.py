from pathlib import Path

import numpy as np

from intervallum.errors import DomainError, InputError
from intervallum.sampling.distributions import probability_integral_transform
from intervallum.sampling.models import AlternativeFamily
from intervallum.spacings.models import Sample


def read_values(path: Path) -> list[float]:
    """One number per line; blank lines and lines starting with '#' are skipped.

    Raises:
        InputError: If the file is missing, empty or holds a non-number
    """
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InputError(f"cannot read '{path}'", {"error": str(e)}) from e

    values: list[float] = []
    for number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            value = float(text)
        except ValueError as e:
            raise InputError(f"{path}:{number}: not a number: '{text}'", {"line": number}) from e
        if not np.isfinite(value):
            raise InputError(f"{path}:{number}: value must be finite", {"line": number})
        values.append(value)

    if not values:
        raise InputError(f"'{path}' holds no values")
    return values


def read_sample(path: Path, null_family: str | None = None) -> Sample:
    """Read observations, mapping them to the null scale through null_family's cdf if given.

    Values outside [0, 1] are rejected, never clamped.

    Raises:
        InputError: If the file is malformed or a value lies outside [0, 1]
    """
    values = np.asarray(read_values(path), dtype=np.float64)
    try:
        if null_family is not None:
            values = probability_integral_transform(values, AlternativeFamily.from_spec(null_family))
        return Sample.of(values.tolist())
    except DomainError as e:
        if null_family is None:
            message = f"values in '{path}' must lie in [0, 1]; pass --null to transform them"
        else:
            message = f"values in '{path}' lie outside [0, 1], the support of --null '{null_family}'"
        raise InputError(message, e.details) from e
