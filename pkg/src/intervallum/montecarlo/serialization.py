"""Power table serialization: CSV with a JSON sidecar, or one JSON document.

Cells are written with repr(), so reading a table back gives identical floats.
Nothing run-dependent (wall time, worker count) is written, so a fixed seed
gives byte-identical files.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Literal

import numpy as np

from intervallum.errors import InputError
from intervallum.montecarlo.models import PowerStudyConfig, PowerTable

OutputFormat = Literal["csv", "json"]

SIDECAR_SUFFIX = ".meta.json"


def sidecar_path(path: Path) -> Path:
    """'power.csv' -> 'power.meta.json'."""
    return path.with_suffix(SIDECAR_SUFFIX)


def power_table_csv(table: PowerTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["alternative", "n", *table.columns])
    for (family, n_obs), cells in zip(table.rows, table.cells, strict=True):
        writer.writerow([family, n_obs, *(repr(float(cell)) for cell in cells)])
    return buffer.getvalue()


def power_table_sidecar(table: PowerTable) -> dict[str, Any]:
    return {
        "config": table.config.model_dump(mode="json"),
        "metadata": table.metadata,
    }


def power_table_document(table: PowerTable) -> dict[str, Any]:
    return {
        **power_table_sidecar(table),
        "columns": list(table.columns),
        "rows": [
            {
                "alternative": family,
                "n": n_obs,
                "cells": dict(zip(table.columns, (float(c) for c in cells), strict=True)),
            }
            for (family, n_obs), cells in zip(table.rows, table.cells, strict=True)
        ],
    }


def _dump(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_power_table(table: PowerTable, path: Path, fmt: OutputFormat = "csv") -> list[Path]:
    """Write a table; CSV output also writes the sidecar.

    Returns:
        Paths written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt == "json":
        path.write_text(_dump(power_table_document(table)), encoding="utf-8")
        return [path]

    path.write_text(power_table_csv(table), encoding="utf-8")
    sidecar = sidecar_path(path)
    sidecar.write_text(_dump(power_table_sidecar(table)), encoding="utf-8")
    return [path, sidecar]


def _read_json(path: Path) -> dict[str, Any]:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read '{path}'", {"error": str(e)}) from e
    if not isinstance(payload, dict) or "config" not in payload:
        raise InputError(f"'{path}' is not a power table document")
    return payload


def _config(payload: dict[str, Any], path: Path) -> PowerStudyConfig:
    try:
        return PowerStudyConfig.model_validate(payload["config"])
    except ValueError as e:
        raise InputError(f"invalid config in '{path}'", {"error": str(e)}) from e


def read_power_table(path: Path) -> PowerTable:
    """Read a table written by write_power_table (CSV plus sidecar, or JSON).

    Raises:
        InputError: If a file is missing or malformed
    """
    path = Path(path)
    if path.suffix == ".json":
        payload = _read_json(path)
        columns = tuple(payload["columns"])
        rows = tuple((row["alternative"], int(row["n"])) for row in payload["rows"])
        cells = [[row["cells"][column] for column in columns] for row in payload["rows"]]
        return PowerTable(
            config=_config(payload, path),
            rows=rows,
            columns=columns,
            cells=np.array(cells, dtype=np.float64).reshape(len(rows), len(columns)),
            metadata=payload.get("metadata", {}),
        )

    sidecar = _read_json(sidecar_path(path))
    try:
        with path.open(encoding="utf-8", newline="") as handle:
            records = list(csv.reader(handle))
        header, body = records[0], records[1:]
        if header[:2] != ["alternative", "n"]:
            raise ValueError(f"unexpected header {header[:2]}")
        rows = tuple((record[0], int(record[1])) for record in body)
        cells = np.array([[float(v) for v in record[2:]] for record in body], dtype=np.float64)
    except (OSError, IndexError, ValueError) as e:
        raise InputError(f"malformed power table '{path}'", {"error": str(e)}) from e

    columns = tuple(header[2:])
    return PowerTable(
        config=_config(sidecar, path),
        rows=rows,
        columns=columns,
        cells=cells.reshape(len(rows), len(columns)),
        metadata=sidecar.get("metadata", {}),
    )
