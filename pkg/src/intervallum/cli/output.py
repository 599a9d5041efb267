import csv
import io
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any


def format_records(records: Sequence[dict[str, Any]], fmt: str) -> str:
    """Render flat records as a JSON array or as CSV with a header row."""
    if fmt == "json":
        return json.dumps(list(records), indent=2) + "\n"

    buffer = io.StringIO()
    if records:
        writer = csv.DictWriter(buffer, fieldnames=list(records[0]), lineterminator="\n")
        writer.writeheader()
        for record in records:
            writer.writerow({key: _cell(value) for key, value in record.items()})
    return buffer.getvalue()


def format_document(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2) + "\n"


def _cell(value: Any) -> Any:
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return value


def emit(text: str, out: Path | None) -> None:
    """Write to the output path, or to stdout."""
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
