"""
Table output in CSV and JSON.

CSV files start with ``#``-prefixed metadata lines (tool, version, config
hash, config echo and command-specific entries), then one column-header
line, then data rows. Floats are written in their shortest round-trip
decimal form. Nothing time-dependent is written, so identical runs give
byte-identical files. JSON files carry the same metadata, column names and
rows.
"""

import csv
import hashlib
import math
from pathlib import Path
from typing import Any, Sequence

from loguru import logger
from pydantic import BaseModel

from .. import __version__
from ..config import config
from .run_config import RunConfig

TOOL_NAME = "straddle-stirap"


class OutputError(Exception):
    """Custom exception for output files that cannot be written."""
    pass


class TableDocument(BaseModel):
    """JSON mirror of a CSV table."""
    metadata: dict[str, str]
    columns: list[str]
    rows: list[dict[str, Any]]


def config_echo(cfg: RunConfig) -> str:
    """Config JSON without execution-only settings (output location, worker count)."""
    return cfg.model_dump_json(exclude={"output": True, "sweep": {"workers"}})


def config_hash(cfg: RunConfig) -> str:
    return hashlib.sha256(config_echo(cfg).encode("utf-8")).hexdigest()


def base_metadata(cfg: RunConfig) -> dict[str, str]:
    return {
        "tool": TOOL_NAME,
        "version": __version__,
        "config_hash": config_hash(cfg),
        "config": config_echo(cfg),
    }


def format_value(value: Any) -> str:
    """Shortest round-trip text for numbers; 1/0 for flags."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        value = float(value)
        return repr(value) if math.isfinite(value) else str(value)
    if hasattr(value, "item"):
        return format_value(value.item())
    return str(value)


def _json_value(value: Any) -> Any:
    if hasattr(value, "item"):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def resolve_path(path: str, suffix: str = "") -> Path:
    """Output path with an optional suffix before the extension, under STIRAP_OUTPUT_DIR if relative."""
    p = Path(path)
    if not p.is_absolute():
        p = Path(config.output_dir) / p
    if suffix:
        p = p.with_name(f"{p.stem}{suffix}{p.suffix}")
    return p


def write_table(
    path: Path,
    fmt: str,
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    metadata: dict[str, str],
) -> Path:
    """
    Write a table atomically (temporary file, then rename).

    Raises:
        OutputError: If the file cannot be written
    """
    tmp = path.with_name(path.name + ".part")
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if fmt == "csv":
            with open(tmp, "w", newline="", encoding="utf-8") as f:
                for key, value in metadata.items():
                    f.write(f"# {key}: {value}\n")
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(columns)
                for row in rows:
                    writer.writerow([format_value(v) for v in row])
        else:
            doc = TableDocument(
                metadata=metadata,
                columns=list(columns),
                rows=[{c: _json_value(v) for c, v in zip(columns, row)} for row in rows],
            )
            tmp.write_text(doc.model_dump_json(indent=2) + "\n", encoding="utf-8")
        tmp.replace(path)

    except OSError as e:
        tmp.unlink(missing_ok=True)
        error_msg = f"Failed to write {path}: {str(e)}"
        logger.error(error_msg)
        raise OutputError(error_msg) from e

    logger.info(f"💾 Wrote {len(rows)} rows to {path}")
    return path


def remove_partial(paths: Sequence[Path]) -> None:
    for p in paths:
        if p.exists():
            logger.warning(f"Removing partial output {p}")
            p.unlink()
