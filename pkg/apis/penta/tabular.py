"""
CSV / JSON reading and writing for the command line.

Tables are read with every cell as a string so that numbers are parsed, and
rejected, one cell at a time with the row number in the message. Rows are
numbered from 1 for the first data row.
"""

import io
import json
import logging
import math
import os
import sys
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

from apis.penta.errors import DataError, MissingColumnError, RowError

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")


def detect_format(path: str) -> str:
    return "json" if os.path.splitext(path)[1].lower() == ".json" else "csv"


def read_table(path: str) -> pd.DataFrame:
    """Load a CSV or JSON (array of flat objects) file as a frame of strings."""
    try:
        df = _read_json(path) if detect_format(path) == "json" else _read_csv(path)
    except UnicodeDecodeError as e:
        raise DataError(f"{path}: not valid UTF-8 at byte {e.start}") from None

    df.columns = [str(c).strip().lower() for c in df.columns]
    logger.debug("read %d row(s) from %s: columns %s", len(df), path, list(df.columns))
    return df


def _read_json(path: str) -> pd.DataFrame:
    with open(path, encoding="utf-8") as fh:
        try:
            records = json.load(fh)
        except json.JSONDecodeError as e:
            raise DataError(f"{path}: invalid JSON at line {e.lineno}: {e.msg}") from None
    if not isinstance(records, list) or not all(isinstance(r, dict) for r in records):
        raise DataError(f"{path}: expected a JSON array of objects")
    df = pd.DataFrame(records)
    return df.apply(lambda col: col.map(lambda v: "" if v is None else str(v)))


def _read_csv(path: str) -> pd.DataFrame:
    try:
        return pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise DataError(f"{path}: file is empty") from None
    except pd.errors.ParserError as e:
        raise DataError(f"{path}: {e}") from None


def require_columns(df: pd.DataFrame, required: Sequence[str]) -> None:
    missing = [c for c in required if c not in df.columns]
    if missing:
        raise MissingColumnError(missing, list(df.columns))


def element_ids(df: pd.DataFrame) -> List[str]:
    """The element column, or 1-based row numbers when it is absent."""
    if "element" not in df.columns:
        return [str(i + 1) for i in range(len(df))]
    ids, seen = [], set()
    for i, raw in enumerate(df["element"]):
        element = str(raw).strip()
        if not element:
            raise RowError(i + 1, "element is empty", "element")
        if element in seen:
            raise RowError(i + 1, f"duplicate element {element!r}", "element")
        seen.add(element)
        ids.append(element)
    return ids


def parse_number(df: pd.DataFrame, row: int, column: str) -> float:
    raw = str(df.iloc[row][column]).strip()
    try:
        value = float(raw)
    except ValueError:
        raise RowError(row + 1, f"{column} is not a number: {raw!r}", column) from None
    if not math.isfinite(value):
        raise RowError(row + 1, f"{column} is not finite", column)
    return value


def parse_unit(df: pd.DataFrame, row: int, column: str) -> float:
    value = parse_number(df, row, column)
    if not (0.0 <= value <= 1.0):
        raise RowError(row + 1, f"{column} out of [0,1]", column)
    return value


def round_partition(values: Sequence[float], precision: int) -> List[float]:
    """
    Round non-negative values that sum to 1 so the rounded values still sum
    to exactly 1 at `precision` decimals (largest-remainder apportionment,
    ties broken by position).
    """
    scale = 10 ** precision
    scaled = np.clip(np.asarray(values, dtype=float), 0.0, None) * scale
    floors = np.floor(scaled)
    deficit = int(round(scale - floors.sum()))
    deficit = max(0, min(deficit, len(floors)))
    order = np.argsort(-(scaled - floors), kind="stable")
    floors[order[:deficit]] += 1
    return [float(v) / scale for v in floors]


def write_table(
    df: pd.DataFrame, path: Optional[str], fmt: str, precision: int
) -> None:
    """Write to `path`, or stdout when path is None or '-'."""
    if fmt == "json":
        records = [
            {k: (round(float(v), precision) + 0.0 if isinstance(v, (float, np.floating)) else v)
             for k, v in rec.items()}
            for rec in df.to_dict(orient="records")
        ]
        buf = io.StringIO()
        json.dump(records, buf, indent=2)
        buf.write("\n")
        text = buf.getvalue()
    else:
        df = df.copy()
        for col in df.select_dtypes(include="float").columns:
            df[col] = df[col] + 0.0   # no "-0.000000" cells
        text = df.to_csv(index=False, float_format=f"%.{precision}f", lineterminator="\n")

    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    logger.info("wrote %d row(s) to %s", len(df), path)
