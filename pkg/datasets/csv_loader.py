"""
CSV Ingestion

Reads one numeric column from a CSV file. Every cell is read as text so that
errors can name the file line of the offending value:

- Blank lines are skipped
- A first non-blank row with any non-numeric cell is taken as the header
- Columns are addressed by header name or by zero-based position
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

import numpy as np
import pandas as pd

from errors import DataIngestionError

logger = logging.getLogger(__name__)


def _parse_number(cell: str) -> Optional[float]:
    try:
        value = float(cell)
    except ValueError:
        return None
    return value if np.isfinite(value) else None


def _is_blank(cell) -> bool:
    return pd.isna(cell) or str(cell).strip() == ""


def _resolve_column(column: Union[str, int], header: Optional[List[str]], width: int, path: Path) -> int:
    if header is not None and isinstance(column, str) and column in header:
        return header.index(column)
    if isinstance(column, int) or str(column).isdigit():
        index = int(column)
        if index >= width:
            raise DataIngestionError(f"{path}: column index {index} out of range (file has {width} column(s))")
        return index
    available = ", ".join(header) if header else "no header row"
    raise DataIngestionError(f"{path}: column '{column}' not found ({available})")


def ingest_csv(path: Union[str, Path], column: Union[str, int] = 0) -> np.ndarray:
    """
    Read one numeric column from a CSV file.

    Args:
        path: CSV file (comma-delimited, '.' decimal separator)
        column: Header name or zero-based column index

    Returns:
        Column values in file order

    Raises:
        DataIngestionError: Missing file, missing column, empty or non-numeric cell
    """
    path = Path(path)
    if not path.is_file():
        raise DataIngestionError(f"data file not found: {path}")

    try:
        raw = pd.read_csv(
            path,
            header=None,
            dtype=str,
            skip_blank_lines=False,
            keep_default_na=False,
        )
    except pd.errors.EmptyDataError:
        raise DataIngestionError(f"{path}: file is empty")
    except pd.errors.ParserError as e:
        raise DataIngestionError(f"{path}: cannot parse CSV ({e})")

    # Row i of the frame is line i + 1 of the file
    rows = [(i + 1, list(row)) for i, row in enumerate(raw.itertuples(index=False, name=None))]
    rows = [(line, cells) for line, cells in rows if not all(_is_blank(c) for c in cells)]
    if not rows:
        raise DataIngestionError(f"{path}: file has no data rows")

    header = None
    first_line, first_cells = rows[0]
    if any(not _is_blank(c) and _parse_number(str(c).strip()) is None for c in first_cells):
        header = [str(c).strip() for c in first_cells]
        rows = rows[1:]
        logger.debug(f"{path}: line {first_line} taken as header {header}")

    index = _resolve_column(column, header, raw.shape[1], path)

    values = []
    for line, cells in rows:
        cell = cells[index]
        if _is_blank(cell):
            raise DataIngestionError(f"{path}: line {line}: empty cell in column {column}")
        value = _parse_number(str(cell).strip())
        if value is None:
            raise DataIngestionError(f"{path}: line {line}: non-numeric value '{cell}' in column {column}")
        values.append(value)

    logger.info(f"Read {len(values)} values from {path} (column {column})")
    return np.array(values, dtype=float)
