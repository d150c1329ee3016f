"""
Report Rendering

Every command that emits JSON wraps its payload in a Report with the fixed
top-level keys command, inputs, results, seed and tool_version. Floats are
written in shortest round-trip form and non-finite values become null, so a
re-run with the same inputs and seed is byte-identical.

CSV output uses a header row, comma delimiter, '.' decimals, LF line endings
and 17 significant digits.
"""

import argparse
from typing import Any, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, Field

from config.settings import settings
from errors import UsageError


class Report(BaseModel):
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any]
    seed: Optional[int] = None
    tool_version: str = Field(default_factory=lambda: settings.tool_version)

    def render(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


def echo_inputs(args: argparse.Namespace) -> Dict[str, Any]:
    """Parsed arguments minus dispatch plumbing, with paths as strings."""
    skip = {"command", "log_level"}
    return {
        key: (str(value) if value is not None and not isinstance(value, (int, float, str, bool, list)) else value)
        for key, value in sorted(vars(args).items())
        if key not in skip
    }


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n", float_format="%.17g")


def format_number(value: float) -> str:
    return format(value, ".17g")


# ============================================================================
# Argument Parsing Helpers
# ============================================================================

def parse_float_list(text: str) -> List[float]:
    """Comma-separated reals, e.g. "0.1,0.3,0.5"."""
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one number")
    return values


def parse_int_list(text: str) -> List[int]:
    """Comma-separated integers, e.g. "100,200,500"."""
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def parse_column(text: str):
    """Column by zero-based index when numeric, else by header name."""
    return int(text) if text.isdigit() else text


def require(condition: bool, message: str) -> None:
    if not condition:
        raise UsageError(message)
