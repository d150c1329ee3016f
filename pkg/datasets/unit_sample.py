"""
Unit Samples

A UnitSample is an ordered vector of observations on the closed unit interval
together with where it came from and whether a boundary squeeze was applied.
Operations that consume a sample enforce their own narrower domains:
(0, 1] for the sufficient statistic and the closed-form estimators, (0, 1)
for likelihoods.

Raw series reach the unit interval through the min-max transform. Min-max
always maps the extremes to exactly 0 and 1, so callers that evaluate
likelihoods squeeze with y -> (y (n - 1) + 0.5) / n.
"""

import logging
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from errors import DegenerateRangeError, DomainError

logger = logging.getLogger(__name__)


def _first_outside(arr: np.ndarray) -> Optional[int]:
    """Index of the first value outside [0, 1], or None."""
    outside = ~((arr >= 0.0) & (arr <= 1.0))
    return int(np.argmax(outside)) if np.any(outside) else None


class UnitSample(BaseModel):
    """Observations in [0, 1] with provenance."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    values: np.ndarray
    squeezed: bool = False
    source: str = "inline"

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, v) -> np.ndarray:
        arr = np.asarray(v, dtype=float).ravel()
        bad = _first_outside(arr)
        if bad is not None:
            raise ValueError(f"unit samples need values in [0, 1]; index {bad} holds {arr[bad]}")
        return arr

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def has_zero(self) -> bool:
        return bool(np.any(self.values == 0.0))

    @property
    def has_one(self) -> bool:
        return bool(np.any(self.values == 1.0))


def as_values(data) -> np.ndarray:
    """Float array view of a UnitSample or any array-like."""
    if isinstance(data, UnitSample):
        return data.values
    return np.asarray(data, dtype=float).ravel()


def _squeeze(y: np.ndarray) -> np.ndarray:
    n = len(y)
    return (y * (n - 1) + 0.5) / n


def minmax_transform(values: Sequence[float], squeeze: bool, source: str = "inline") -> UnitSample:
    """
    Standardize a series to the unit interval by (x - min) / (max - min).

    Args:
        values: Raw observations (at least two distinct values)
        squeeze: Apply y -> (y (n - 1) + 0.5) / n so no value is exactly 0 or 1
        source: Provenance label carried by the sample

    Returns:
        UnitSample in input order

    Raises:
        DegenerateRangeError: If the series is constant (or has fewer than two values)
    """
    x = np.asarray(values, dtype=float).ravel()
    lo, hi = (float(np.min(x)), float(np.max(x))) if len(x) else (0.0, 0.0)
    if not hi > lo:
        raise DegenerateRangeError(f"min-max needs at least two distinct values; got {len(x)} value(s) with range 0")

    y = (x - lo) / (hi - lo)
    if squeeze:
        y = _squeeze(y)
        logger.warning(f"Squeezed {len(y)} min-max values away from 0 and 1")
    logger.info(f"Min-max transformed {len(y)} values from {source} (min={lo}, max={hi})")
    return UnitSample(values=y, squeezed=squeeze, source=source)


def squeeze_boundary(sample: UnitSample) -> UnitSample:
    """
    Squeeze a sample already on [0, 1] when it touches either boundary.

    Samples strictly inside (0, 1) are returned unchanged.
    """
    if not (sample.has_zero or sample.has_one):
        return sample
    logger.warning(f"Squeezed {sample.n} values from {sample.source} away from 0 and 1")
    return UnitSample(values=_squeeze(sample.values), squeezed=True, source=sample.source)


def to_unit_sample(values: Sequence[float], source: str = "inline") -> UnitSample:
    """
    Wrap observations that should already lie on [0, 1].

    Raises:
        DomainError: Naming the first index outside [0, 1]
    """
    arr = np.asarray(values, dtype=float).ravel()
    bad = _first_outside(arr)
    if bad is not None:
        raise DomainError(
            f"{source}: value {arr[bad]} at index {bad} is outside [0, 1]; use --minmax to standardize raw data"
        )
    return UnitSample(values=arr, source=source)
