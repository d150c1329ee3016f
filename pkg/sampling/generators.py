"""
Sample Generators

Seeded generation for the chi-square(3), BN(1), BHN(alpha) and AU(alpha) laws,
all through one pipeline:

1. W = Z^2 - 2 ln U  (chi-square(1) plus chi-square(2) is chi-square(3))
2. B = V sqrt(W) with V = +1 when a fresh uniform is <= 1/2, else -1
3. Q = alpha |B|
4. X = exp(-Q)

Each stage draws the same numbers from the stream as the stage before it, so
for equal stream state sample_au equals exp(-alpha |sample_bn1|) elementwise.
"""

import logging
from typing import Any, Dict

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from distributions.alpha_unit import LOG_SMALLEST_X, SMALLEST_X, AlphaUnitParams
from errors import DomainError
from sampling.streams import RandomStream

logger = logging.getLogger(__name__)

# Supports by distribution tag: (lower, upper, lower_included, upper_included)
SUPPORTS = {
    "CHI2_3": (0.0, np.inf, False, False),
    "BN1": (-np.inf, np.inf, False, False),
    "BHN": (0.0, np.inf, False, False),
    "AU": (0.0, 1.0, False, True),
}


class SampleBatch(BaseModel):
    """Values drawn from one tagged distribution."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    values: np.ndarray
    distribution_tag: str
    params: Dict[str, Any] = {}

    @model_validator(mode="after")
    def check_support(self) -> "SampleBatch":
        """Ensure every value lies in the tagged distribution's support."""
        lo, hi, lo_closed, hi_closed = SUPPORTS[self.distribution_tag]
        above = self.values >= lo if lo_closed else self.values > lo
        below = self.values <= hi if hi_closed else self.values < hi
        if not np.all(above & below):
            raise ValueError(f"{self.distribution_tag} batch has values outside its support")
        return self

    @property
    def n(self) -> int:
        return len(self.values)


def _check_count(n: int) -> None:
    if n < 1:
        raise DomainError(f"sample size must be at least 1, got {n}")


def _chi2_3_values(stream: RandomStream, n: int) -> np.ndarray:
    z = stream.standard_normal(n)
    u = stream.uniform(n)
    return z * z - 2.0 * np.log(u)


def _bn1_values(stream: RandomStream, n: int) -> np.ndarray:
    magnitude = np.sqrt(_chi2_3_values(stream, n))
    sign = np.where(stream.uniform(n) <= 0.5, 1.0, -1.0)
    return sign * magnitude


def sample_chi2_3(stream: RandomStream, n: int) -> SampleBatch:
    """n chi-square(3) draws as Z^2 - 2 ln U."""
    _check_count(n)
    return SampleBatch(values=_chi2_3_values(stream, n), distribution_tag="CHI2_3", params={"dof": 3})


def sample_bn1(stream: RandomStream, n: int) -> SampleBatch:
    """n BN(1) draws: random sign times the root of a chi-square(3) draw."""
    _check_count(n)
    return SampleBatch(values=_bn1_values(stream, n), distribution_tag="BN1", params={"k": 1})


def sample_bhn(alpha: float, stream: RandomStream, n: int) -> SampleBatch:
    """n Bimodal Half-Normal draws alpha |B|, B ~ BN(1)."""
    if not (alpha > 0.0 and np.isfinite(alpha)):
        raise DomainError(f"alpha must be positive and finite, got {alpha}")
    _check_count(n)
    values = alpha * np.abs(_bn1_values(stream, n))
    return SampleBatch(values=values, distribution_tag="BHN", params={"alpha": alpha})


def sample_au(params: AlphaUnitParams, stream: RandomStream, n: int) -> SampleBatch:
    """
    n Alpha-Unit draws X = exp(-alpha |B|).

    Draws whose exp(-alpha |B|) underflows are floored at the smallest positive
    double, with a warning naming how many were affected.

    Args:
        params: Alpha-Unit parameters
        stream: Random stream (consumed)
        n: Number of draws

    Returns:
        SampleBatch tagged "AU" with values in (0, 1]
    """
    bhn = sample_bhn(params.alpha, stream, n)
    underflow = bhn.values > -LOG_SMALLEST_X
    if underflow.any():
        logger.warning(
            f"{int(underflow.sum())} of {n} AU(alpha={params.alpha}) draws underflow; "
            f"floored at {SMALLEST_X:.6g}"
        )
    values = np.maximum(np.exp(-bhn.values), SMALLEST_X)
    logger.debug(f"Drew {n} AU(alpha={params.alpha}) values from {stream}")
    return SampleBatch(values=values, distribution_tag="AU", params={"alpha": params.alpha})
