"""
Alpha-Unit Control Charts

Control limits for monitoring a unit-valued process that is AU(alpha) when in
control, and evaluation of observation series against them.

Two constructions carry the same in-control coverage 1 - pi:

- EQUAL_TAILED: LCL = Q(pi/2), UCL = Q(1 - pi/2)
- HDI: the highest-density interval of mass 1 - pi (equal endpoint densities,
  never wider than the equal-tailed interval)

The centerline is the AU mean in both cases. An observation signals an alarm
when it lies strictly below LCL or strictly above UCL.
"""

import logging
from enum import Enum
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.settings import settings
from distributions.alpha_unit import AlphaUnitParams, au_hdi, au_mean, au_quantile
from errors import DomainError
from numerics.roots import Tolerance

logger = logging.getLogger(__name__)


class ChartMethod(str, Enum):
    EQUAL_TAILED = "tails"
    HDI = "hdi"


class ChartSpec(BaseModel):
    """In-control alpha, false-alarm probability and limit construction."""

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0.0, allow_inf_nan=False)
    false_alarm: float = Field(default_factory=lambda: settings.default_false_alarm, gt=0.0, lt=1.0)
    method: ChartMethod = ChartMethod.HDI


class ChartLimits(BaseModel):
    model_config = ConfigDict(frozen=True)

    lcl: float
    cl: float
    ucl: float
    method: ChartMethod

    @model_validator(mode="after")
    def check_order(self) -> "ChartLimits":
        if not (0.0 < self.lcl < self.ucl <= 1.0):
            raise ValueError(f"limits must satisfy 0 < lcl < ucl <= 1, got ({self.lcl}, {self.ucl})")
        return self


class ChartEvaluation(BaseModel):
    model_config = ConfigDict(frozen=True)

    alarm_indices: List[int]
    alarm_count: int
    alarm_rate: float
    n: int


def control_limits(spec: ChartSpec, tol: Optional[Tolerance] = None) -> ChartLimits:
    """
    Compute LCL, CL and UCL for a chart specification.

    Raises:
        NumericalError: If a quantile or HDI root search fails
    """
    params = AlphaUnitParams(alpha=spec.alpha)
    if spec.method is ChartMethod.EQUAL_TAILED:
        lcl = au_quantile(spec.false_alarm / 2.0, params, tol)
        ucl = au_quantile(1.0 - spec.false_alarm / 2.0, params, tol)
    else:
        interval = au_hdi(1.0 - spec.false_alarm, params, tol)
        lcl, ucl = interval.lower, interval.upper

    limits = ChartLimits(lcl=lcl, cl=au_mean(params), ucl=ucl, method=spec.method)
    logger.info(
        f"{spec.method.name} limits for alpha={spec.alpha}, pi={spec.false_alarm}: "
        f"LCL={limits.lcl:.6g}, CL={limits.cl:.6g}, UCL={limits.ucl:.6g}"
    )
    return limits


def _check_series(series: Sequence[float]) -> np.ndarray:
    values = np.asarray(series, dtype=float).ravel()
    outside = ~((values > 0.0) & (values <= 1.0))
    if np.any(outside):
        index = int(np.argmax(outside))
        raise DomainError(f"series value {values[index]} at index {index} is outside (0, 1]")
    return values


def _alarm_mask(values: np.ndarray, limits: ChartLimits) -> np.ndarray:
    return (values < limits.lcl) | (values > limits.ucl)


def evaluate_series(series: Sequence[float], limits: ChartLimits) -> ChartEvaluation:
    """
    Flag every value strictly outside [LCL, UCL].

    Args:
        series: Observations in (0, 1]
        limits: Control limits

    Returns:
        ChartEvaluation with 0-based alarm positions in series order
    """
    values = _check_series(series)
    alarms = np.flatnonzero(_alarm_mask(values, limits))
    n = len(values)
    evaluation = ChartEvaluation(
        alarm_indices=[int(i) for i in alarms],
        alarm_count=len(alarms),
        alarm_rate=len(alarms) / n if n else 0.0,
        n=n,
    )
    logger.info(f"Evaluated {n} observations: {evaluation.alarm_count} alarm(s)")
    return evaluation


def chart_frame(series: Sequence[float], limits: ChartLimits) -> pd.DataFrame:
    """Chart-ready rows (index, value, alarm)."""
    values = _check_series(series)
    return pd.DataFrame(
        {"index": np.arange(len(values)), "value": values, "alarm": _alarm_mask(values, limits)}
    )
