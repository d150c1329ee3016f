"""
Monte Carlo Study

Bias, mean squared error and delta-method interval length of the MLE and the
UMVUE over a grid of (alpha, n) cells, plus the interquartile range of the
per-repetition differences MLE - UMVUE pooled over alpha for each n.

Every repetition draws from its own RandomStream keyed by
(cell index << 32) | repetition, so any cell can be recomputed alone and cells
can run in worker processes. Results are always reduced in cell order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, field_validator, model_validator

from config.settings import settings
from distributions.alpha_unit import AlphaUnitParams
from errors import DomainError
from inference.estimators import EstimationMethod, delta_ci, mle_alpha, umvue_alpha
from sampling.generators import sample_au
from sampling.streams import RandomStream

logger = logging.getLogger(__name__)

Estimator = Callable[[np.ndarray], float]

DEFAULT_ALPHAS = [0.1, 0.3, 0.5, 0.7, 1.1, 1.5]
DEFAULT_NS = [100, 200, 500]
REPETITION_BITS = 32


class SimConfig(BaseModel):
    """Grid, repetition count, interval level and master seed of one study."""

    model_config = ConfigDict(frozen=True)

    alphas: List[PositiveFloat] = Field(default_factory=lambda: list(DEFAULT_ALPHAS))
    ns: List[int] = Field(default_factory=lambda: list(DEFAULT_NS))
    repetitions: int = Field(default=1000, ge=2, lt=2 ** REPETITION_BITS)
    conf_level: float = Field(default_factory=lambda: settings.default_conf_level, gt=0.0, lt=1.0)
    master_seed: int = Field(default_factory=lambda: settings.default_seed, ge=0)

    @field_validator("alphas", "ns")
    @classmethod
    def non_empty(cls, v: list) -> list:
        if not v:
            raise ValueError("grid must not be empty")
        return v

    @field_validator("ns")
    @classmethod
    def positive_sizes(cls, v: List[int]) -> List[int]:
        if any(n < 1 for n in v):
            raise ValueError(f"sample sizes must be positive, got {v}")
        return v

    def cells(self) -> List[Tuple[int, float, int]]:
        """(cell index, alpha, n) in report order: n blocks, alphas within."""
        return [
            (i * len(self.alphas) + j, alpha, n)
            for i, n in enumerate(self.ns)
            for j, alpha in enumerate(self.alphas)
        ]


class SimCellResult(BaseModel):
    """Summary of one estimator in one (alpha, n) cell."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    n: int
    method: EstimationMethod
    avg_estimate: float
    bias: float
    mse: float
    ci_length: Optional[float] = None

    @model_validator(mode="after")
    def check_mse(self) -> "SimCellResult":
        if self.mse < self.bias ** 2 * (1.0 - 1e-12):
            raise ValueError(f"mse {self.mse} below squared bias {self.bias ** 2}")
        return self


class MonteCarloReport(BaseModel):
    """Cell summaries and the IQR of pooled MLE - UMVUE differences per n."""

    model_config = ConfigDict(frozen=True)

    config: SimConfig
    cells: List[SimCellResult]
    iqr_by_n: Dict[int, float]


# ============================================================================
# Cell Computation
# ============================================================================

def stream_id(cell_index: int, repetition: int) -> int:
    return (cell_index << REPETITION_BITS) | repetition


def _summarize(
    estimates: np.ndarray, alpha: float, n: int, method: EstimationMethod, ci_length: Optional[float]
) -> SimCellResult:
    errors = estimates - alpha
    return SimCellResult(
        alpha=alpha,
        n=n,
        method=method,
        avg_estimate=float(np.mean(estimates)),
        bias=float(np.mean(errors)),
        mse=float(np.mean(errors * errors)),
        ci_length=ci_length,
    )


def run_cell(
    cell_index: int,
    alpha: float,
    n: int,
    config: SimConfig,
    estimators: Optional[Dict[EstimationMethod, Estimator]] = None,
) -> Tuple[List[SimCellResult], np.ndarray]:
    """
    Run every repetition of one cell.

    Returns:
        ([MLE summary, UMVUE summary], per-repetition MLE - UMVUE differences)
    """
    estimators = estimators or {EstimationMethod.MLE: mle_alpha, EstimationMethod.UMVUE: umvue_alpha}
    params = AlphaUnitParams(alpha=alpha)
    mle = np.empty(config.repetitions)
    umvue = np.empty(config.repetitions)
    for rep in range(config.repetitions):
        stream = RandomStream(config.master_seed, stream_id(cell_index, rep))
        x = sample_au(params, stream, n).values
        mle[rep] = estimators[EstimationMethod.MLE](x)
        umvue[rep] = estimators[EstimationMethod.UMVUE](x)

    # Mean upper limit minus mean lower limit
    limits = np.array([delta_ci(a, n, config.conf_level) if a > 0 else (0.0, 0.0) for a in mle])
    ci_length = float(np.mean(limits[:, 1]) - np.mean(limits[:, 0]))

    summaries = [
        _summarize(mle, alpha, n, EstimationMethod.MLE, ci_length),
        _summarize(umvue, alpha, n, EstimationMethod.UMVUE, None),
    ]
    logger.debug(f"Cell {cell_index} (alpha={alpha}, n={n}) done: MLE mse={summaries[0].mse:.3g}")
    return summaries, mle - umvue


def iqr_of_differences(differences: np.ndarray) -> float:
    """Interquartile range with linear interpolation between order statistics."""
    q1, q3 = np.percentile(differences, [25.0, 75.0], method="linear")
    return float(q3 - q1)


# ============================================================================
# Study
# ============================================================================

def simulate(
    config: SimConfig,
    estimators: Optional[Dict[EstimationMethod, Estimator]] = None,
    workers: Optional[int] = None,
) -> MonteCarloReport:
    """
    Run the whole grid.

    Args:
        config: Study configuration
        estimators: Replacement estimators keyed by method (forces serial execution)
        workers: Worker processes (defaults to settings.simulation_workers)

    Returns:
        MonteCarloReport, identical for identical configs
    """
    workers = settings.simulation_workers if workers is None else workers
    if workers < 1:
        raise DomainError(f"workers must be at least 1, got {workers}")
    cells = config.cells()
    logger.info(
        f"Monte Carlo: {len(cells)} cells x {config.repetitions} repetitions "
        f"(seed={config.master_seed}, workers={workers})"
    )

    results: Dict[int, Tuple[List[SimCellResult], np.ndarray]] = {}
    if workers == 1 or estimators is not None:
        for cell_index, alpha, n in cells:
            results[cell_index] = run_cell(cell_index, alpha, n, config, estimators)
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {
                executor.submit(run_cell, cell_index, alpha, n, config): cell_index
                for cell_index, alpha, n in cells
            }
            for future in as_completed(futures):
                results[futures[future]] = future.result()

    summaries: List[SimCellResult] = []
    pooled: Dict[int, List[np.ndarray]] = {n: [] for n in config.ns}
    for cell_index, _, n in cells:
        cell_summaries, differences = results[cell_index]
        summaries.extend(cell_summaries)
        pooled[n].append(differences)

    iqr_by_n = {n: iqr_of_differences(np.concatenate(parts)) for n, parts in pooled.items()}
    logger.info(f"Monte Carlo finished; IQR of MLE - UMVUE by n: {iqr_by_n}")
    return MonteCarloReport(config=config, cells=summaries, iqr_by_n=iqr_by_n)


def run_monte_carlo(
    config: SimConfig, estimators: Optional[Dict[EstimationMethod, Estimator]] = None
) -> List[SimCellResult]:
    """Cell summaries of the study, MLE then UMVUE within each cell."""
    return simulate(config, estimators).cells


def iqr_of_estimator_differences(config: SimConfig) -> Dict[int, float]:
    """IQR of pooled MLE - UMVUE differences for each sample size."""
    return simulate(config).iqr_by_n


def report_frame(cells: List[SimCellResult]) -> pd.DataFrame:
    """One row per (n, alpha, method)."""
    return pd.DataFrame(
        [
            {
                "n": cell.n,
                "alpha": cell.alpha,
                "method": cell.method.value,
                "avg_estimate": cell.avg_estimate,
                "bias": cell.bias,
                "mse": cell.mse,
                "ci_length": cell.ci_length,
            }
            for cell in cells
        ],
        columns=["n", "alpha", "method", "avg_estimate", "bias", "mse", "ci_length"],
    )
