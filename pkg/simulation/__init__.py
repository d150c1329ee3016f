"""
Monte Carlo study of the Alpha-Unit estimators.
"""

from simulation.monte_carlo import (
    MonteCarloReport,
    SimCellResult,
    SimConfig,
    iqr_of_differences,
    iqr_of_estimator_differences,
    report_frame,
    run_monte_carlo,
    simulate,
)

__all__ = [
    "MonteCarloReport",
    "SimCellResult",
    "SimConfig",
    "iqr_of_differences",
    "iqr_of_estimator_differences",
    "report_frame",
    "run_monte_carlo",
    "simulate",
]
