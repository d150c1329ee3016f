"""
Alpha-Unit control charts.
"""

from spc.control_chart import (
    ChartEvaluation,
    ChartLimits,
    ChartMethod,
    ChartSpec,
    chart_frame,
    control_limits,
    evaluate_series,
)

__all__ = [
    "ChartEvaluation",
    "ChartLimits",
    "ChartMethod",
    "ChartSpec",
    "chart_frame",
    "control_limits",
    "evaluate_series",
]
