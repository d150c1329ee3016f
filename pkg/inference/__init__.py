"""
Alpha-Unit estimation and competitor model selection.
"""

from inference.estimators import (
    EstimationMethod,
    FitResult,
    InformationCriteria,
    SufficientStat,
    delta_ci,
    fisher_information,
    fit_alpha_unit,
    information_criteria,
    log_likelihood,
    mle_alpha,
    pivot_wn,
    sufficient_statistic,
    umvue_alpha,
    umvue_factor,
    wald_ci,
)
from inference.model_selection import CompetitorFit, compare_models, comparison_frame, fit_model

__all__ = [
    "EstimationMethod",
    "FitResult",
    "InformationCriteria",
    "SufficientStat",
    "delta_ci",
    "fisher_information",
    "fit_alpha_unit",
    "information_criteria",
    "log_likelihood",
    "mle_alpha",
    "pivot_wn",
    "sufficient_statistic",
    "umvue_alpha",
    "umvue_factor",
    "wald_ci",
    "CompetitorFit",
    "compare_models",
    "comparison_frame",
    "fit_model",
]
