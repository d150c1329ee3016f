"""
Alpha-Unit Estimation

Inference for the Alpha-Unit parameter from a sample on (0, 1]:

- T = sum (ln x_i)^2 is sufficient and complete; T / alpha^2 ~ chi-square(3n)
- MLE: sqrt(T / (3n))
- UMVUE: Gamma(3n/2) / (sqrt(2) Gamma((3n+1)/2)) sqrt(T), computed in log space
- Fisher information 6n / alpha^2, giving se = alpha / sqrt(6n)
- Wald interval alpha -/+ z se, and the delta-method interval
  [alpha e^{-z/sqrt(6n)}, alpha e^{z/sqrt(6n)}] which is always positive
- Log-likelihood, AIC and BIC

Closed-form estimators accept observations equal to 1 (they add nothing to T);
likelihood-based quantities do not, because the density vanishes there.
"""

import logging
import math
from enum import Enum
from typing import NamedTuple, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from config.settings import settings
from datasets.unit_sample import UnitSample, as_values
from distributions.alpha_unit import AlphaUnitParams, au_log_pdf
from errors import BoundaryLikelihoodError, DegenerateSampleError, DomainError
from numerics.special import log_gamma, std_normal_quantile

logger = logging.getLogger(__name__)

SampleLike = Union[UnitSample, np.ndarray, list, tuple]
Interval = Tuple[float, float]


class EstimationMethod(str, Enum):
    MLE = "MLE"
    UMVUE = "UMVUE"


class SufficientStat(BaseModel):
    """T = sum (ln x_i)^2 over n observations."""

    model_config = ConfigDict(frozen=True)

    t_value: float = Field(ge=0.0)
    n: int = Field(ge=1)


class InformationCriteria(NamedTuple):
    aic: float
    bic: float


class FitResult(BaseModel):
    """Point estimate, standard error, both intervals and likelihood summaries."""

    model_config = ConfigDict(frozen=True)

    alpha_hat: float = Field(gt=0.0)
    method: EstimationMethod
    se: float = Field(gt=0.0)
    ci_wald: Interval
    ci_delta: Interval
    conf_level: float = Field(gt=0.0, lt=1.0)
    loglik: float
    aic: float
    bic: float
    n: int = Field(ge=1)

    @model_validator(mode="after")
    def check_delta_interval(self) -> "FitResult":
        lo, hi = self.ci_delta
        if not (0.0 < lo <= self.alpha_hat <= hi):
            raise ValueError(f"delta interval {self.ci_delta} must be positive and contain {self.alpha_hat}")
        return self


# ============================================================================
# Validation Helpers
# ============================================================================

def _check_alpha(alpha: float, name: str = "alpha") -> None:
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise DomainError(f"{name} must be positive and finite, got {alpha}")


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"sample size must be at least 1, got {n}")


def _z_value(conf_level: float) -> float:
    if not 0.0 < conf_level < 1.0:
        raise DomainError(f"conf_level must lie in (0, 1), got {conf_level}")
    return float(std_normal_quantile(1.0 - (1.0 - conf_level) / 2.0))


# ============================================================================
# Sufficient Statistic & Point Estimators
# ============================================================================

def sufficient_statistic(data: SampleLike) -> SufficientStat:
    """
    T(X) = sum of (ln x_i)^2.

    Raises:
        DomainError: If the sample is empty or has values outside (0, 1]
    """
    x = as_values(data)
    if len(x) == 0:
        raise DomainError("sufficient statistic of an empty sample")
    if not np.all((x > 0.0) & (x <= 1.0)):
        raise DomainError("closed-form estimators need observations in (0, 1]")
    log_x = np.log(x)
    return SufficientStat(t_value=float(np.dot(log_x, log_x)), n=len(x))


def _informative_statistic(data: SampleLike) -> SufficientStat:
    stat = sufficient_statistic(data)
    if stat.t_value == 0.0:
        raise DegenerateSampleError(f"all {stat.n} observations equal 1; alpha cannot be estimated")
    return stat


def umvue_factor(n: int) -> float:
    """Gamma(3n/2) / (sqrt(2) Gamma((3n+1)/2)); the UMVUE is this times sqrt(T)."""
    _check_n(n)
    return math.exp(log_gamma(1.5 * n) - 0.5 * math.log(2.0) - log_gamma(1.5 * n + 0.5))


def mle_alpha(data: SampleLike) -> float:
    """Maximum likelihood estimate sqrt(T / (3n))."""
    stat = _informative_statistic(data)
    return math.sqrt(stat.t_value / (3.0 * stat.n))


def umvue_alpha(data: SampleLike) -> float:
    """Unbiased minimum-variance estimate umvue_factor(n) sqrt(T)."""
    stat = _informative_statistic(data)
    return umvue_factor(stat.n) * math.sqrt(stat.t_value)


# ============================================================================
# Information & Intervals
# ============================================================================

def fisher_information(alpha: float, n: int) -> float:
    """I(alpha) = 6n / alpha^2."""
    _check_alpha(alpha)
    _check_n(n)
    return 6.0 * n / (alpha * alpha)


def wald_ci(alpha_hat: float, n: int, conf_level: float) -> Interval:
    """Symmetric interval alpha_hat -/+ z alpha_hat / sqrt(6n); the lower end may be negative."""
    _check_alpha(alpha_hat, "alpha_hat")
    _check_n(n)
    half_width = _z_value(conf_level) * alpha_hat / math.sqrt(6.0 * n)
    return (alpha_hat - half_width, alpha_hat + half_width)


def delta_ci(alpha_hat: float, n: int, conf_level: float) -> Interval:
    """Log-scale interval [alpha_hat e^{-z/sqrt(6n)}, alpha_hat e^{z/sqrt(6n)}]."""
    _check_alpha(alpha_hat, "alpha_hat")
    _check_n(n)
    spread = _z_value(conf_level) / math.sqrt(6.0 * n)
    return (alpha_hat * math.exp(-spread), alpha_hat * math.exp(spread))


# ============================================================================
# Likelihood
# ============================================================================

def log_likelihood(data: SampleLike, alpha: float) -> float:
    """
    Sum of Alpha-Unit log-densities, normalizing constants included.

    Raises:
        BoundaryLikelihoodError: If any observation equals 1
        DomainError: If alpha is invalid or an observation lies outside (0, 1]
    """
    _check_alpha(alpha)
    x = as_values(data)
    if np.any(x == 1.0):
        count = int(np.sum(x == 1.0))
        raise BoundaryLikelihoodError(
            f"{count} observation(s) equal 1, where the Alpha-Unit density is 0; "
            f"apply the boundary squeeze (--squeeze) before likelihood-based fitting"
        )
    return float(np.sum(au_log_pdf(x, AlphaUnitParams(alpha=alpha))))


def information_criteria(loglik: float, n_params: int, n: int) -> InformationCriteria:
    """AIC = 2p - 2 loglik and BIC = p ln(n) - 2 loglik."""
    _check_n(n)
    return InformationCriteria(aic=2.0 * n_params - 2.0 * loglik, bic=n_params * math.log(n) - 2.0 * loglik)


def pivot_wn(data: SampleLike, alpha_true: float) -> float:
    """T / alpha_true^2, a chi-square(3n) draw under AU(alpha_true) data."""
    _check_alpha(alpha_true, "alpha_true")
    return sufficient_statistic(data).t_value / (alpha_true * alpha_true)


# ============================================================================
# Full Fit
# ============================================================================

def fit_alpha_unit(
    data: SampleLike,
    method: EstimationMethod = EstimationMethod.MLE,
    conf_level: Optional[float] = None,
) -> FitResult:
    """
    Estimate alpha and summarize the fit.

    Args:
        data: Observations strictly inside (0, 1)
        method: Point estimator (MLE or UMVUE)
        conf_level: Interval confidence level (defaults to settings.default_conf_level)

    Returns:
        FitResult with se = alpha_hat / sqrt(6n), Wald and delta intervals,
        log-likelihood at alpha_hat, AIC and BIC

    Raises:
        BoundaryLikelihoodError: If any observation equals 1
        DegenerateSampleError: If T = 0
    """
    conf_level = settings.default_conf_level if conf_level is None else conf_level
    method = EstimationMethod(method)
    estimator = mle_alpha if method is EstimationMethod.MLE else umvue_alpha

    alpha_hat = estimator(data)
    n = len(as_values(data))
    loglik = log_likelihood(data, alpha_hat)
    criteria = information_criteria(loglik, 1, n)

    logger.info(f"Fitted AU by {method.value}: alpha={alpha_hat:.6g} (n={n}, loglik={loglik:.6g})")
    return FitResult(
        alpha_hat=alpha_hat,
        method=method,
        se=alpha_hat / math.sqrt(6.0 * n),
        ci_wald=wald_ci(alpha_hat, n, conf_level),
        ci_delta=delta_ci(alpha_hat, n, conf_level),
        conf_level=conf_level,
        loglik=loglik,
        aic=criteria.aic,
        bic=criteria.bic,
        n=n,
    )
