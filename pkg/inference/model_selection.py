"""
Model Selection

Numerical maximum likelihood for every registered unit family, and the
AIC/BIC ranking used to compare them on one sample.

Key Features:
- Nelder-Mead search on the unconstrained scale (log for positive parameters,
  logit for unit-interval ones), so fitted parameters never leave their domains
- Each search is restarted once from its own optimum; a fit is converged when
  the restart changes the log-likelihood by at most 1e-10 relative
- Unconverged searches are retried from perturbed starts with tenacity;
  exhausting the retries is reported through the converged flag, never raised
- Standard errors from the inverse of a central finite-difference observed
  information matrix; dropped with a warning when it is not positive definite
- Fits drifting towards a domain edge are flagged at_boundary
"""

import logging
import math
from typing import Dict, Iterable, List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict
from scipy import optimize
from tenacity import RetryError, Retrying, retry_if_exception_type, stop_after_attempt

from config.settings import settings
from datasets.unit_sample import UnitSample, as_values
from distributions.base import BaseUnitModel
from distributions.unit_families import get_model
from errors import BoundaryLikelihoodError, DomainError
from inference.estimators import SampleLike, information_criteria

logger = logging.getLogger(__name__)

RELATIVE_LOGLIK_TOL = 1e-10
HESSIAN_RELATIVE_STEP = 1e-5
BOUNDARY_THETA = 9.0
# Offsets added to the unconstrained start on successive attempts
START_PERTURBATIONS = (0.0, 0.5, -0.5, 1.0, -1.0)


class CompetitorFit(BaseModel):
    """Numerical maximum-likelihood fit of one family."""

    model_config = ConfigDict(frozen=True)

    family: str
    param_names: List[str]
    params: List[float]
    se: Optional[List[float]] = None
    loglik: float
    aic: float
    bic: float
    converged: bool
    iterations: int
    at_boundary: bool = False
    n: int
    derived: Dict[str, float] = {}


class _SearchNotConverged(Exception):
    """Raised inside the retry loop; carries the best search so far."""

    def __init__(self, theta: np.ndarray, loglik: float, iterations: int):
        super().__init__(f"loglik {loglik} not stable after {iterations} iterations")
        self.theta = theta
        self.loglik = loglik
        self.iterations = iterations


# ============================================================================
# Likelihood Search
# ============================================================================

def _negative_loglik(model: BaseUnitModel, x: np.ndarray):
    def objective(theta: np.ndarray) -> float:
        params = model.from_unconstrained(theta)
        with np.errstate(all="ignore"):
            value = float(np.sum(model.log_pdf(x, params)))
        return -value if math.isfinite(value) else np.inf

    return objective


def _search(model: BaseUnitModel, x: np.ndarray, start: np.ndarray) -> tuple:
    """Nelder-Mead from start, then once more from the optimum."""
    objective = _negative_loglik(model, x)
    scale = objective(start)
    scale = abs(scale) if math.isfinite(scale) else 1.0
    options = {"maxiter": settings.fit_max_iter, "xatol": 1e-10, "fatol": 1e-13 * max(1.0, scale)}

    first = optimize.minimize(objective, start, method="Nelder-Mead", options=options)
    second = optimize.minimize(objective, first.x, method="Nelder-Mead", options=options)
    iterations = int(first.nit + second.nit)

    loglik = -float(second.fun)
    change = abs(float(second.fun) - float(first.fun))
    stable = math.isfinite(loglik) and change <= RELATIVE_LOGLIK_TOL * max(1.0, abs(loglik))
    if not (stable and second.success):
        raise _SearchNotConverged(second.x, loglik, iterations)
    return second.x, loglik, iterations


def _observed_information(model: BaseUnitModel, x: np.ndarray, params: np.ndarray) -> np.ndarray:
    """Minus the central finite-difference Hessian of the log-likelihood."""
    p = len(params)
    h = HESSIAN_RELATIVE_STEP * np.maximum(np.abs(params), 1e-8)

    def loglik(shift: np.ndarray) -> float:
        return model.log_likelihood(x, params + shift)

    f0 = loglik(np.zeros(p))
    hessian = np.empty((p, p))
    for i in range(p):
        ei = np.zeros(p)
        ei[i] = h[i]
        hessian[i, i] = (loglik(ei) - 2.0 * f0 + loglik(-ei)) / (h[i] * h[i])
        for j in range(i):
            ej = np.zeros(p)
            ej[j] = h[j]
            hessian[i, j] = hessian[j, i] = (
                loglik(ei + ej) - loglik(ei - ej) - loglik(-ei + ej) + loglik(-ei - ej)
            ) / (4.0 * h[i] * h[j])
    return -hessian


def _standard_errors(model: BaseUnitModel, x: np.ndarray, params: np.ndarray) -> Optional[List[float]]:
    try:
        info = _observed_information(model, x, params)
        np.linalg.cholesky(info)
    except DomainError:
        logger.warning(f"{model.label}: finite-difference steps leave the parameter domain; no standard errors")
        return None
    except np.linalg.LinAlgError:
        logger.warning(f"{model.label}: observed information is not positive definite; no standard errors")
        return None
    return [float(s) for s in np.sqrt(np.diag(np.linalg.inv(info)))]


def _check_fit_data(data: SampleLike) -> np.ndarray:
    x = as_values(data)
    if len(x) == 0:
        raise DomainError("cannot fit an empty sample")
    if np.any((x == 0.0) | (x == 1.0)):
        raise BoundaryLikelihoodError(
            "likelihood fitting needs observations strictly inside (0, 1); "
            "apply the boundary squeeze (--squeeze) first"
        )
    return BaseUnitModel.check_open_unit(x)


def fit_model(family: str, data: SampleLike) -> CompetitorFit:
    """
    Fit one family by numerical maximum likelihood.

    Args:
        family: Family id or label (e.g. "kum", "BE")
        data: Observations strictly inside (0, 1)

    Returns:
        CompetitorFit with parameters, standard errors, log-likelihood, AIC and BIC

    Raises:
        BoundaryLikelihoodError: If the data contain 0 or 1
        DomainError: If the family is unknown or data lie outside [0, 1]
    """
    model = get_model(family)
    x = _check_fit_data(data)
    start = model.to_unconstrained(model.initial_guess(x))
    logger.info(f"Fitting {model.label} to {len(x)} observations")

    attempt_number = 0
    try:
        for attempt in Retrying(
            stop=stop_after_attempt(settings.fit_restarts),
            retry=retry_if_exception_type(_SearchNotConverged),
        ):
            with attempt:
                offset = START_PERTURBATIONS[attempt_number % len(START_PERTURBATIONS)]
                attempt_number += 1
                theta, loglik, iterations = _search(model, x, start + offset)
        converged = True
    except RetryError as e:
        failure = e.last_attempt.exception()
        theta, loglik, iterations = failure.theta, failure.loglik, failure.iterations
        converged = False
        logger.warning(f"{model.label}: likelihood search did not converge after {attempt_number} attempt(s)")

    params = model.from_unconstrained(theta)
    at_boundary = bool(np.any(np.abs(theta) > BOUNDARY_THETA))
    if at_boundary:
        logger.warning(
            f"{model.label}: estimate {dict(zip(model.spec.param_names, params))} is near a domain edge"
        )

    criteria = information_criteria(loglik, model.n_params, len(x))
    fit = CompetitorFit(
        family=model.label,
        param_names=list(model.spec.param_names),
        params=[float(v) for v in params],
        se=_standard_errors(model, x, params) if math.isfinite(loglik) else None,
        loglik=loglik,
        aic=criteria.aic,
        bic=criteria.bic,
        converged=converged,
        iterations=iterations,
        at_boundary=at_boundary,
        n=len(x),
        derived=model.derived_parameters(params),
    )
    logger.info(f"{model.label}: loglik={loglik:.6g}, AIC={fit.aic:.6g}, converged={converged}")
    return fit


# ============================================================================
# Ranking
# ============================================================================

def compare_models(data: SampleLike, families: Iterable[str]) -> List[CompetitorFit]:
    """
    Fit every family and rank by AIC, then BIC, then family label.

    Raises:
        DomainError: If no family is given
    """
    families = list(dict.fromkeys(f.strip().lower() for f in families))
    if not families:
        raise DomainError("model comparison needs at least one family")

    fits = [fit_model(family, data) for family in families]
    ranked = sorted(fits, key=lambda fit: (fit.aic, fit.bic, fit.family))
    unconverged = [fit.family for fit in ranked if not fit.converged]
    if unconverged:
        logger.warning(f"Ranking includes unconverged fits: {', '.join(unconverged)}")
    return ranked


def _format_values(names: List[str], values: Optional[List[float]]) -> str:
    if values is None:
        return ""
    return "; ".join(f"{name}={value:.6g}" for name, value in zip(names, values))


def comparison_frame(fits: List[CompetitorFit]) -> pd.DataFrame:
    """Ranked table with one row per family."""
    return pd.DataFrame(
        [
            {
                "rank": rank,
                "family": fit.family,
                "params": _format_values(fit.param_names, fit.params),
                "se": _format_values(fit.param_names, fit.se),
                "derived": _format_values(list(fit.derived), list(fit.derived.values())),
                "loglik": fit.loglik,
                "aic": fit.aic,
                "bic": fit.bic,
                "converged": fit.converged,
                "at_boundary": fit.at_boundary,
            }
            for rank, fit in enumerate(fits, start=1)
        ],
        columns=["rank", "family", "params", "se", "derived", "loglik", "aic", "bic", "converged", "at_boundary"],
    )
