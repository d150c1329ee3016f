"""
Unit-Interval Families

Concrete models for every family the model-selection workflow compares:
Alpha-Unit, mean-dispersion Beta, Kumaraswamy, Logit-Normal, Simplex,
Unit Half-Normal and Unit-Lindley. Parameterizations are declared in
config/families.yaml; each class only supplies its log-density and a
data-driven starting point.
"""

import logging
import math
from typing import Dict, Sequence, Type

import numpy as np
from scipy import special as sp
from scipy import stats

from distributions.alpha_unit import AlphaUnitParams, au_log_pdf
from distributions.base import BaseUnitModel
from errors import DomainError
from numerics.special import LOG_SQRT_2PI, ArrayLike, finish_output

logger = logging.getLogger(__name__)

# Starting points are kept this far from the parameter-domain edges
START_MARGIN = 1e-3


class AlphaUnitModel(BaseUnitModel):
    """AU(alpha) fitted through the generic likelihood search."""

    family = "au"

    def log_pdf(self, x: np.ndarray, params: np.ndarray) -> np.ndarray:
        return np.asarray(au_log_pdf(x, AlphaUnitParams(alpha=float(params[0]))))

    def initial_guess(self, x: np.ndarray) -> np.ndarray:
        # Root mean square of ln x; the optimum is this value over sqrt(3)
        return np.array([math.sqrt(float(np.mean(np.log(x) ** 2)))])


class BetaModel(BaseUnitModel):
    """Beta with mean mu and dispersion sigma (shapes mu phi, (1-mu) phi, phi = (1-sigma^2)/sigma^2)."""

    family = "be"

    @staticmethod
    def shapes(mu: float, sigma: float) -> tuple:
        phi = (1.0 - sigma * sigma) / (sigma * sigma)
        return mu * phi, (1.0 - mu) * phi

    def log_pdf(self, x: np.ndarray, params: np.ndarray) -> np.ndarray:
        a, b = self.shapes(params[0], params[1])
        return stats.beta.logpdf(x, a, b)

    def initial_guess(self, x: np.ndarray) -> np.ndarray:
        m = float(np.mean(x))
        v = float(np.var(x))
        sigma = math.sqrt(v / (m * (1.0 - m))) if v > 0 else 0.5
        return np.clip([m, sigma], START_MARGIN, 1.0 - START_MARGIN)


class KumaraswamyModel(BaseUnitModel):
    """Kumaraswamy with positive shapes mu and sigma."""

    family = "kum"

    def log_pdf(self, x: np.ndarray, params: np.ndarray) -> np.ndarray:
        a, b = params
        return np.log(a) + np.log(b) + (a - 1.0) * np.log(x) + (b - 1.0) * np.log1p(-(x ** a))

    def initial_guess(self, x: np.ndarray) -> np.ndarray:
        # With the first shape at 1 the second has a closed-form optimum
        b = -len(x) / float(np.sum(np.log1p(-x)))
        return np.array([1.0, max(b, START_MARGIN)])


class LogitNormalModel(BaseUnitModel):
    """logit(X) ~ Normal(logit(mu), sigma^2); mu is the median."""

    family = "logitno"

    def log_pdf(self, x: np.ndarray, params: np.ndarray) -> np.ndarray:
        mu, sigma = params
        z = (sp.logit(x) - sp.logit(mu)) / sigma
        return -0.5 * z * z - LOG_SQRT_2PI - np.log(sigma) - np.log(x) - np.log1p(-x)

    def initial_guess(self, x: np.ndarray) -> np.ndarray:
        y = sp.logit(x)
        mu = float(np.clip(sp.expit(np.mean(y)), START_MARGIN, 1.0 - START_MARGIN))
        return np.array([mu, max(float(np.std(y)), START_MARGIN)])


class SimplexModel(BaseUnitModel):
    """Simplex distribution with mean mu and dispersion sigma."""

    family = "simplex"

    @staticmethod
    def unit_deviance(x: np.ndarray, mu: float) -> np.ndarray:
        return (x - mu) ** 2 / (x * (1.0 - x) * mu * mu * (1.0 - mu) ** 2)

    def log_pdf(self, x: np.ndarray, params: np.ndarray) -> np.ndarray:
        mu, sigma = params
        return (
            -LOG_SQRT_2PI
            - np.log(sigma)
            - 1.5 * (np.log(x) + np.log1p(-x))
            - self.unit_deviance(x, mu) / (2.0 * sigma * sigma)
        )

    def initial_guess(self, x: np.ndarray) -> np.ndarray:
        mu = float(np.clip(np.mean(x), START_MARGIN, 1.0 - START_MARGIN))
        sigma = math.sqrt(float(np.mean(self.unit_deviance(x, mu))))
        return np.array([mu, max(sigma, START_MARGIN)])


class UnitHalfNormalModel(BaseUnitModel):
    """X / (1 - X) is half-normal with scale sigma."""

    family = "uhn"

    def log_pdf(self, x: np.ndarray, params: np.ndarray) -> np.ndarray:
        sigma = params[0]
        y = x / (1.0 - x)
        return 0.5 * math.log(2.0 / math.pi) - np.log(sigma) - 2.0 * np.log1p(-x) - y * y / (2.0 * sigma * sigma)

    def initial_guess(self, x: np.ndarray) -> np.ndarray:
        y = x / (1.0 - x)
        return np.array([math.sqrt(float(np.mean(y * y)))])


class UnitLindleyModel(BaseUnitModel):
    """Unit-Lindley with shape theta; its mean is 1 / (1 + theta)."""

    family = "ulindley"

    def log_pdf(self, x: np.ndarray, params: np.ndarray) -> np.ndarray:
        theta = params[0]
        return 2.0 * np.log(theta) - np.log1p(theta) - 3.0 * np.log1p(-x) - theta * x / (1.0 - x)

    def initial_guess(self, x: np.ndarray) -> np.ndarray:
        # Positive root of ybar theta^2 + (ybar - 1) theta - 2 = 0
        ybar = float(np.mean(x / (1.0 - x)))
        theta = (1.0 - ybar + math.sqrt((ybar - 1.0) ** 2 + 8.0 * ybar)) / (2.0 * ybar)
        return np.array([theta])

    def derived_parameters(self, params: np.ndarray) -> Dict[str, float]:
        return {"mu": 1.0 / (1.0 + float(params[0]))}


# ============================================================================
# Registry
# ============================================================================

FAMILY_MODELS: Dict[str, Type[BaseUnitModel]] = {
    model.family: model
    for model in (
        AlphaUnitModel,
        BetaModel,
        KumaraswamyModel,
        LogitNormalModel,
        SimplexModel,
        UnitHalfNormalModel,
        UnitLindleyModel,
    )
}

FAMILY_IDS = tuple(FAMILY_MODELS)


def get_model(family: str) -> BaseUnitModel:
    """
    Instantiate the model registered under a family id or label.

    Args:
        family: Family id ("be") or report label ("BE"), case-insensitive

    Raises:
        DomainError: If no such family is registered
    """
    key = family.strip().lower()
    if key not in FAMILY_MODELS:
        raise DomainError(f"unknown family '{family}'; choose from {', '.join(FAMILY_IDS)}")
    return FAMILY_MODELS[key]()


def unit_pdf(family: str, params: Sequence[float], x: ArrayLike) -> ArrayLike:
    """Density of the named family at x in (0, 1)."""
    arr = np.asarray(x, dtype=float)
    return finish_output(get_model(family).pdf(arr, params), arr.ndim == 0)
