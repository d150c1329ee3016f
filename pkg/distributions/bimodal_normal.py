"""
Bimodal Normal Family

The Bimodal Normal distribution of order k, BN(k), has density
b^{2k} phi(b) / c with c = 1 * 3 * ... * (2k - 1). Its square is chi-square
with 2k + 1 degrees of freedom, which gives the distribution function and the
sampling route used for the Alpha-Unit model.

The Bimodal Half-Normal BHN(alpha) is the law of alpha |B| for B ~ BN(1).
"""

import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from errors import DomainError
from numerics.special import ArrayLike, LOG_SQRT_2PI, finish_output, chi_square_cdf, log_gamma

EXACT_NORMALIZER_MAX_K = 50


class BimodalNormal(BaseModel):
    """BN(k) with integer order k >= 1."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)

    def pdf(self, b: ArrayLike) -> ArrayLike:
        return bn_pdf(b, self.k)

    def cdf(self, b: ArrayLike) -> ArrayLike:
        return bn_cdf(b, self.k)

    def modes(self) -> Tuple[float, float]:
        return bn_modes(self.k)


def _check_order(k: int) -> None:
    if k < 1:
        raise DomainError(f"BN order k must be a positive integer, got {k}")


def bn_log_normalizer(k: int) -> float:
    """ln of the double factorial (2k - 1)!! = (2k)! / (2^k k!)."""
    _check_order(k)
    return float(log_gamma(2 * k + 1) - k * math.log(2.0) - log_gamma(k + 1))


def bn_normalizer(k: int) -> float:
    """
    Normalizing constant c = prod_{j=1..k} (2j - 1).

    Exact integer product up to k = 50, log space beyond.
    """
    _check_order(k)
    if k <= EXACT_NORMALIZER_MAX_K:
        return float(math.prod(range(1, 2 * k, 2)))
    return math.exp(bn_log_normalizer(k))


def bn_pdf(b: ArrayLike, k: int) -> ArrayLike:
    """Density b^{2k} phi(b) / c; zero at b = 0 and symmetric in b."""
    log_c = bn_log_normalizer(k)
    arr = np.asarray(b, dtype=float)
    with np.errstate(divide="ignore"):
        log_density = 2 * k * np.log(np.abs(arr)) - 0.5 * arr * arr - LOG_SQRT_2PI - log_c
    density = np.where(arr == 0.0, 0.0, np.exp(log_density))
    return finish_output(density, arr.ndim == 0)


def bn_cdf(b: ArrayLike, k: int) -> ArrayLike:
    """
    Distribution function 1/2 + F_chi2(b^2; 2k+1)/2 for b >= 0, reflected for b < 0.
    """
    _check_order(k)
    arr = np.asarray(b, dtype=float)
    upper = 0.5 + 0.5 * np.asarray(chi_square_cdf(arr * arr, 2 * k + 1))
    cdf = np.where(arr >= 0.0, upper, 1.0 - upper)
    return finish_output(cdf, arr.ndim == 0)


def bn_modes(k: int) -> Tuple[float, float]:
    """The two maximizers -sqrt(2k), +sqrt(2k) of the BN(k) density."""
    _check_order(k)
    m = math.sqrt(2.0 * k)
    return (-m, m)


# =============================================================================
# Bimodal Half-Normal
# =============================================================================

def _check_scale(alpha: float) -> None:
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise DomainError(f"BHN scale alpha must be positive and finite, got {alpha}")


def bhn_pdf(q: ArrayLike, alpha: float) -> ArrayLike:
    """Density (2/alpha) (q/alpha)^2 phi(q/alpha) on q > 0 (zero elsewhere)."""
    _check_scale(alpha)
    arr = np.asarray(q, dtype=float)
    scaled = arr / alpha
    density = np.where(arr > 0.0, 2.0 * np.asarray(bn_pdf(scaled, 1)) / alpha, 0.0)
    return finish_output(density, arr.ndim == 0)


def bhn_cdf(q: ArrayLike, alpha: float) -> ArrayLike:
    """P(alpha |B| <= q) = F_chi2((q/alpha)^2; 3) for q >= 0."""
    _check_scale(alpha)
    arr = np.asarray(q, dtype=float)
    scaled = np.clip(arr, 0.0, None) / alpha
    return finish_output(np.asarray(chi_square_cdf(scaled * scaled, 3)), arr.ndim == 0)
