"""
Special Functions

Normal density and distribution function, the scaled normal tail (Mills-ratio
kernel), log-gamma and the chi-square distribution function.

The normal distribution function is built on the scaled complementary error
function so that the scaled tail e^{x^2/2}(1 - Phi(x)) shares the same code path
and never forms e^{x^2/2} explicitly. All functions accept scalars or numpy
arrays; scalar input returns a Python float.
"""

import math
from typing import Union

import numpy as np
from scipy import special as sp

from errors import DomainError

ArrayLike = Union[float, np.ndarray]

SQRT_2 = math.sqrt(2.0)
SQRT_2PI = math.sqrt(2.0 * math.pi)
LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def finish_output(values: np.ndarray, scalar: bool) -> ArrayLike:
    """Return a Python float for scalar input, the array otherwise."""
    if scalar:
        return float(values)
    return values


def std_normal_pdf(x: ArrayLike) -> ArrayLike:
    """Standard normal density (1/sqrt(2 pi)) e^{-x^2/2}."""
    arr = np.asarray(x, dtype=float)
    return finish_output(np.exp(-0.5 * arr * arr) / SQRT_2PI, arr.ndim == 0)


def std_normal_logpdf(x: ArrayLike) -> ArrayLike:
    """Log of the standard normal density."""
    arr = np.asarray(x, dtype=float)
    return finish_output(-0.5 * arr * arr - LOG_SQRT_2PI, arr.ndim == 0)


def _upper_tail(arr: np.ndarray) -> np.ndarray:
    """1 - Phi(|x|) evaluated as erfcx(|x|/sqrt 2) e^{-x^2/2} / 2."""
    a = np.abs(arr)
    with np.errstate(over="ignore", invalid="ignore"):
        tail = 0.5 * sp.erfcx(a / SQRT_2) * np.exp(-0.5 * a * a)
    return np.where(np.isinf(a), 0.0, tail)


def std_normal_cdf(x: ArrayLike) -> ArrayLike:
    """
    Standard normal distribution function Phi(x).

    Evaluated from the tail on both sides of zero, so Phi(-x) = 1 - Phi(x)
    holds to rounding.

    Args:
        x: Finite value(s) or +/- infinity

    Returns:
        Phi(x) in [0, 1]
    """
    arr = np.asarray(x, dtype=float)
    tail = _upper_tail(arr)
    cdf = np.where(arr < 0.0, tail, 1.0 - tail)
    return finish_output(cdf, arr.ndim == 0)


def std_normal_quantile(p: ArrayLike) -> ArrayLike:
    """Inverse of Phi; p must lie in (0, 1)."""
    arr = np.asarray(p, dtype=float)
    if np.any((arr <= 0.0) | (arr >= 1.0)):
        raise DomainError(f"normal quantile requires 0 < p < 1, got {p}")
    return finish_output(sp.ndtri(arr), arr.ndim == 0)


def scaled_normal_tail(x: ArrayLike) -> ArrayLike:
    """
    Scaled normal tail e^{x^2/2} (1 - Phi(x)) for x >= 0.

    Equal to erfcx(x/sqrt 2)/2, which stays finite and strictly decreasing for
    arbitrarily large x (it behaves like 1/(x sqrt(2 pi))).

    Args:
        x: Nonnegative value(s)

    Returns:
        The scaled tail, in (0, 0.5]

    Raises:
        DomainError: If any x is negative
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0):
        raise DomainError(f"scaled_normal_tail requires x >= 0, got {x}")
    return finish_output(0.5 * sp.erfcx(arr / SQRT_2), arr.ndim == 0)


def log_gamma(x: ArrayLike) -> ArrayLike:
    """ln Gamma(x) for x > 0."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0.0):
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return finish_output(sp.gammaln(arr), arr.ndim == 0)


def chi_square_cdf(w: ArrayLike, dof: int) -> ArrayLike:
    """
    Chi-square distribution function with `dof` degrees of freedom.

    This is the regularized lower incomplete gamma function P(dof/2, w/2).

    Raises:
        DomainError: If dof < 1 or any w is negative
    """
    if dof < 1:
        raise DomainError(f"chi-square degrees of freedom must be >= 1, got {dof}")
    arr = np.asarray(w, dtype=float)
    if np.any(arr < 0.0):
        raise DomainError(f"chi_square_cdf requires w >= 0, got {w}")
    return finish_output(sp.gammainc(0.5 * dof, 0.5 * arr), arr.ndim == 0)
