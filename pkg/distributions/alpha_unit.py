"""
Alpha-Unit Distribution

X = exp(-alpha |B|) with B ~ BN(1) is supported on (0, 1] and has density

    f(x | alpha) = (2 / (x alpha)) (ln x / alpha)^2 phi(ln x / alpha).

This module provides the density and its exponential-family log form, the
distribution function and quantile, raw moments (through the scaled normal
tail, so large r * alpha neither overflows nor cancels), shape summaries, the
mode, the moment-generating function and the highest density interval.

Most quantities are easiest in u = ln(x) / alpha, where x = exp(alpha u) and
f(x) dx = 2 u^2 phi(u) du on u <= 0.
"""

import logging
import math
from typing import NamedTuple, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate

from errors import DomainError
from numerics.roots import Bracket, Tolerance, default_tolerance, find_root
from numerics.special import (
    ArrayLike,
    LOG_SQRT_2PI,
    SQRT_2PI,
    chi_square_cdf,
    finish_output,
    scaled_normal_tail,
    std_normal_cdf,
    std_normal_pdf,
)

logger = logging.getLogger(__name__)

# F(exp(-40 alpha)) underflows for every alpha, so [-40, 0] brackets every p in (0, 1].
QUANTILE_BRACKET = Bracket(lo=-40.0, hi=0.0)

# Above this r * alpha the closed moment form loses digits to cancellation.
MOMENT_SERIES_THRESHOLD = 30.0
MOMENT_SERIES_TERMS = 12

# Outside this range of t the moment series is replaced by quadrature in u.
MGF_SERIES_MIN_T = -5.0
MGF_SERIES_MAX_T = 50.0

# exp(alpha u) below this is floored rather than returned as 0.
SMALLEST_X = float(np.finfo(float).tiny)
LOG_SMALLEST_X = math.log(SMALLEST_X)

# Upper endpoint of the HDI search leaves this fraction of the tail room above it.
HDI_TOP_MARGIN = 1e-9
# Log-density gap reported once the upper endpoint reaches x = 1.
HDI_GAP_CAP = 1e3


# ============================================================================
# Value Objects
# ============================================================================

class AlphaUnitParams(BaseModel):
    """The single positive parameter of AU(alpha)."""

    model_config = ConfigDict(frozen=True)

    alpha: float = Field(gt=0.0, allow_inf_nan=False)


class HdiInterval(BaseModel):
    """Shortest interval [lower, upper] carrying probability `mass`."""

    model_config = ConfigDict(frozen=True)

    lower: float
    upper: float
    mass: float = Field(gt=0.0, lt=1.0)

    @model_validator(mode="after")
    def check_bounds(self) -> "HdiInterval":
        """Ensure 0 < lower < upper <= 1."""
        if not 0.0 < self.lower < self.upper <= 1.0:
            raise ValueError(
                f"HDI bounds must satisfy 0 < lower < upper <= 1, "
                f"got [{self.lower}, {self.upper}]"
            )
        return self

    @property
    def width(self) -> float:
        return self.upper - self.lower


class ExponentialFamilyTerms(NamedTuple):
    """Components of f(x | alpha) = exp(c(alpha) T(x) + d(alpha) + S(x))."""

    c: float
    t: ArrayLike
    d: float
    s: ArrayLike


# ============================================================================
# Domain Helpers
# ============================================================================

def _check_support(x: ArrayLike, include_one: bool = True) -> np.ndarray:
    """Return x as an array after checking it lies in (0, 1] (or (0, 1))."""
    arr = np.asarray(x, dtype=float)
    upper_ok = arr <= 1.0 if include_one else arr < 1.0
    if not np.all((arr > 0.0) & upper_ok):
        interval = "(0, 1]" if include_one else "(0, 1)"
        raise DomainError(f"Alpha-Unit argument must lie in {interval}, got {x}")
    return arr


def _to_u(arr: np.ndarray, params: AlphaUnitParams) -> np.ndarray:
    return np.log(arr) / params.alpha


# ============================================================================
# Density
# ============================================================================

def au_pdf(x: ArrayLike, params: AlphaUnitParams) -> ArrayLike:
    """
    Density of AU(alpha) on 0 < x <= 1.

    Evaluated in log space so very small x does not overflow 1/x; zero at x = 1.

    Raises:
        DomainError: If any x lies outside (0, 1]
    """
    arr = _check_support(x)
    u = _to_u(arr, params)
    with np.errstate(divide="ignore"):
        log_density = (
            math.log(2.0) - np.log(arr) - math.log(params.alpha)
            + 2.0 * np.log(np.abs(u)) - 0.5 * u * u - LOG_SQRT_2PI
        )
    density = np.where(u == 0.0, 0.0, np.exp(log_density))
    return finish_output(density, arr.ndim == 0)


def exponential_family_terms(x: ArrayLike, params: AlphaUnitParams) -> ExponentialFamilyTerms:
    """
    c(alpha) = -1/(2 alpha^2), T(x) = (ln x)^2, d(alpha) = -3 ln alpha and
    S(x) = ln(2 (ln x)^2 / (x sqrt(2 pi))), for 0 < x < 1.
    """
    arr = _check_support(x, include_one=False)
    log_x = np.log(arr)
    t = log_x * log_x
    s = math.log(2.0) + 2.0 * np.log(-log_x) - log_x - LOG_SQRT_2PI
    scalar = arr.ndim == 0
    return ExponentialFamilyTerms(
        c=-0.5 / params.alpha ** 2,
        t=finish_output(t, scalar),
        d=-3.0 * math.log(params.alpha),
        s=finish_output(s, scalar),
    )


def au_log_pdf(x: ArrayLike, params: AlphaUnitParams) -> ArrayLike:
    """
    Log-density c(alpha) T(x) + d(alpha) + S(x) on 0 < x < 1.

    Raises:
        DomainError: If any x lies outside (0, 1); at x = 1 the log-density is -inf
    """
    terms = exponential_family_terms(x, params)
    return terms.c * terms.t + terms.d + terms.s


# ============================================================================
# Distribution Function & Quantile
# ============================================================================

def au_cdf(x: ArrayLike, params: AlphaUnitParams) -> ArrayLike:
    """F(x) = 2 Phi(u) - 2 u phi(u) with u = ln(x)/alpha; F(1) = 1."""
    arr = _check_support(x)
    u = _to_u(arr, params)
    cdf = 2.0 * np.asarray(std_normal_cdf(u)) - 2.0 * u * np.asarray(std_normal_pdf(u))
    return finish_output(np.clip(cdf, 0.0, 1.0), arr.ndim == 0)


def au_survival(x: ArrayLike, params: AlphaUnitParams) -> ArrayLike:
    """
    P(X > x) = P(|B| < |u|), the chi-square(3) distribution function at u^2.

    Accurate where 1 - au_cdf would cancel (x close to 1).
    """
    arr = _check_support(x)
    u = _to_u(arr, params)
    return finish_output(np.asarray(chi_square_cdf(u * u, 3)), arr.ndim == 0)


def _quantile_kernel(u: float) -> float:
    """Phi(u) - u phi(u); increasing on u < 0 with derivative u^2 phi(u)."""
    return std_normal_cdf(u) - u * std_normal_pdf(u)


def _quantile_u(p: float, tol: Optional[Tolerance] = None) -> float:
    """The u <= 0 with 2 (Phi(u) - u phi(u)) = p, for p in (0, 1)."""
    half_p = 0.5 * p
    return find_root(
        lambda v: _quantile_kernel(v) - half_p,
        QUANTILE_BRACKET,
        tol,
        fprime=lambda v: v * v * std_normal_pdf(v),
    )


def _x_from_u(u: float, params: AlphaUnitParams) -> float:
    """exp(alpha u), floored at SMALLEST_X when it would underflow."""
    log_x = params.alpha * u
    if log_x < LOG_SMALLEST_X:
        logger.warning(
            f"exp({log_x:.6g}) underflows for alpha={params.alpha}; "
            f"returning the smallest positive double {SMALLEST_X:.6g}"
        )
        return SMALLEST_X
    return math.exp(log_x)


def _log_density_u(u: float, params: AlphaUnitParams) -> float:
    """ln f(x | alpha) at x = exp(alpha u), for u < 0, without forming x."""
    return (
        math.log(2.0) - math.log(params.alpha) - params.alpha * u
        + 2.0 * math.log(-u) - 0.5 * u * u - LOG_SQRT_2PI
    )


def au_quantile(p: float, params: AlphaUnitParams, tol: Optional[Tolerance] = None) -> float:
    """
    Quantile Q(p | alpha): the x in (0, 1] with au_cdf(x) = p.

    Solves Phi(u) - u phi(u) = p/2 for u on [-40, 0] and returns exp(alpha u).
    Where exp(alpha u) underflows (alpha in the hundreds and small p) the
    result is floored at the smallest positive double and a warning is logged.

    Raises:
        DomainError: If p lies outside (0, 1]
        ConvergenceError: If the root finder does not converge
    """
    if not 0.0 < p <= 1.0:
        raise DomainError(f"quantile probability must lie in (0, 1], got {p}")
    if p == 1.0:
        return 1.0
    return _x_from_u(_quantile_u(p, tol), params)


# ============================================================================
# Moments
# ============================================================================

def _mills_excess_series(s: float) -> float:
    """Asymptotic expansion of (1 + s^2) m(s) - s, m the Mills ratio, for large s."""
    inv_s2 = 1.0 / (s * s)
    term = 2.0 / (s * s * s)
    total = term
    for j in range(1, MOMENT_SERIES_TERMS):
        term *= -((j + 1) * (2 * j + 1) / j) * inv_s2
        total += term
    return total


def au_moment(r: float, params: AlphaUnitParams) -> float:
    """
    Raw moment E[X^r] for r >= 0.

    With s = r alpha the closed form 2 e^{s^2/2}[(1+s^2)(1-Phi(s)) - s phi(s)]
    equals 2[(1+s^2) tail(s) - s/sqrt(2 pi)], tail the scaled normal tail, so
    no exponential is ever formed. For s above 30 the bracket is replaced by
    its asymptotic series.

    Raises:
        DomainError: If r is negative
    """
    if r < 0.0 or not math.isfinite(r):
        raise DomainError(f"moment order must be a finite nonnegative number, got {r}")
    s = r * params.alpha
    if s > MOMENT_SERIES_THRESHOLD:
        return 2.0 * _mills_excess_series(s) / SQRT_2PI
    return 2.0 * ((1.0 + s * s) * scaled_normal_tail(s) - s / SQRT_2PI)


def au_mean(params: AlphaUnitParams) -> float:
    """E[X]."""
    return au_moment(1.0, params)


def au_variance(params: AlphaUnitParams) -> float:
    """Var[X] = E[X^2] - E[X]^2."""
    mean = au_mean(params)
    return au_moment(2.0, params) - mean * mean


def _central_moments(params: AlphaUnitParams) -> tuple:
    m1, m2, m3, m4 = (au_moment(float(r), params) for r in range(1, 5))
    var = m2 - m1 ** 2
    mu3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 ** 3
    mu4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 ** 2 * m2 - 3.0 * m1 ** 4
    return var, mu3, mu4


def au_skewness(params: AlphaUnitParams) -> float:
    """Standardized third central moment."""
    var, mu3, _ = _central_moments(params)
    return mu3 / var ** 1.5


def au_kurtosis(params: AlphaUnitParams) -> float:
    """Standardized fourth central moment (3 for a normal law)."""
    var, _, mu4 = _central_moments(params)
    return mu4 / var ** 2


def au_mode(params: AlphaUnitParams) -> float:
    """
    Maximizer of the density: exp(-(alpha^2 + sqrt(alpha^4 + 8 alpha^2)) / 2).

    Setting d/dt of the log-density in t = -ln x to zero gives
    t^2 - alpha^2 t - 2 alpha^2 = 0, whose positive root is the exponent above.
    """
    a2 = params.alpha ** 2
    return math.exp(-0.5 * (a2 + math.sqrt(a2 * a2 + 8.0 * a2)))


def au_mgf(t: float, params: AlphaUnitParams, tol: Optional[Tolerance] = None) -> float:
    """
    Moment-generating function E[exp(t X)].

    For moderate t the Taylor series sum_k t^k/k! E[X^k] is truncated at the
    first K with |t|^{K+1}/(K+1)! < tol.abs_tol (valid since E[X^k] <= 1).
    Outside [-5, 50] the alternating or long series is replaced by quadrature
    of 2 u^2 phi(u) exp(t e^{alpha u}) over u <= 0.
    """
    tol = tol or default_tolerance()
    if not math.isfinite(t):
        raise DomainError(f"MGF argument must be finite, got {t}")
    if t == 0.0:
        return 1.0

    if MGF_SERIES_MIN_T <= t <= MGF_SERIES_MAX_T:
        log_abs_t = math.log(abs(t))
        log_tol = math.log(tol.abs_tol)
        total = 1.0
        coefficient = 1.0
        k = 0
        # remainder bound |t|^{k+1}/(k+1)!
        while (k + 1) * log_abs_t - math.lgamma(k + 2) >= log_tol:
            k += 1
            coefficient *= t / k
            total += coefficient * au_moment(float(k), params)
        logger.debug(f"MGF series at t={t} used {k} terms")
        return total

    def integrand(u: float) -> float:
        return 2.0 * u * u * std_normal_pdf(u) * math.exp(t * math.exp(params.alpha * u))

    value, _ = integrate.quad(integrand, -np.inf, 0.0, epsabs=0.0, epsrel=1e-12, limit=200)
    return value


# ============================================================================
# Highest Density Interval
# ============================================================================

def au_hdi(mass: float, params: AlphaUnitParams, tol: Optional[Tolerance] = None) -> HdiInterval:
    """
    Highest density interval with probability `mass`.

    Searches the lower endpoint in u = ln(x)/alpha. For each candidate u_lo the
    upper endpoint u_hi carries the remaining mass, and the root equates the
    endpoint log-densities on [-(2 alpha + 40), u_top]. The mode sits near
    u = -alpha, so for large alpha the lower tail probability of the interval
    is far too small to search for on the probability scale. A lower
    endpoint whose x underflows is floored at SMALLEST_X.

    Raises:
        DomainError: If mass lies outside (0, 1)
    """
    if not 0.0 < mass < 1.0:
        raise DomainError(f"HDI mass must lie in (0, 1), got {mass}")

    def upper_u(u_lo: float) -> float:
        p_hi = 2.0 * _quantile_kernel(u_lo) + mass
        return 0.0 if p_hi >= 1.0 else _quantile_u(p_hi, tol)

    def log_density_gap(u_lo: float) -> float:
        u_hi = upper_u(u_lo)
        if u_hi >= 0.0:
            return HDI_GAP_CAP
        return _log_density_u(u_lo, params) - _log_density_u(u_hi, params)

    tail_room = 1.0 - mass
    u_top = _quantile_u(tail_room * (1.0 - HDI_TOP_MARGIN), tol)
    bracket = Bracket(lo=-(2.0 * params.alpha + 40.0), hi=u_top)
    u_lo = find_root(log_density_gap, bracket, tol)
    u_hi = upper_u(u_lo)
    lower = _x_from_u(u_lo, params)
    upper = 1.0 if u_hi >= 0.0 else math.exp(params.alpha * u_hi)
    logger.debug(
        f"HDI({mass}) for alpha={params.alpha}: u=[{u_lo:.6g}, {u_hi:.6g}], "
        f"[{lower:.6g}, {upper:.6g}]"
    )
    return HdiInterval(lower=lower, upper=upper, mass=mass)
