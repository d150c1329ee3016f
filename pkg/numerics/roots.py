"""
Bracketed Root Finding

Brent's method (bisection safeguarded by secant and inverse quadratic steps)
on a sign-changing bracket, with an optional Newton polish when the derivative
is known. Used for the Alpha-Unit quantile equation and the HDI endpoint
condition, both of which are monotone on their brackets.
"""

import logging
from typing import Callable, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import optimize

from config.settings import settings
from errors import BracketError, ConvergenceError

logger = logging.getLogger(__name__)

NEWTON_POLISH_STEPS = 3


class Tolerance(BaseModel):
    """Stopping rule shared by the iterative routines."""

    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(default=1e-12, gt=0.0, allow_inf_nan=False)
    max_iter: int = Field(default=200, ge=1)


class Bracket(BaseModel):
    """Closed interval [lo, hi] known to contain a root."""

    model_config = ConfigDict(frozen=True)

    lo: float = Field(allow_inf_nan=False)
    hi: float = Field(allow_inf_nan=False)

    @model_validator(mode="after")
    def check_order(self) -> "Bracket":
        """Ensure lo < hi."""
        if not self.lo < self.hi:
            raise ValueError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")
        return self

    @property
    def width(self) -> float:
        return self.hi - self.lo


def default_tolerance() -> Tolerance:
    """Tolerance taken from settings (ALPHA_UNIT_ROOT_ABS_TOL, ALPHA_UNIT_ROOT_MAX_ITER)."""
    return Tolerance(abs_tol=settings.root_abs_tol, max_iter=settings.root_max_iter)


def find_root(
    f: Callable[[float], float],
    bracket: Bracket,
    tol: Optional[Tolerance] = None,
    fprime: Optional[Callable[[float], float]] = None,
) -> float:
    """
    Find x in the bracket with f(x) = 0.

    Args:
        f: Function with f(lo) * f(hi) <= 0, monotone on the bracket
        bracket: Search interval
        tol: Absolute tolerance on x and iteration limit
        fprime: Optional derivative used for a final Newton polish

    Returns:
        The root, accurate to tol.abs_tol

    Raises:
        BracketError: If f does not change sign on the bracket
        ConvergenceError: If the iteration limit is reached
    """
    tol = tol or default_tolerance()
    f_lo = f(bracket.lo)
    f_hi = f(bracket.hi)

    if f_lo == 0.0:
        return bracket.lo
    if f_hi == 0.0:
        return bracket.hi
    if f_lo * f_hi > 0.0:
        raise BracketError(
            f"no sign change on [{bracket.lo}, {bracket.hi}]: "
            f"f(lo)={f_lo:.6g}, f(hi)={f_hi:.6g}"
        )

    root, info = optimize.brentq(
        f,
        bracket.lo,
        bracket.hi,
        xtol=tol.abs_tol,
        maxiter=tol.max_iter,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        raise ConvergenceError(
            f"root finder stopped after {info.iterations} iterations "
            f"({info.flag}) on [{bracket.lo}, {bracket.hi}]"
        )
    logger.debug(f"brentq converged in {info.iterations} iterations: x={root!r}")

    if fprime is not None:
        root = _newton_polish(f, fprime, root, bracket)
    return float(root)


def _newton_polish(
    f: Callable[[float], float],
    fprime: Callable[[float], float],
    x: float,
    bracket: Bracket,
) -> float:
    """A few Newton steps, each kept only if it stays inside the bracket and shrinks |f|."""
    fx = f(x)
    for _ in range(NEWTON_POLISH_STEPS):
        slope = fprime(x)
        if fx == 0.0 or slope == 0.0:
            break
        candidate = x - fx / slope
        if not bracket.lo <= candidate <= bracket.hi:
            break
        f_candidate = f(candidate)
        if abs(f_candidate) >= abs(fx):
            break
        x, fx = candidate, f_candidate
    return x
