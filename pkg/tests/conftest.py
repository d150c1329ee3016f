"""
Shared fixtures and numerical oracles for the test suite.
"""

import math
from pathlib import Path
from typing import Callable

import numpy as np
import pytest
from scipy import integrate, special

from distributions.alpha_unit import AlphaUnitParams, au_pdf
from sampling.streams import RandomStream

# Documented seeds of the distributional acceptance tests
KS_SEED = 20240501
MC_SEED = 1234


def ks_bound(n: int) -> float:
    """Kolmogorov-Smirnov critical value at the 5% level."""
    return 1.36 / math.sqrt(n)


def au_integral(g: Callable[[float], float], alpha: float, pieces: int = 13) -> float:
    """
    Integrate g(x) * au_pdf(x) over (0, 1].

    The interval is cut at x = exp(-alpha k) so every piece spans one unit of
    u = ln(x) / alpha, where the density varies smoothly.
    """
    params = AlphaUnitParams(alpha=alpha)
    total = 0.0
    for k in range(pieces):
        lo, hi = math.exp(-alpha * (k + 1)), math.exp(-alpha * k)
        value, _ = integrate.quad(
            lambda x: g(x) * au_pdf(x, params), lo, hi, epsabs=0.0, epsrel=1e-12, limit=200
        )
        total += value
    return total


def unit_interval_integral(f: Callable[[float], float]) -> float:
    """Integrate f over (0, 1) on the logit scale, where mass near 0 and 1 is spread out."""

    def integrand(y: float) -> float:
        x = special.expit(y)
        if not 0.0 < x < 1.0:
            return 0.0
        return f(x) * x * special.expit(-y)

    left, _ = integrate.quad(integrand, -np.inf, 0.0, epsabs=1e-11, epsrel=1e-10, limit=200)
    right, _ = integrate.quad(integrand, 0.0, np.inf, epsabs=1e-11, epsrel=1e-10, limit=200)
    return left + right


@pytest.fixture
def stream() -> RandomStream:
    return RandomStream(KS_SEED, 0)


@pytest.fixture
def write_csv(tmp_path) -> Callable[[str, str], Path]:
    """Write text to a CSV file under tmp_path and return its path."""

    def _write(text: str, name: str = "data.csv") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
