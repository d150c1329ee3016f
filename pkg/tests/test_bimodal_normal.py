"""
Tests for the Bimodal Normal and Bimodal Half-Normal families.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import integrate

from distributions.bimodal_normal import (
    BimodalNormal,
    bhn_cdf,
    bhn_pdf,
    bn_cdf,
    bn_log_normalizer,
    bn_modes,
    bn_normalizer,
    bn_pdf,
)
from errors import DomainError


@pytest.mark.parametrize("k, expected", [(1, 1.0), (2, 3.0), (3, 15.0), (5, 945.0)])
def test_normalizer_double_factorial(k, expected):
    assert bn_normalizer(k) == expected
    assert math.exp(bn_log_normalizer(k)) == pytest.approx(expected, rel=1e-13)


def test_normalizer_log_space_branch():
    exact = float(math.prod(range(1, 2 * 60, 2)))
    assert bn_normalizer(60) == pytest.approx(exact, rel=1e-12)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_pdf_integrates_to_one(k):
    total, _ = integrate.quad(lambda b: bn_pdf(b, k), -np.inf, np.inf, epsabs=1e-13)
    assert total == pytest.approx(1.0, abs=1e-10)


def test_pdf_vanishes_at_zero_and_is_symmetric():
    assert bn_pdf(0.0, 1) == 0.0
    b = np.linspace(0.1, 4.0, 9)
    np.testing.assert_allclose(bn_pdf(b, 2), bn_pdf(-b, 2), rtol=1e-15)


@pytest.mark.parametrize("k", [1, 3])
def test_cdf_matches_integrated_pdf(k):
    assert bn_cdf(0.0, k) == 0.5
    for b in (-2.2, -0.4, 1.3, 3.1):
        expected, _ = integrate.quad(lambda t: bn_pdf(t, k), -np.inf, b, epsabs=1e-13)
        assert bn_cdf(b, k) == pytest.approx(expected, abs=1e-10)


def test_cdf_reflection():
    b = np.linspace(0.0, 5.0, 11)
    np.testing.assert_allclose(bn_cdf(b, 1) + bn_cdf(-b, 1), 1.0, atol=1e-15)


@pytest.mark.parametrize("k", [1, 4])
def test_modes_are_maxima(k):
    lo, hi = bn_modes(k)
    assert hi == pytest.approx(math.sqrt(2 * k)) and lo == -hi
    assert bn_pdf(hi, k) > bn_pdf(hi + 0.01, k)
    assert bn_pdf(hi, k) > bn_pdf(hi - 0.01, k)


def test_value_object():
    bn = BimodalNormal(k=2)
    assert bn.pdf(1.0) == bn_pdf(1.0, 2)
    assert bn.cdf(1.0) == bn_cdf(1.0, 2)
    assert bn.modes() == bn_modes(2)
    with pytest.raises(ValidationError):
        BimodalNormal(k=0)


def test_invalid_order():
    with pytest.raises(DomainError):
        bn_pdf(1.0, 0)
    with pytest.raises(DomainError):
        bn_cdf(1.0, -1)


class TestBimodalHalfNormal:
    @pytest.mark.parametrize("alpha", [0.3, 1.0, 2.5])
    def test_pdf_integrates_to_one(self, alpha):
        total, _ = integrate.quad(lambda q: bhn_pdf(q, alpha), 0.0, np.inf, epsabs=1e-13)
        assert total == pytest.approx(1.0, abs=1e-10)

    def test_cdf_matches_integrated_pdf(self):
        for q in (0.2, 1.0, 2.7):
            expected, _ = integrate.quad(lambda t: bhn_pdf(t, 1.5), 0.0, q, epsabs=1e-13)
            assert bhn_cdf(q, 1.5) == pytest.approx(expected, abs=1e-10)

    def test_support(self):
        assert bhn_pdf(-1.0, 1.0) == 0.0
        assert bhn_cdf(-1.0, 1.0) == 0.0

    def test_invalid_scale(self):
        with pytest.raises(DomainError):
            bhn_pdf(1.0, 0.0)
