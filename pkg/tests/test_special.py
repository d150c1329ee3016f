"""
Tests for the special-function kernels.
"""

import math

import numpy as np
import pytest
from scipy import special, stats

from errors import DomainError
from numerics.special import (
    chi_square_cdf,
    log_gamma,
    scaled_normal_tail,
    std_normal_cdf,
    std_normal_logpdf,
    std_normal_pdf,
    std_normal_quantile,
)


class TestNormal:
    def test_pdf_at_zero(self):
        assert std_normal_pdf(0.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi), rel=1e-15)

    def test_logpdf_matches_pdf(self):
        x = np.linspace(-5.0, 5.0, 11)
        np.testing.assert_allclose(std_normal_logpdf(x), np.log(std_normal_pdf(x)), rtol=1e-13)

    @pytest.mark.parametrize("x", [-30.0, -8.0, -1.5, 0.0, 0.3, 2.0, 7.5])
    def test_cdf_matches_reference(self, x):
        assert std_normal_cdf(x) == pytest.approx(special.ndtr(x), rel=1e-12)

    def test_cdf_symmetry(self):
        x = np.linspace(-6.0, 6.0, 25)
        np.testing.assert_allclose(std_normal_cdf(x) + std_normal_cdf(-x), 1.0, atol=1e-15)

    def test_cdf_infinite_arguments(self):
        assert std_normal_cdf(-np.inf) == 0.0
        assert std_normal_cdf(np.inf) == 1.0

    def test_scalar_in_scalar_out(self):
        assert isinstance(std_normal_cdf(0.5), float)
        assert isinstance(std_normal_cdf(np.array([0.5])), np.ndarray)

    def test_quantile(self):
        assert std_normal_quantile(0.975) == pytest.approx(1.959963984540054, rel=1e-14)
        assert std_normal_quantile(0.5) == 0.0

    @pytest.mark.parametrize("p", [0.0, 1.0, -0.1, 1.5])
    def test_quantile_domain(self, p):
        with pytest.raises(DomainError):
            std_normal_quantile(p)


class TestScaledTail:
    def test_value_at_zero(self):
        assert scaled_normal_tail(0.0) == pytest.approx(0.5, rel=1e-15)

    def test_matches_definition(self):
        x = np.array([0.1, 1.0, 3.0, 6.0])
        expected = np.exp(0.5 * x * x) * special.ndtr(-x)
        np.testing.assert_allclose(scaled_normal_tail(x), expected, rtol=1e-12)

    def test_large_argument_asymptotics(self):
        x = 1e6
        asymptotic = (1.0 - 1.0 / x ** 2) / (x * math.sqrt(2.0 * math.pi))
        assert scaled_normal_tail(x) == pytest.approx(asymptotic, rel=1e-12)

    def test_strictly_decreasing(self):
        values = scaled_normal_tail(np.linspace(0.0, 500.0, 1001))
        assert np.all(np.diff(values) < 0.0)

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            scaled_normal_tail(-1.0)


def test_log_gamma():
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)
    assert log_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-15)
    with pytest.raises(DomainError):
        log_gamma(0.0)


@pytest.mark.parametrize("dof", [1, 3, 7, 60])
def test_chi_square_cdf(dof):
    w = np.array([0.0, 0.5, 2.0, 10.0, 80.0])
    np.testing.assert_allclose(chi_square_cdf(w, dof), stats.chi2.cdf(w, dof), rtol=1e-12, atol=1e-300)


def test_chi_square_cdf_domain():
    with pytest.raises(DomainError):
        chi_square_cdf(1.0, 0)
    with pytest.raises(DomainError):
        chi_square_cdf(-0.1, 3)
