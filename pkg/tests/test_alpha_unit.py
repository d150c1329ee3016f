"""
Tests for the Alpha-Unit distribution.
"""

import logging
import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import integrate, optimize

from distributions.alpha_unit import (
    SMALLEST_X,
    AlphaUnitParams,
    HdiInterval,
    au_cdf,
    au_hdi,
    au_kurtosis,
    au_log_pdf,
    au_mean,
    au_mgf,
    au_mode,
    au_moment,
    au_pdf,
    au_quantile,
    au_skewness,
    au_survival,
    au_variance,
    exponential_family_terms,
)
from errors import DomainError
from numerics.special import std_normal_pdf
from tests.conftest import au_integral

ALPHAS = [0.1, 0.5, 1.0, 2.0]


def params(alpha: float) -> AlphaUnitParams:
    return AlphaUnitParams(alpha=alpha)


class TestParams:
    @pytest.mark.parametrize("alpha", [0.0, -1.0, float("inf"), float("nan")])
    def test_invalid_alpha(self, alpha):
        with pytest.raises(ValidationError):
            AlphaUnitParams(alpha=alpha)


class TestDensity:
    def test_hand_evaluated_value(self):
        expected = 2.0 * math.e * math.exp(-0.5) / math.sqrt(2.0 * math.pi)
        assert au_pdf(math.exp(-1.0), params(1.0)) == pytest.approx(expected, rel=1e-13)
        assert au_pdf(math.exp(-1.0), params(1.0)) == pytest.approx(1.3154892, abs=1e-7)

    def test_log_density_value(self):
        expected = math.log(2.0) + 0.5 - 0.5 * math.log(2.0 * math.pi)
        assert au_log_pdf(math.exp(-1.0), params(1.0)) == pytest.approx(expected, rel=1e-13)
        assert au_log_pdf(math.exp(-1.0), params(1.0)) == pytest.approx(0.2742087, abs=1e-7)

    def test_zero_at_one(self):
        assert au_pdf(1.0, params(0.7)) == 0.0

    @pytest.mark.parametrize("x", [0.0, -0.5, 1.5])
    def test_outside_support(self, x):
        with pytest.raises(DomainError):
            au_pdf(x, params(1.0))

    def test_log_density_excludes_one(self):
        with pytest.raises(DomainError):
            au_log_pdf(1.0, params(1.0))

    def test_tiny_arguments_do_not_overflow(self):
        value = au_pdf(1e-300, params(30.0))
        assert math.isfinite(value) and value > 0.0

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_integrates_to_one(self, alpha):
        assert au_integral(lambda x: 1.0, alpha) == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("alpha", [0.3, 1.7])
    def test_exponential_family_reconstruction(self, alpha):
        x = np.array([1e-6, 0.01, 0.3, 0.77, 0.999])
        terms = exponential_family_terms(x, params(alpha))
        rebuilt = np.exp(terms.c * terms.t + terms.d + terms.s)
        np.testing.assert_allclose(rebuilt, au_pdf(x, params(alpha)), rtol=1e-12)
        assert terms.c == pytest.approx(-0.5 / alpha ** 2)
        assert terms.d == pytest.approx(-3.0 * math.log(alpha))


class TestDistributionFunction:
    def test_cdf_at_one(self):
        assert au_cdf(1.0, params(0.4)) == 1.0

    @pytest.mark.parametrize("alpha", [0.2, 1.0])
    def test_cdf_matches_integrated_density(self, alpha):
        # In u = ln(x) / alpha the density is 2 u^2 phi(u) on u <= 0
        for u_end in (-3.0, -1.0, -0.2):
            expected, _ = integrate.quad(lambda u: 2.0 * u * u * std_normal_pdf(u), -np.inf, u_end, epsabs=1e-14)
            assert au_cdf(math.exp(alpha * u_end), params(alpha)) == pytest.approx(expected, abs=1e-11)

    def test_survival_complements_cdf(self):
        x = np.array([0.01, 0.2, 0.5, 0.9, 0.999])
        p = params(0.8)
        np.testing.assert_allclose(au_cdf(x, p) + au_survival(x, p), 1.0, atol=1e-14)

    def test_cdf_monotone(self):
        x = np.linspace(0.001, 1.0, 500)
        assert np.all(np.diff(au_cdf(x, params(0.6))) >= 0.0)


class TestQuantile:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_round_trip(self, alpha):
        for prob in (1e-6, 0.005, 0.1, 0.5, 0.9, 0.995):
            x = au_quantile(prob, params(alpha))
            assert au_cdf(x, params(alpha)) == pytest.approx(prob, abs=1e-10)

    def test_unit_probability(self):
        assert au_quantile(1.0, params(1.0)) == 1.0

    @pytest.mark.parametrize("prob", [0.0, -0.1, 1.1])
    def test_domain(self, prob):
        with pytest.raises(DomainError):
            au_quantile(prob, params(1.0))

    def test_monotone(self):
        values = [au_quantile(prob, params(0.9)) for prob in np.linspace(0.01, 0.99, 50)]
        assert np.all(np.diff(values) > 0.0)

    def test_underflow_floored_at_smallest_double(self, caplog):
        caplog.set_level(logging.WARNING, logger="distributions.alpha_unit")
        assert au_quantile(0.01, params(300.0)) == SMALLEST_X
        assert "underflows" in caplog.text
        assert au_quantile(0.99, params(300.0)) > SMALLEST_X


class TestMoments:
    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("r", range(1, 9))
    def test_closed_form_matches_quadrature(self, r, alpha):
        expected = au_integral(lambda x: x ** r, alpha)
        assert au_moment(float(r), params(alpha)) == pytest.approx(expected, rel=1e-8)

    def test_zeroth_moment(self):
        assert au_moment(0.0, params(1.3)) == pytest.approx(1.0, rel=1e-15)

    @pytest.mark.parametrize("r, alpha", [(1000.0, 1.0), (500.0, 2.0), (10.0, 100.0)])
    def test_large_order_is_finite(self, r, alpha):
        value = au_moment(r, params(alpha))
        s = r * alpha
        assert math.isfinite(value) and value > 0.0
        assert value == pytest.approx(4.0 / (s ** 3 * math.sqrt(2.0 * math.pi)), rel=1e-4)

    def test_series_branch_is_continuous(self):
        below = au_moment(30.0 - 1e-9, params(1.0))
        above = au_moment(30.0 + 1e-9, params(1.0))
        assert above == pytest.approx(below, rel=1e-8)

    def test_negative_order(self):
        with pytest.raises(DomainError):
            au_moment(-1.0, params(1.0))

    def test_published_mean(self):
        assert au_mean(params(1.205943)) == pytest.approx(0.1948, abs=1e-3)

    def test_mean_at_unit_alpha(self):
        assert au_mean(params(1.0)) == pytest.approx(0.248428, abs=1e-6)

    @pytest.mark.parametrize("alpha", [0.3, 1.2])
    def test_variance_and_shape(self, alpha):
        mean = au_integral(lambda x: x, alpha)
        central = [au_integral(lambda x, k=k: (x - mean) ** k, alpha) for k in (2, 3, 4)]
        assert au_variance(params(alpha)) == pytest.approx(central[0], rel=1e-7)
        assert au_skewness(params(alpha)) == pytest.approx(central[1] / central[0] ** 1.5, rel=1e-6)
        assert au_kurtosis(params(alpha)) == pytest.approx(central[2] / central[0] ** 2, rel=1e-6)

    @pytest.mark.parametrize("alpha", [0.2, 1.0, 3.0])
    def test_mode_maximizes_density(self, alpha):
        mode = au_mode(params(alpha))
        peak = au_pdf(mode, params(alpha))
        assert peak > au_pdf(mode * (1.0 - 1e-3), params(alpha))
        assert peak > au_pdf(min(mode * (1.0 + 1e-3), 1.0), params(alpha))

    @pytest.mark.parametrize("alpha", [0.1, 0.5, 1.0, 2.0, 5.0])
    def test_mode_matches_numeric_argmax(self, alpha):
        p = params(alpha)
        # Maximize over t = -ln x, where the log-density is concave.
        found = optimize.minimize_scalar(
            lambda t: -float(au_log_pdf(math.exp(-t), p)),
            bounds=(1e-8, 10.0 * (alpha * alpha + 3.0)),
            method="bounded",
            options={"xatol": 1e-12},
        )
        assert -math.log(au_mode(p)) == pytest.approx(found.x, rel=1e-6)

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_unimodal_on_fine_grid(self, alpha):
        p = params(alpha)
        x = np.arange(1, 10000) * 1e-4
        density = au_pdf(x, p)
        mode = au_mode(p)
        assert np.all(np.diff(density[x < mode]) > 0.0)
        assert np.all(np.diff(density[x > mode]) < 0.0)


class TestMgf:
    def test_at_zero(self):
        assert au_mgf(0.0, params(0.5)) == 1.0

    @pytest.mark.parametrize("t", [-20.0, -1.0, 2.0, 60.0])
    def test_matches_quadrature(self, t):
        expected = au_integral(lambda x: math.exp(t * x), 0.7)
        assert au_mgf(t, params(0.7)) == pytest.approx(expected, rel=1e-8)

    def test_derivative_at_zero_is_mean(self):
        h = 1e-4
        slope = (au_mgf(h, params(0.9)) - au_mgf(-h, params(0.9))) / (2.0 * h)
        assert slope == pytest.approx(au_mean(params(0.9)), rel=1e-6)

    def test_non_finite_argument(self):
        with pytest.raises(DomainError):
            au_mgf(float("inf"), params(1.0))


class TestHdi:
    def test_published_chart_limits(self):
        interval = au_hdi(0.99, params(0.1092))
        assert interval.lower == pytest.approx(0.6856, abs=0.002)
        assert interval.upper == pytest.approx(0.9773, abs=0.002)

    @pytest.mark.parametrize("alpha, mass", [(0.1092, 0.99), (0.5, 0.9), (1.5, 0.95)])
    def test_mass_and_equal_endpoint_density(self, alpha, mass):
        p = params(alpha)
        interval = au_hdi(mass, p)
        assert au_cdf(interval.upper, p) - au_cdf(interval.lower, p) == pytest.approx(mass, abs=1e-9)
        f_lo = au_pdf(interval.lower, p)
        f_hi = au_pdf(interval.upper, p)
        assert abs(f_lo - f_hi) / f_lo <= 1e-6

    def test_narrower_than_equal_tailed(self):
        p = params(0.4)
        interval = au_hdi(0.95, p)
        tails = au_quantile(0.975, p) - au_quantile(0.025, p)
        assert interval.width <= tails

    @pytest.mark.parametrize("alpha", [4.0, 5.0, 10.0])
    @pytest.mark.parametrize("mass", [0.9, 0.95, 0.99])
    def test_concentrated_near_zero(self, alpha, mass):
        p = params(alpha)
        interval = au_hdi(mass, p)
        assert au_cdf(interval.upper, p) - au_cdf(interval.lower, p) == pytest.approx(mass, abs=1e-9)
        assert au_log_pdf(interval.lower, p) == pytest.approx(au_log_pdf(interval.upper, p), abs=1e-6)
        assert interval.lower < au_mode(p) < interval.upper

    def test_lower_endpoint_floored_when_it_underflows(self, caplog):
        caplog.set_level(logging.WARNING, logger="distributions.alpha_unit")
        interval = au_hdi(0.99, params(40.0))
        assert interval.lower == SMALLEST_X
        assert au_cdf(interval.upper, params(40.0)) == pytest.approx(0.99, abs=1e-9)
        assert "underflows" in caplog.text

    @pytest.mark.parametrize("mass", [0.0, 1.0, 1.2])
    def test_mass_domain(self, mass):
        with pytest.raises(DomainError):
            au_hdi(mass, params(1.0))

    def test_interval_validation(self):
        with pytest.raises(ValidationError):
            HdiInterval(lower=0.5, upper=0.4, mass=0.9)
