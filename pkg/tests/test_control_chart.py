"""
Tests for Alpha-Unit control limits and series evaluation.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from distributions.alpha_unit import AlphaUnitParams, au_cdf, au_mean, au_pdf
from errors import DomainError
from sampling.generators import sample_au
from sampling.streams import RandomStream
from spc.control_chart import ChartMethod, ChartSpec, chart_frame, control_limits, evaluate_series
from tests.conftest import KS_SEED


class TestLimits:
    def test_hdi_reference_chart(self):
        spec = ChartSpec(alpha=0.1092, false_alarm=0.01, method=ChartMethod.HDI)
        limits = control_limits(spec)
        params = AlphaUnitParams(alpha=0.1092)
        assert limits.lcl == pytest.approx(0.6856, abs=0.002)
        assert limits.ucl == pytest.approx(0.9773, abs=0.002)
        assert limits.cl == pytest.approx(au_mean(params))
        lo_density, hi_density = au_pdf(limits.lcl, params), au_pdf(limits.ucl, params)
        assert abs(lo_density - hi_density) / lo_density <= 1e-6
        assert au_cdf(limits.ucl, params) - au_cdf(limits.lcl, params) == pytest.approx(0.99, abs=1e-9)

    @pytest.mark.parametrize("alpha, pi", [(0.1092, 0.01), (0.5, 0.05), (2.0, 0.0027)])
    def test_equal_tailed(self, alpha, pi):
        limits = control_limits(ChartSpec(alpha=alpha, false_alarm=pi, method=ChartMethod.EQUAL_TAILED))
        params = AlphaUnitParams(alpha=alpha)
        assert au_cdf(limits.lcl, params) == pytest.approx(pi / 2.0, abs=1e-9)
        assert au_cdf(limits.ucl, params) == pytest.approx(1.0 - pi / 2.0, abs=1e-9)

    @pytest.mark.parametrize("alpha, pi", [(0.1092, 0.01), (0.5, 0.05), (1.5, 0.1)])
    def test_hdi_never_wider(self, alpha, pi):
        tails = control_limits(ChartSpec(alpha=alpha, false_alarm=pi, method=ChartMethod.EQUAL_TAILED))
        hdi = control_limits(ChartSpec(alpha=alpha, false_alarm=pi))
        assert hdi.ucl - hdi.lcl <= tails.ucl - tails.lcl + 1e-12

    def test_interval_shrinks_as_false_alarm_grows(self):
        wide = control_limits(ChartSpec(alpha=0.5, false_alarm=0.01))
        narrow = control_limits(ChartSpec(alpha=0.5, false_alarm=0.99))
        assert narrow.ucl - narrow.lcl < 0.05 * (wide.ucl - wide.lcl)

    @pytest.mark.parametrize("kwargs", [{"alpha": 0.0}, {"alpha": 1.0, "false_alarm": 0.0}, {"alpha": 1.0, "false_alarm": 1.0}])
    def test_invalid_spec(self, kwargs):
        with pytest.raises(ValidationError):
            ChartSpec(**kwargs)

    def test_default_method_is_hdi(self):
        assert ChartSpec(alpha=1.0).method is ChartMethod.HDI

    @pytest.mark.parametrize("alpha", [4.0, 5.0, 10.0])
    def test_hdi_for_large_alpha(self, alpha):
        limits = control_limits(ChartSpec(alpha=alpha, false_alarm=0.01))
        params = AlphaUnitParams(alpha=alpha)
        assert 0.0 < limits.lcl < limits.cl < limits.ucl < 1.0
        assert au_cdf(limits.ucl, params) - au_cdf(limits.lcl, params) == pytest.approx(0.99, abs=1e-9)


class TestEvaluation:
    @pytest.fixture
    def limits(self):
        return control_limits(ChartSpec(alpha=0.3, false_alarm=0.01, method=ChartMethod.EQUAL_TAILED))

    def test_empty_series(self, limits):
        evaluation = evaluate_series([], limits)
        assert evaluation.alarm_count == 0
        assert evaluation.alarm_rate == 0.0

    def test_boundary_logic(self, limits):
        series = [limits.lcl / 2.0, (limits.lcl + limits.ucl) / 2.0, min(1.0, limits.ucl * 1.0001)]
        assert evaluate_series(series, limits).alarm_indices == [0, 2]

    def test_values_on_limits_do_not_alarm(self, limits):
        assert evaluate_series([limits.lcl, limits.ucl], limits).alarm_count == 0

    def test_in_control_rate(self, limits):
        n = 100_000
        x = sample_au(AlphaUnitParams(alpha=0.3), RandomStream(KS_SEED, 31), n).values
        rate = evaluate_series(x, limits).alarm_rate
        assert abs(rate - 0.01) <= 3.0 * math.sqrt(0.01 * 0.99 / n)

    def test_out_of_range_names_index(self, limits):
        with pytest.raises(DomainError, match="index 1"):
            evaluate_series([0.5, 0.0, 0.4], limits)

    def test_chart_frame(self, limits):
        frame = chart_frame([limits.lcl / 2.0, 0.5 * (limits.lcl + limits.ucl)], limits)
        assert list(frame.columns) == ["index", "value", "alarm"]
        assert list(frame["alarm"]) == [True, False]
        np.testing.assert_array_equal(frame["index"], [0, 1])
