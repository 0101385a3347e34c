"""Sup-error measurement, convergence-rate fitting, the central-coefficient
ratio, and the first-order cross check."""

from __future__ import annotations

import math

import pytest

from extbinom import (
    central_ratio,
    exact_scaled_value,
    first_order_cross_check,
    rate_sweep,
    uniform_error,
)

SQRT_2PI = math.sqrt(2 * math.pi)


class TestExactScaledValue:
    def test_against_comb(self):
        for k in (0, 10, 25, 37):
            expected = math.comb(50, k) / 2**50 * math.sqrt(3 * 50 / 12)
            assert exact_scaled_value(50, k, 1) == pytest.approx(expected, rel=1e-14)

    def test_outside_support(self):
        assert exact_scaled_value(10, -1, 2) == 0.0


class TestUniformError:
    def test_hand_checked_smallest_case(self):
        # n=1, q=1: both support points sit at x = +-1 with exact value 1/4
        sup, argmax = uniform_error(1, 1, 0)
        assert sup == pytest.approx(0.25 - math.exp(-0.5) / SQRT_2PI, abs=1e-14)
        assert argmax in (0, 1)

    def test_magnitude_at_n100(self):
        sup, _ = uniform_error(100, 2, 0)
        assert 1e-4 < sup < 1e-2

    def test_correction_improves(self):
        sup0, _ = uniform_error(100, 2, 0)
        sup1, _ = uniform_error(100, 2, 1)
        assert sup1 < sup0


class TestRateSweep:
    def test_slope_near_minus_one(self):
        report = rate_sweep(2, 0, [40, 80, 160])
        assert report.fitted_slope == pytest.approx(-1.0, abs=0.3)
        assert report.slope_stderr >= 0
        assert [r.n for r in report.records] == [40, 80, 160]

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            rate_sweep(2, 0, [50, 100])

    def test_not_increasing(self):
        with pytest.raises(ValueError):
            rate_sweep(2, 0, [50, 100, 100])
        with pytest.raises(ValueError):
            rate_sweep(2, 0, [100, 50, 200])


class TestCentralRatio:
    def test_small_exact_case(self):
        # 3 / (9 / sqrt(2*pi*2*(2*4)/12)), assembled independently
        expected = 3 * math.sqrt(2 * math.pi * 2 * 2 * 4 / 12) / 9
        assert central_ratio(2, 2) == pytest.approx(expected, rel=1e-14)

    def test_odd_product_rejected(self):
        with pytest.raises(ValueError):
            central_ratio(101, 1)

    def test_tends_to_unity_from_below(self):
        gaps = [abs(central_ratio(n, 2) - 1) for n in (50, 100, 200)]
        assert gaps[0] > gaps[1] > gaps[2]
        # leading correction at the centre is 0.1875/n for q=2
        assert gaps[1] == pytest.approx(0.1875 / 100, rel=0.1)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            central_ratio(0, 2)


class TestFirstOrderCrossCheck:
    @pytest.mark.parametrize("n,k,q", [(10, 10, 2), (25, 30, 3), (7, 0, 4)])
    def test_routes_agree(self, n, k, q):
        series, closed = first_order_cross_check(n, k, q)
        assert abs(series - closed) <= 1e-12
