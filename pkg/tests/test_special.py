import math

import numpy as np
import pytest
from scipy.special import eval_genlaguerre, gammaln, ive

from dunklosc.special import (BesselRegime, bessel_i_scaled, bessel_ratio,
                              bessel_ratio_scaled, laguerre, laguerre_deriv,
                              log_gamma)


class TestLogGamma:
    def test_known_values(self):
        assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-13)
        assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-13)

    def test_against_scipy(self):
        for x in np.geomspace(1e-3, 200.0, 40):
            assert log_gamma(float(x)) == pytest.approx(float(gammaln(x)), rel=1e-13, abs=1e-13)

    def test_domain(self):
        with pytest.raises(ValueError):
            log_gamma(0.0)
        with pytest.raises(ValueError):
            log_gamma(-1.0)


class TestLaguerre:
    def test_low_orders(self):
        # L_0 = 1, L_1^a(y) = a + 1 - y
        assert laguerre(0, 0.3, 5.0) == 1.0
        assert laguerre(1, 0.5, 2.0) == pytest.approx(-0.5, abs=1e-15)
        # brute-force series: L_2^0(1) = 1 - 2 + 1/2 = -1/2
        assert laguerre(2, 0.0, 1.0) == pytest.approx(-0.5, abs=1e-14)

    def test_against_scipy(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            n = int(rng.integers(0, 80))
            a = float(rng.uniform(-0.5, 3.0))
            y = float(rng.uniform(0.0, 50.0))
            ref = float(eval_genlaguerre(n, a, y))
            assert laguerre(n, a, y) == pytest.approx(ref, rel=1e-11, abs=1e-11)

    def test_deriv(self):
        assert laguerre_deriv(0, 0.7, 3.0) == 0.0
        assert laguerre_deriv(1, 0.0, 9.9) == pytest.approx(-1.0, abs=1e-15)
        assert laguerre_deriv(2, 0.0, 0.0) == pytest.approx(-2.0, abs=1e-15)

    def test_deriv_matches_finite_differences(self):
        h = 1e-6
        for n in (1, 3, 7, 15):
            for y in np.linspace(-10, 10, 11):
                fd = (laguerre(n, 0.4, y + h) - laguerre(n, 0.4, y - h)) / (2 * h)
                an = laguerre_deriv(n, 0.4, y)
                assert an == pytest.approx(fd, rel=1e-6, abs=1e-6)

    def test_recurrence_nn3(self):
        # L_{n-1}^{a+1} - L_n^{a+1} = -L_n^a
        rng = np.random.default_rng(1)
        for n in range(1, 31):
            for _ in range(4):
                a = float(rng.uniform(-0.5, 2.5))
                y = float(rng.uniform(0.0, 30.0))
                lhs = laguerre(n - 1, a + 1, y) - laguerre(n, a + 1, y)
                rhs = -laguerre(n, a, y)
                assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)

    def test_recurrence_nn2(self):
        # -y L_{n-1}^{a+2} + (a+1) L_{n-1}^{a+1} = n L_n^a
        rng = np.random.default_rng(2)
        for n in range(1, 31):
            for _ in range(4):
                a = float(rng.uniform(-0.5, 2.5))
                y = float(rng.uniform(0.0, 30.0))
                lhs = -y * laguerre(n - 1, a + 2, y) + (a + 1) * laguerre(n - 1, a + 1, y)
                rhs = n * laguerre(n, a, y)
                assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


class TestBessel:
    def test_half_order_closed_forms(self):
        # I_{1/2}(z) = sqrt(2/(pi z)) sinh z, I_{-1/2}(z) = sqrt(2/(pi z)) cosh z
        ref = math.exp(-1) * math.sqrt(2 / math.pi) * math.sinh(1.0)
        assert bessel_i_scaled(0.5, 1.0) == pytest.approx(ref, rel=1e-12)
        ref = math.exp(-1) * math.sqrt(2 / math.pi) * math.cosh(1.0)
        assert bessel_i_scaled(-0.5, 1.0) == pytest.approx(ref, rel=1e-12)

    def test_zero_argument(self):
        assert bessel_i_scaled(1.0, 0.0) == 0.0
        assert bessel_i_scaled(0.3, 0.0) == 0.0
        assert bessel_i_scaled(0.0, 0.0) == 1.0

    def test_against_scipy_across_regimes(self):
        for nu in (-0.5, 0.0, 0.7, 2.0, 4.5):
            for z in (1e-6, 0.1, 1.0, 10.0, 29.0, 31.0, 100.0, 1e4):
                ref = float(ive(nu, z))
                assert bessel_i_scaled(nu, z) == pytest.approx(ref, rel=1e-10)

    def test_cross_regime_continuity(self):
        # evaluate the same arguments through both regimes: the jump at the
        # switch is the truncation mismatch, not the function's variation
        force_series = BesselRegime(small_z_cutoff=80.0)
        force_asym = BesselRegime(small_z_cutoff=20.0)
        for nu in (-0.5, 0.0, 1.7):
            for z in (25.0, 30.0, 40.0, 75.0):
                lo = bessel_i_scaled(nu, z, force_series)
                hi = bessel_i_scaled(nu, z, force_asym)
                assert abs(lo - hi) / hi < 1e-10

    def test_positivity(self):
        for nu in (-0.5, 0.0, 2.0, 6.0):
            for z in np.geomspace(1e-3, 1e3, 25):
                assert bessel_i_scaled(nu, float(z)) > 0.0

    def test_soni_inequality(self):
        # I_{nu+1}(z) < I_nu(z) on log grids
        for nu in np.concatenate([[-0.5], -0.5 + np.geomspace(0.01, 8, 12)]):
            for z in np.geomspace(1e-3, 1e3, 20):
                hi = bessel_i_scaled(float(nu), float(z))
                lo = bessel_i_scaled(float(nu) + 1.0, float(z))
                assert lo <= hi

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bessel_i_scaled(-0.6, 1.0)
        with pytest.raises(ValueError):
            bessel_i_scaled(0.0, -1.0)


class TestBesselRatio:
    def test_value_at_zero(self):
        # leading series term 1/(2^nu Gamma(nu+1))
        for nu in (-0.5, 0.0, 0.7, 2.0):
            ref = 1.0 / (2.0**nu * math.gamma(nu + 1.0))
            assert bessel_ratio(nu, 0.0) == pytest.approx(ref, rel=1e-14)

    def test_half_order(self):
        assert bessel_ratio(0.5, 1.0) == pytest.approx(
            math.sqrt(2 / math.pi) * math.sinh(1.0), rel=1e-12)
        assert bessel_ratio(-0.5, 1.0) == pytest.approx(
            math.sqrt(2 / math.pi) * math.cosh(1.0), rel=1e-12)

    def test_series_oracle(self):
        # 50-term brute-force series for I_2(3)/3^2
        nu, z = 2.0, 3.0
        total = sum((z / 2) ** (nu + 2 * k) / (math.gamma(k + 1) * math.gamma(k + nu + 1))
                    for k in range(50)) / z**nu
        assert bessel_ratio(nu, z) == pytest.approx(total, rel=1e-12)

    def test_even_in_z(self):
        for nu in (0.0, 0.7):
            assert bessel_ratio_scaled(nu, -4.2) == bessel_ratio_scaled(nu, 4.2)

    def test_matches_scaled_form(self):
        for nu in (-0.5, 0.3, 2.0):
            for z in (0.5, 5.0, 40.0):
                ref = math.exp(z - nu * math.log(z)) * bessel_i_scaled(nu, z)
                assert bessel_ratio(nu, z) == pytest.approx(ref, rel=1e-10)

    def test_scaled_large_arguments(self):
        # e^{-z} I_nu(z) / z^nu against scipy, far into the asymptotic regime
        for nu in (-0.5, 0.0, 1.3, 3.3):
            z = np.array([1e2, 1e4, 1e7])
            ref = ive(nu, z) / z**nu
            got = bessel_ratio_scaled(nu, z)
            np.testing.assert_allclose(got, ref, rtol=1e-11)


def test_bessel_regime_validation():
    with pytest.raises(ValueError):
        BesselRegime(small_z_cutoff=-1.0)
    with pytest.raises(ValueError):
        BesselRegime(series_terms=0)
