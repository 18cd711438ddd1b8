from __future__ import annotations

import numpy as np
import pytest
from scipy.integrate import quad

from nmbsim import DiscretizedBath, SpectralDensity, discretize, eval_j
from nmbsim.spectral import peak_frequency


class TestEvalJ:
    def test_zero_at_origin(self):
        sd = SpectralDensity("ohmic", 1.0, 15.0)
        assert eval_j(sd, 0.0) == 0.0

    def test_ohmic_reference_value(self):
        sd = SpectralDensity("ohmic", 1.0, 15.0)
        assert abs(eval_j(sd, 10.0) - 5.134171190325921) < 1e-12

    def test_super_ohmic_reference_value(self):
        sd = SpectralDensity("super_ohmic", 1.0, 3.0)
        assert abs(eval_j(sd, 10.0) - 35.67399334725239) < 1e-11

    def test_rejects_negative_frequency(self):
        with pytest.raises(ValueError):
            eval_j(SpectralDensity("ohmic", 1.0, 15.0), -1.0)

    def test_rejects_bad_family_and_params(self):
        with pytest.raises(ValueError):
            SpectralDensity("lorentzian", 1.0, 15.0)
        with pytest.raises(ValueError):
            SpectralDensity("ohmic", -1.0, 15.0)
        with pytest.raises(ValueError):
            SpectralDensity("ohmic", 1.0, 0.0)


class TestDiscretize:
    def test_reference_grid(self):
        bath = discretize(SpectralDensity("ohmic", 1.0, 15.0), 350, 50.0)
        assert bath.n_modes == 350
        assert abs(bath.delta_omega - 1.0 / 7.0) < 1e-15
        assert abs(bath.freqs[0] - 1.0 / 7.0) < 1e-13
        assert abs(bath.freqs[-1] - 50.0) < 1e-12

    def test_single_mode(self):
        bath = discretize(SpectralDensity("ohmic", 1.0, 15.0), 1, 10.0)
        assert bath.freqs.tolist() == [10.0]
        assert abs(bath.couplings[0] ** 2 - eval_j(SpectralDensity("ohmic", 1.0, 15.0), 10.0) * 10.0) < 1e-12

    def test_couplings_consistent_with_density(self):
        sd = SpectralDensity("super_ohmic", 0.7, 3.0)
        bath = discretize(sd, 100, 50.0)
        expect = eval_j(sd, bath.freqs) * bath.delta_omega
        assert np.abs(bath.couplings**2 - expect).max() <= 1e-12 * expect.max()

    def test_riemann_sum_matches_quadrature(self):
        # independent oracle: adaptive quadrature of J over [0, omega_bmax]
        sd = SpectralDensity("ohmic", 1.0, 15.0)
        bath = discretize(sd, 350, 50.0)
        total = float((bath.couplings**2).sum())
        integral, _ = quad(lambda w: eval_j(sd, w), 0.0, 50.0, limit=200)
        assert abs(total - integral) <= 0.02 * integral

    def test_alpha_scaling_is_exact(self):
        b1 = discretize(SpectralDensity("ohmic", 0.5, 15.0), 50, 50.0)
        b2 = discretize(SpectralDensity("ohmic", 1.0, 15.0), 50, 50.0)
        assert np.allclose(b2.couplings, np.sqrt(2.0) * b1.couplings, rtol=1e-15)

    def test_peak_locations(self):
        grid = np.linspace(0.0, 60.0, 600001)
        ohmic = SpectralDensity("ohmic", 1.0, 15.0)
        so = SpectralDensity("super_ohmic", 1.0, 3.0)
        assert abs(grid[np.argmax(eval_j(ohmic, grid))] - peak_frequency(ohmic)) < 1e-3
        assert abs(grid[np.argmax(eval_j(so, grid))] - peak_frequency(so)) < 1e-3
        assert peak_frequency(ohmic) == 15.0
        assert peak_frequency(so) == 9.0


class TestDiscretizedBath:
    def test_rejects_zero_frequency(self):
        with pytest.raises(ValueError):
            DiscretizedBath(freqs=np.array([0.0, 1.0]), couplings=np.array([0.1, 0.1]), delta_omega=1.0)

    def test_rejects_uneven_spacing(self):
        with pytest.raises(ValueError):
            DiscretizedBath(
                freqs=np.array([1.0, 2.0, 4.0]), couplings=np.zeros(3), delta_omega=1.0
            )

    def test_resonant_cluster_allowed(self):
        # equal frequencies (zero spacing) are a valid degenerate bath
        bath = DiscretizedBath(
            freqs=np.array([10.0, 10.0]), couplings=np.array([3.0, 4.0]), delta_omega=0.0
        )
        assert bath.n_modes == 2
