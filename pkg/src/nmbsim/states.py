"""
Initial covariance matrices: two-mode squeezed probes, thermal bath modes,
single-mode squeezed states, and their direct-sum assembly.

All constructors use the vacuum-equals-identity convention of
:mod:`nmbsim.symplectic`.  The two-mode squeezing parameter ``zeta`` enters
the matrix entries directly as cosh(zeta) / sinh(zeta); no conversion to
other squeezing conventions is performed.
"""

from __future__ import annotations

import math

import numpy as np

from .models import ModelSpec, mode_frequencies
from .symplectic import Array


def two_mode_squeezed_cm(zeta: float) -> Array:
    """4x4 covariance matrix of a two-mode squeezed vacuum.

    Ordering (x_1, x_2, p_1, p_2); the x block carries +sinh(zeta)
    correlations and the p block -sinh(zeta).  zeta = 0 gives the vacuum.
    """
    if not np.isfinite(zeta):
        raise ValueError("zeta must be finite")
    c, s = math.cosh(zeta), math.sinh(zeta)
    return np.array(
        [
            [c, s, 0.0, 0.0],
            [s, c, 0.0, 0.0],
            [0.0, 0.0, c, -s],
            [0.0, 0.0, -s, c],
        ]
    )


def thermal_variance(omega: float, temperature: float) -> float:
    """Quadrature variance 1 + 2/(e^(omega/T) - 1) = coth(omega / 2T)."""
    if omega <= 0:
        raise ValueError("thermal mode frequency must be positive")
    if temperature <= 0:
        raise ValueError("temperature must be positive")
    ratio = omega / temperature
    if ratio > 700.0:  # correction underflows; avoid expm1 overflow
        return 1.0
    return 1.0 + 2.0 / math.expm1(ratio)


def thermal_cm(omega: float, temperature: float) -> Array:
    """2x2 covariance matrix of a thermal mode: v(omega, T) * I."""
    return thermal_variance(omega, temperature) * np.eye(2)


def single_mode_squeezed_cm(r: float, phase: float = 0.0) -> Array:
    """2x2 covariance matrix of a single-mode squeezed state.

    At phase 0 the convention is diag(e^{2r}, e^{-2r}), i.e. anti-squeezing
    on x; a nonzero phase rotates the squeezing axis.
    """
    if r < 0:
        raise ValueError("squeezing magnitude r must be >= 0")
    rot = np.array(
        [[math.cos(phase), math.sin(phase)], [-math.sin(phase), math.cos(phase)]]
    )
    return rot @ np.diag([math.exp(2 * r), math.exp(-2 * r)]) @ rot.T


def assemble_probe_bath_state(probe_cm: Array, variances: Array) -> Array:
    """Direct sum of a single-mode probe and diagonal bath blocks.

    Parameters
    ----------
    probe_cm:
        2x2 covariance matrix of mode 0 in (x, p) ordering.
    variances:
        per-mode quadrature variances of the remaining modes.
    """
    variances = np.asarray(variances, dtype=float)
    n = 1 + variances.shape[0]
    gamma = np.eye(2 * n)
    gamma[0, 0] = probe_cm[0, 0]
    gamma[0, n] = gamma[n, 0] = probe_cm[0, 1]
    gamma[n, n] = probe_cm[1, 1]
    idx = np.arange(1, n)
    gamma[idx, idx] = variances
    gamma[idx + n, idx + n] = variances
    return gamma


def assemble_initial_state(model: ModelSpec) -> Array:
    """Global initial covariance matrix for a model, x-then-p ordering.

    Modes 0 (ancilla) and 1 (system) start in a two-mode squeezed state
    with the model's zeta; every bath / extra / buffer mode starts thermal
    at the model temperature and its own frequency.
    """
    freqs = mode_frequencies(model)
    n = freqs.shape[0]
    c, s = math.cosh(model.zeta), math.sinh(model.zeta)
    gamma = np.eye(2 * n)
    gamma[0, 0] = gamma[1, 1] = gamma[n, n] = gamma[n + 1, n + 1] = c
    gamma[0, 1] = gamma[1, 0] = s
    gamma[n, n + 1] = gamma[n + 1, n] = -s
    for j in range(2, n):
        v = thermal_variance(freqs[j], model.temperature)
        gamma[j, j] = v
        gamma[n + j, n + j] = v
    return gamma
