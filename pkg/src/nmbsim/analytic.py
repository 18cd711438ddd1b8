"""
Closed-form results for the ancilla-system pair coupled to one detuned
thermal mode, packaged as independent oracles for the numerical pipeline.

The closed-form covariance matrix is written in a rotating frame: the
system-frequency rotation is removed from all modes, and the ancilla keeps
a residual rotation at half the detuning.  Evolving numerically with the
coupling block of :func:`equivalence_frame_w` reproduces the blocks here
entry by entry, up to one global normalization constant (the closed form
carries an overall 1/2 against the vacuum-equals-identity convention).
Both frames give identical entanglement, which is rotation invariant.

Temperature is hard-coded to T = 1 through the coth(omega_r / 2) factor.
"""

from __future__ import annotations

import math

import numpy as np

from .symplectic import Array


def exchange_frequency(g: float, delta: float) -> float:
    """Normal-mode splitting sqrt(delta^2 + 4 g^2) of the coupled pair."""
    e_p = math.hypot(delta, 2.0 * g)
    if e_p == 0.0:
        raise ValueError("g and delta cannot both vanish")
    return e_p


def analytic_as_cm(zeta: float, g: float, delta: float, omega_r: float, t) -> Array:
    """Closed-form 4x4 ancilla-system covariance matrix at time(s) t.

    Ordering (x_a, x_s, p_a, p_s); accepts scalar or array t and returns
    shape (..., 4, 4).  Includes the overall 1/2 prefactor of the closed
    form; fix the normalization against numerics at t = 0.
    """
    t = np.asarray(t, dtype=float)
    e_p = exchange_frequency(g, delta)
    c, s = math.cosh(zeta), math.sinh(zeta)
    cos_half = np.cos(e_p * t / 2.0)
    sin_half = np.sin(e_p * t / 2.0)
    xi = cos_half * np.cos(delta * t) + sin_half * np.sin(delta * t) * delta / e_p
    pi_ = -cos_half * np.sin(delta * t) + sin_half * np.cos(delta * t) * delta / e_p
    phi = (
        2.0 * g * g * (np.cos(e_p * t) - 1.0) / e_p**2
        * (c - 1.0 / math.tanh(omega_r / 2.0))
    )

    gamma = np.zeros(t.shape + (4, 4))
    gamma[..., 0, 0] = gamma[..., 2, 2] = c
    gamma[..., 1, 1] = gamma[..., 3, 3] = c + phi
    gamma[..., 0, 1] = gamma[..., 1, 0] = xi * s
    gamma[..., 2, 3] = gamma[..., 3, 2] = -xi * s
    gamma[..., 0, 3] = gamma[..., 3, 0] = pi_ * s
    gamma[..., 1, 2] = gamma[..., 2, 1] = pi_ * s
    return 0.5 * gamma


def equivalence_frame_w(g: float, delta: float) -> Array:
    """Coupling block over (ancilla, system, bath mode) in the rotating
    frame where :func:`analytic_as_cm` holds verbatim.

    The system-frequency rotation is removed from every mode and the
    ancilla retains a rotation at delta / 2.
    """
    return np.array(
        [
            [delta / 2.0, 0.0, 0.0],
            [0.0, 0.0, g],
            [0.0, g, delta],
        ]
    )


def large_detuning_eo(zeta: float, g: float, delta: float, omega_r: float, t) -> Array | float:
    """Closed-form entanglement-oscillation curve for large detuning
    (guidance: delta / g >= 10).

    Tracks log2 of the oscillating minimal symplectic eigenvalue (over 2),
    so it is negative at t = 0 and offset from the log-negativity; only
    its oscillation frequency and amplitude are meaningful for comparison
    with numerics.  The oscillating term enters through sin^2(delta t / 2):
    at first power the logarithm's argument goes negative over part of
    each period whenever 2 g^2 (coth(omega_r / 2) - e^-zeta) exceeds
    delta^2 e^-zeta.
    """
    if delta == 0:
        raise ValueError("large-detuning expression requires a nonzero detuning")
    t = np.asarray(t, dtype=float)
    base = delta * delta * math.exp(-zeta)
    swing = 2.0 * g * g * (1.0 / math.tanh(omega_r / 2.0) - math.exp(-zeta))
    out = np.log2((base + swing * np.sin(delta * t / 2.0) ** 2) / (2.0 * delta * delta))
    return float(out) if out.ndim == 0 else out
