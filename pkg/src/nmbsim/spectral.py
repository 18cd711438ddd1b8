"""
Spectral density families and their discretization into per-mode
frequencies and couplings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .symplectic import Array

Family = Literal["ohmic", "super_ohmic"]

#: default exponential cutoffs per family
DEFAULT_CUTOFFS: dict[str, float] = {"ohmic": 15.0, "super_ohmic": 3.0}


@dataclass(frozen=True)
class SpectralDensity:
    """Ohmic (alpha * w * e^{-w/wc}) or super-Ohmic (alpha * w^3 * e^{-w/wc})."""

    family: Family
    alpha: float
    omega_c: float

    def __post_init__(self) -> None:
        if self.family not in ("ohmic", "super_ohmic"):
            raise ValueError(f"unknown spectral density family: {self.family!r}")
        if self.alpha < 0:
            raise ValueError("damping factor alpha must be >= 0")
        if self.omega_c <= 0:
            raise ValueError("cutoff frequency must be positive")


def eval_j(sd: SpectralDensity, omega) -> Array | float:
    """Evaluate the spectral density at frequency omega (scalar or array)."""
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0):
        raise ValueError("spectral density is defined for omega >= 0")
    power = 1 if sd.family == "ohmic" else 3
    out = sd.alpha * omega**power * np.exp(-omega / sd.omega_c)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class DiscretizedBath:
    """Evenly spaced bath frequencies with couplings g_i = sqrt(J(w_i) dw)."""

    freqs: Array
    couplings: Array
    delta_omega: float

    def __post_init__(self) -> None:
        freqs = np.asarray(self.freqs, dtype=float)
        couplings = np.asarray(self.couplings, dtype=float)
        object.__setattr__(self, "freqs", freqs)
        object.__setattr__(self, "couplings", couplings)
        if freqs.shape != couplings.shape or freqs.ndim != 1 or freqs.size == 0:
            raise ValueError("freqs and couplings must be matching 1-d arrays")
        if np.any(freqs <= 0):
            raise ValueError("bath frequencies must be positive (no omega = 0 mode)")
        if np.any(couplings < 0):
            raise ValueError("couplings must be non-negative")
        if freqs.size > 1:
            gaps = np.diff(freqs)
            if np.any(gaps < 0):
                raise ValueError("bath frequencies must be ascending")
            if np.abs(gaps - self.delta_omega).max() > 1e-12 * max(1.0, freqs[-1]):
                raise ValueError("bath frequencies must be evenly spaced")

    @property
    def n_modes(self) -> int:
        return self.freqs.shape[0]


def discretize(sd: SpectralDensity, n_modes: int, omega_bmax: float) -> DiscretizedBath:
    """Discretize a spectral density onto an even frequency grid.

    The grid is w_i = i * dw for i = 1..n_modes with dw = omega_bmax /
    n_modes, so it excludes w = 0 (where the thermal variance diverges)
    and includes omega_bmax.  Couplings follow g_i^2 = J(w_i) * dw.
    """
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    if omega_bmax <= 0:
        raise ValueError("omega_bmax must be positive")
    delta_omega = omega_bmax / n_modes
    freqs = delta_omega * np.arange(1, n_modes + 1)
    couplings = np.sqrt(eval_j(sd, freqs) * delta_omega)
    return DiscretizedBath(freqs=freqs, couplings=couplings, delta_omega=delta_omega)


def peak_frequency(sd: SpectralDensity) -> float:
    """Frequency at which J is maximal: wc for Ohmic, 3 wc for super-Ohmic."""
    return sd.omega_c if sd.family == "ohmic" else 3.0 * sd.omega_c
