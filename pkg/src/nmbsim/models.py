"""
Coupling-block construction for every supported bath structure.

Mode ordering is fixed: ancilla (0), system (1), bath modes in ascending
frequency, then the extra bath mode ("model2") or buffer ("model3") in the
last slot.  The ancilla is never coupled: its row and column of W stay
diagonal, so it only undergoes free evolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .spectral import DiscretizedBath
from .symplectic import Array

ModelKind = Literal["single_mode", "two_bath_modes", "model1", "model2", "model3"]

#: kinds that carry a discretized bath
BATH_KINDS = ("model1", "model2", "model3")


@dataclass(frozen=True)
class ModelSpec:
    """Physical parameters of one simulation (frequencies in units of the
    dimensionless convention; system and ancilla default to 10).

    Toy kinds: ``single_mode`` needs (omega_r, g); ``two_bath_modes`` needs
    (detuning, g, h) and places one resonant and one detuned mode.
    Bath kinds need a :class:`DiscretizedBath`; model2/model3 add one
    resonant extra/buffer mode at strength ``extra_coupling``.
    """

    kind: ModelKind
    omega_a: float = 10.0
    omega_s: float = 10.0
    zeta: float = 4.0
    temperature: float = 1.0
    bath: DiscretizedBath | None = None
    extra_coupling: float = 1.0
    omega_r: float | None = None
    g: float | None = None
    h: float | None = None
    detuning: float | None = None
    t0: float = 0.0
    t_final: float = 20.0
    dt: float = 0.001

    def __post_init__(self) -> None:
        if self.kind not in ("single_mode", "two_bath_modes") + BATH_KINDS:
            raise ValueError(f"unknown model kind: {self.kind!r}")
        if self.omega_a <= 0 or self.omega_s <= 0:
            raise ValueError("mode frequencies must be positive")
        if self.temperature <= 0:
            raise ValueError("temperature must be positive")
        if not np.isfinite(self.zeta):
            raise ValueError("zeta must be finite")
        if self.kind == "single_mode":
            if self.omega_r is None or self.g is None:
                raise ValueError("single_mode requires omega_r and g")
        elif self.kind == "two_bath_modes":
            if self.detuning is None or self.g is None or self.h is None:
                raise ValueError("two_bath_modes requires detuning, g and h")
        elif self.bath is None:
            raise ValueError(f"{self.kind} requires a discretized bath")


def mode_count(model: ModelSpec) -> int:
    if model.kind == "single_mode":
        return 3
    if model.kind == "two_bath_modes":
        return 4
    extra = 1 if model.kind in ("model2", "model3") else 0
    return 2 + model.bath.n_modes + extra


def mode_frequencies(model: ModelSpec) -> Array:
    """Diagonal of W: physical frequency of every mode, in global order."""
    if model.kind == "single_mode":
        return np.array([model.omega_a, model.omega_s, model.omega_r])
    if model.kind == "two_bath_modes":
        return np.array(
            [model.omega_a, model.omega_s, model.omega_s, model.omega_s + model.detuning]
        )
    freqs = [model.omega_a, model.omega_s, *model.bath.freqs]
    if model.kind in ("model2", "model3"):
        freqs.append(model.omega_s)  # resonant extra / buffer mode
    return np.array(freqs)


def build_w(model: ModelSpec) -> Array:
    """Coupling block W (so K = diag(W, W)) for the given model."""
    w = np.diag(mode_frequencies(model))
    if model.kind == "single_mode":
        w[1, 2] = w[2, 1] = model.g
    elif model.kind == "two_bath_modes":
        w[1, 2] = w[2, 1] = model.g
        w[1, 3] = w[3, 1] = model.h
    elif model.kind == "model1":
        w[1, 2:] = w[2:, 1] = model.bath.couplings
    elif model.kind == "model2":
        w[1, 2:-1] = w[2:-1, 1] = model.bath.couplings
        w[1, -1] = w[-1, 1] = model.extra_coupling
    elif model.kind == "model3":
        # the buffer mediates all bath couplings; the system touches only it
        w[-1, 2:-1] = w[2:-1, -1] = model.bath.couplings
        w[1, -1] = w[-1, 1] = model.extra_coupling
    return w


def effective_w_large_detuning(g: float, h: float, delta: float) -> Array:
    """Interaction-picture W over (system, resonant, detuned) for large
    detuning: the detuned mode decouples and Stark-shifts the system.

    Valid for delta >> h (guidance: delta / h >= 10).
    """
    if delta == 0:
        raise ValueError("large-detuning reduction requires a nonzero detuning")
    shift = h * h / delta
    return np.array(
        [
            [shift, g, 0.0],
            [g, 0.0, 0.0],
            [0.0, 0.0, delta - shift],
        ]
    )


def effective_w_small_detuning(g: float, h: float, delta: float) -> Array:
    """Interaction-picture W over (system, resonant, detuned) for small
    detuning: frequency shifts on all three modes plus an induced coupling
    between the two bath modes.

    Valid for delta small against sqrt(g^2 + h^2) (guidance: <= 0.1 of it).
    """
    gh2 = g * g + h * h
    if gh2 == 0:
        raise ValueError("at least one coupling must be nonzero")
    shift_s = delta * h * h / (2 * gh2)
    shift_b = 3 * delta * g * g * h * h / (2 * gh2**2)
    shift_r = delta * (2 * g**4 + h**4) / (2 * gh2**2)
    c_br = delta * g * h * (h * h - 2 * g * g) / (2 * gh2**2)
    return np.array(
        [
            [shift_s, g, h],
            [g, shift_b, c_br],
            [h, c_br, shift_r],
        ]
    )


def effective_resonant_coupling(g_list) -> float:
    """Collective coupling sqrt(sum g_i^2) of resonant modes.

    N resonant modes reduce to one coupled normal mode at this strength;
    the remaining N-1 combinations are dark.
    """
    g = np.asarray(g_list, dtype=float)
    if np.any(g < 0):
        raise ValueError("couplings must be non-negative")
    return float(math.sqrt(float((g * g).sum())))


def with_ancilla(w_block: Array, omega_a: float = 0.0) -> Array:
    """Prepend an uncoupled ancilla row/column to a system-sector W."""
    m = w_block.shape[0]
    out = np.zeros((m + 1, m + 1))
    out[0, 0] = omega_a
    out[1:, 1:] = w_block
    return out
