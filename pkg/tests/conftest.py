from __future__ import annotations

import numpy as np
import pytest

from nmbsim import (
    ModelSpec,
    SpectralDensity,
    assemble_initial_state,
    build_w,
    discretize,
    evolve_reduced,
    factorize_coupling_block,
    log_negativity,
)


def entanglement_trace(w, gamma0, t_final, dt, t0=0.0):
    """Ancilla-system log-negativity on a uniform grid (modes 0 and 1)."""
    fact = factorize_coupling_block(w)
    times = t0 + dt * np.arange(int(round((t_final - t0) / dt)) + 1)
    blocks = evolve_reduced(fact, gamma0, times, [0, 1])
    return times, np.asarray(log_negativity(blocks)), blocks


def bath_model(kind, family, alpha, n_bath=350, omega_bmax=50.0, omega_c=None, **kwargs):
    if omega_c is None:
        omega_c = 15.0 if family == "ohmic" else 3.0
    bath = discretize(SpectralDensity(family, alpha, omega_c), n_bath, omega_bmax)
    return ModelSpec(kind=kind, bath=bath, **kwargs)


def model_trace(model, t_final=None, dt=None):
    w = build_w(model)
    gamma0 = assemble_initial_state(model)
    return entanglement_trace(
        w,
        gamma0,
        model.t_final if t_final is None else t_final,
        model.dt if dt is None else dt,
        t0=model.t0,
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_symmetric(rng, n, scale=1.0):
    a = rng.normal(scale=scale, size=(n, n))
    return 0.5 * (a + a.T)


# one pass/fail line per acceptance criterion, echoed after the test run
ACCEPTANCE_LINES: list[str] = []


def record_acceptance(name: str, ok: bool, detail: str = "") -> bool:
    line = f"[ACCEPTANCE] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
