"""
Simulation orchestration: config parsing/validation, trace production,
parameter sweeps and CSV/manifest emission.

CSV schemas (floats serialized with 12 significant digits):

* entanglement: ``t,E``
* sweep:        ``alpha,nmbq``
* occupancy:    ``t,omega,occupancy`` (long format, bath modes only)
* fidelity:     ``t,F``
* energy:       ``t,E_sys``
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .measures import fidelity_nm, gaussian_fidelity_1mode, log_negativity, nmbq, system_energy
from .models import BATH_KINDS, ModelSpec, build_w
from .spectral import DEFAULT_CUTOFFS, SpectralDensity, discretize
from .states import (
    assemble_initial_state,
    assemble_probe_bath_state,
    single_mode_squeezed_cm,
    thermal_variance,
)
from .symplectic import Array, evolve_quadrature_sums, evolve_reduced, factorize_coupling_block

SCHEMA_VERSION = 1

VALID_OUTPUTS = ("entanglement", "nmbq", "occupancy", "energy")

PRESETS = {
    "desk": {"n_bath": 100, "dt": 0.005, "t_final": 10.0},
    "paper": {"n_bath": 350, "dt": 0.001, "t_final": 20.0},
}

_BATH_ONLY_KEYS = ("family", "alpha", "omega_c", "n_bath", "omega_bmax")
_TOY_KEYS = {
    "single_mode": ("omega_r", "g"),
    "two_bath_modes": ("detuning", "g", "h"),
}


class ConfigError(ValueError):
    """Invalid configuration; mapped to exit code 2 by the CLI."""


class NumericalError(RuntimeError):
    """Simulation produced an unusable state; mapped to exit code 1."""


@dataclass
class SimulationConfig:
    """Resolved configuration of one simulation run.

    Defaults are the reference parameter set: omega_s = omega_a = 10,
    omega_bmax = 50, zeta = 4, T = 1, N = 350, t in [0, 20] with
    dt = 0.001, cutoff 15 (Ohmic) / 3 (super-Ohmic).
    """

    model: str
    schema_version: int = SCHEMA_VERSION
    family: str = "ohmic"
    alpha: float | None = None
    omega_c: float | None = None
    n_bath: int = 350
    omega_bmax: float = 50.0
    omega_a: float = 10.0
    omega_s: float = 10.0
    zeta: float = 4.0
    temperature: float = 1.0
    extra_coupling: float = 1.0
    omega_r: float | None = None
    g: float | None = None
    h: float | None = None
    detuning: float | None = None
    t0: float = 0.0
    t_final: float = 20.0
    dt: float = 0.001
    occupancy_dt: float = 0.01
    outputs: list[str] = field(default_factory=lambda: ["entanglement", "nmbq"])
    output_dir: str = "."

    def validate(self) -> None:
        if self.schema_version != SCHEMA_VERSION:
            raise ConfigError(f"unsupported schema_version {self.schema_version}")
        if self.model not in BATH_KINDS + ("single_mode", "two_bath_modes"):
            raise ConfigError(f"unknown model {self.model!r}")
        if self.model in BATH_KINDS:
            if self.alpha is None:
                raise ConfigError(f"model {self.model!r} requires 'alpha'")
            if self.alpha < 0 or not math.isfinite(self.alpha):
                raise ConfigError("alpha must be a finite non-negative number")
            if self.family not in DEFAULT_CUTOFFS:
                raise ConfigError(f"unknown spectral family {self.family!r}")
            if self.n_bath < 1:
                raise ConfigError("n_bath must be >= 1")
            if self.omega_bmax <= 0:
                raise ConfigError("omega_bmax must be positive")
            for key in _TOY_KEYS["single_mode"] + _TOY_KEYS["two_bath_modes"]:
                if key != "g" and getattr(self, key) is not None:
                    raise ConfigError(f"{key!r} is only valid for toy model kinds")
        else:
            for key in _TOY_KEYS[self.model]:
                if getattr(self, key) is None:
                    raise ConfigError(f"model {self.model!r} requires {key!r}")
            if self.alpha is not None:
                raise ConfigError("'alpha' is only valid for bath model kinds")
        if self.temperature <= 0:
            raise ConfigError("temperature must be positive")
        if self.omega_a <= 0 or self.omega_s <= 0:
            raise ConfigError("omega_a and omega_s must be positive")
        if not math.isfinite(self.zeta):
            raise ConfigError("zeta must be finite")
        if self.dt <= 0:
            raise ConfigError("dt must be positive")
        if self.t_final <= self.t0:
            raise ConfigError("t_final must exceed t0")
        span = self.t_final - self.t0
        if abs(round(span / self.dt) * self.dt - span) > 1e-9 * max(1.0, abs(self.t_final)):
            raise ConfigError("time span must be a whole number of dt steps")
        if self.occupancy_dt <= 0:
            raise ConfigError("occupancy_dt must be positive")
        unknown = [o for o in self.outputs if o not in VALID_OUTPUTS]
        if unknown:
            raise ConfigError(f"unknown outputs {unknown}; valid: {list(VALID_OUTPUTS)}")

    def resolved_omega_c(self) -> float:
        return self.omega_c if self.omega_c is not None else DEFAULT_CUTOFFS[self.family]

    def to_model_spec(self) -> ModelSpec:
        common = dict(
            omega_a=self.omega_a,
            omega_s=self.omega_s,
            zeta=self.zeta,
            temperature=self.temperature,
            t0=self.t0,
            t_final=self.t_final,
            dt=self.dt,
        )
        if self.model in BATH_KINDS:
            sd = SpectralDensity(self.family, self.alpha, self.resolved_omega_c())
            bath = discretize(sd, self.n_bath, self.omega_bmax)
            return ModelSpec(
                kind=self.model, bath=bath, extra_coupling=self.extra_coupling, **common
            )
        if self.model == "single_mode":
            return ModelSpec(kind="single_mode", omega_r=self.omega_r, g=self.g, **common)
        return ModelSpec(
            kind="two_bath_modes", detuning=self.detuning, g=self.g, h=self.h, **common
        )


def config_from_dict(raw: dict) -> SimulationConfig:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    known = set(SimulationConfig.__dataclass_fields__)
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {unknown}")
    if "model" not in raw:
        raise ConfigError("config must set 'model'")
    if raw["model"] in _TOY_KEYS:
        spectral_keys = sorted(set(raw) & set(_BATH_ONLY_KEYS))
        if spectral_keys:
            raise ConfigError(
                f"{spectral_keys} only valid for bath model kinds, not {raw['model']!r}"
            )
    try:
        cfg = SimulationConfig(**raw)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
    cfg.validate()
    return cfg


def load_config(path: str | Path) -> SimulationConfig:
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc}") from exc
    return config_from_dict(raw)


def apply_preset(cfg: SimulationConfig, preset: str | None) -> SimulationConfig:
    """Override scale parameters with a named preset (applied last)."""
    if preset is None:
        return cfg
    if preset not in PRESETS:
        raise ConfigError(f"unknown preset {preset!r}; valid: {sorted(PRESETS)}")
    out = replace(cfg, **PRESETS[preset])
    out.validate()
    return out


def time_grid(cfg: SimulationConfig, step: float | None = None) -> Array:
    dt = step if step is not None else cfg.dt
    n_steps = int(round((cfg.t_final - cfg.t0) / dt))
    return cfg.t0 + dt * np.arange(n_steps + 1)


@dataclass
class SimulationResult:
    config: SimulationConfig
    times: Array
    entanglement: Array
    nmbq: float
    energy: Array | None = None
    occupancy_times: Array | None = None
    occupancy_freqs: Array | None = None
    occupancy: Array | None = None


def run_simulation(cfg: SimulationConfig) -> SimulationResult:
    """Evolve one configuration and compute the requested diagnostics.

    Deterministic for a fixed config: the propagator is exact, so there is
    no solver state or tolerance feedback anywhere in the pipeline.
    """
    cfg.validate()
    model = cfg.to_model_spec()
    w = build_w(model)
    gamma0 = assemble_initial_state(model)
    fact = factorize_coupling_block(w)
    times = time_grid(cfg)

    blocks = evolve_reduced(fact, gamma0, times, [0, 1])
    try:
        trace = np.asarray(log_negativity(blocks))
    except ValueError as exc:
        raise NumericalError(f"evolved state failed physicality: {exc}") from exc
    result = SimulationResult(
        config=cfg, times=times, entanglement=trace, nmbq=nmbq(trace)
    )
    if "energy" in cfg.outputs:
        result.energy = np.asarray(system_energy(blocks, cfg.omega_s, mode=1))
    if "occupancy" in cfg.outputs:
        # bath oscillators only: the extra/buffer mode of model2/3 would
        # duplicate omega_s and break the (t, omega) grid of the output
        if cfg.model in BATH_KINDS:
            bath_cols = slice(2, 2 + model.bath.n_modes)
            freqs = model.bath.freqs
        else:
            bath_cols = slice(2, w.shape[0])
            freqs = np.diag(w)[2:]
        occ_times = time_grid(cfg, cfg.occupancy_dt)
        sums = evolve_quadrature_sums(fact, gamma0, occ_times)
        result.occupancy_times = occ_times
        result.occupancy_freqs = freqs
        result.occupancy = sums[:, bath_cols] - sums[0, bath_cols]
    return result


@dataclass
class FidelityResult:
    config: SimulationConfig
    r_pair: tuple[float, float]
    times: Array
    fidelity: Array
    quantifier: float
    energy_1: Array
    energy_2: Array


def run_fidelity(cfg: SimulationConfig, r1: float, r2: float, phase: float = 0.0) -> FidelityResult:
    """Fidelity dynamics between two single-mode squeezed system states.

    The probe is the system mode alone (no ancilla) coupled to the model's
    bath; both initial states share the same thermal bath, differing only
    in the system squeezing magnitude.
    """
    cfg.validate()
    if cfg.model not in BATH_KINDS:
        raise ConfigError("fidelity runs require a bath model kind")
    model = cfg.to_model_spec()
    w = build_w(model)[1:, 1:]  # drop the uncoupled ancilla row/column
    fact = factorize_coupling_block(w)
    variances = [thermal_variance(om, cfg.temperature) for om in np.diag(w)[1:]]
    times = time_grid(cfg)

    reduced = []
    for r in (r1, r2):
        gamma0 = assemble_probe_bath_state(single_mode_squeezed_cm(r, phase), variances)
        reduced.append(evolve_reduced(fact, gamma0, times, [0]))
    try:
        fid = np.asarray(gaussian_fidelity_1mode(reduced[0], reduced[1]))
    except ValueError as exc:
        raise NumericalError(f"evolved state failed physicality: {exc}") from exc
    return FidelityResult(
        config=cfg,
        r_pair=(r1, r2),
        times=times,
        fidelity=fid,
        quantifier=fidelity_nm(fid),
        energy_1=np.asarray(system_energy(reduced[0], cfg.omega_s)),
        energy_2=np.asarray(system_energy(reduced[1], cfg.omega_s)),
    )


def run_fidelity_grid(
    cfg: SimulationConfig, r_values, phase: float = 0.0
) -> tuple[tuple[float, float], float, dict]:
    """Fidelity quantifier over all pairs drawn from a squeezing grid.

    Evolves each probe once and scores every unordered pair, returning the
    best (r_i, r_j), its quantifier, and the full pair table.  A small
    grid over an unbounded parameter space: useful for exploring how the
    quantifier varies, with no claim of realizing the supremum.
    """
    cfg.validate()
    if cfg.model not in BATH_KINDS:
        raise ConfigError("fidelity runs require a bath model kind")
    r_values = [float(r) for r in r_values]
    if len(r_values) < 2:
        raise ConfigError("grid search needs at least two squeezing values")
    model = cfg.to_model_spec()
    w = build_w(model)[1:, 1:]
    fact = factorize_coupling_block(w)
    variances = [thermal_variance(om, cfg.temperature) for om in np.diag(w)[1:]]
    times = time_grid(cfg)
    reduced = {
        r: evolve_reduced(
            fact, assemble_probe_bath_state(single_mode_squeezed_cm(r, phase), variances), times, [0]
        )
        for r in r_values
    }
    table: dict = {}
    for i, r1 in enumerate(r_values):
        for r2 in r_values[i + 1 :]:
            fid = np.asarray(gaussian_fidelity_1mode(reduced[r1], reduced[r2]))
            table[(r1, r2)] = fidelity_nm(fid)
    best = max(table, key=table.get)
    return best, table[best], table


def _sweep_cell(payload: tuple[dict, float]) -> tuple[float, float | None, str | None]:
    raw, alpha = payload
    try:
        cfg = config_from_dict({**raw, "alpha": alpha})
        res = run_simulation(cfg)
        return alpha, res.nmbq, None
    except Exception as exc:  # report per row, never abort the sweep
        return alpha, None, f"{type(exc).__name__}: {exc}"


@dataclass
class SweepResult:
    config: SimulationConfig
    param: str
    rows: list[tuple[float, float | None, str | None]]

    @property
    def failed(self) -> bool:
        return any(err is not None for _, _, err in self.rows)


def run_sweep(
    cfg: SimulationConfig, values, param: str = "alpha", workers: int = 1
) -> SweepResult:
    """NMBQ sweep over the spectral damping factor.

    Cells are independent; with workers > 1 they run in separate
    processes.  Row order always follows the input value order.
    """
    if param != "alpha":
        raise ConfigError(f"unsupported sweep parameter {param!r}; only 'alpha'")
    if cfg.model not in BATH_KINDS:
        raise ConfigError("sweeps require a bath model kind")
    values = [float(v) for v in values]
    if not values:
        raise ConfigError("sweep requires at least one value")
    raw = asdict(cfg)
    raw.pop("alpha")
    payloads = [(raw, v) for v in values]
    if workers > 1 and len(values) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_cell, payloads))
    else:
        rows = [_sweep_cell(p) for p in payloads]
    return SweepResult(config=cfg, param=param, rows=rows)


def parse_sweep_values(text: str) -> list[float]:
    """Parse '0.2,0.4,0.8' or 'start:stop:step' (stop inclusive)."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError("range values must be start:stop:step")
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError as exc:
            raise ConfigError(f"invalid range component in {text!r}") from exc
        if step <= 0 or stop < start:
            raise ConfigError("range requires step > 0 and stop >= start")
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        return [start + k * step for k in range(count)]
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise ConfigError(f"invalid value list {text!r}") from exc


# ---------------------------------------------------------------------------
# serialization

def _fmt(x: float) -> str:
    return f"{x:.12g}"


def write_trace_csv(path: Path, header: tuple[str, str], t: Array, y: Array) -> None:
    lines = [",".join(header)]
    lines += [f"{_fmt(ti)},{_fmt(yi)}" for ti, yi in zip(t, y)]
    path.write_text("\n".join(lines) + "\n")


def write_sweep_csv(path: Path, rows) -> None:
    lines = ["alpha,nmbq"]
    lines += [
        f"{_fmt(alpha)},{'nan' if q is None else _fmt(q)}" for alpha, q, _ in rows
    ]
    path.write_text("\n".join(lines) + "\n")


def write_occupancy_csv(path: Path, times: Array, freqs: Array, occ: Array) -> None:
    lines = ["t,omega,occupancy"]
    for i, t in enumerate(times):
        ts = _fmt(t)
        lines += [f"{ts},{_fmt(om)},{_fmt(occ[i, j])}" for j, om in enumerate(freqs)]
    path.write_text("\n".join(lines) + "\n")


def write_manifest(path: Path, cfg: SimulationConfig, results: dict, files: list[str]) -> None:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "package_version": __version__,
        "created_at": datetime.now(timezone.utc).isoformat(),
        "config": asdict(cfg),
        "results": results,
        "files": files,
    }
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
