"""
Command-line front end.

Subcommands: ``simulate``, ``sweep``, ``occupancy``, ``fidelity``.  Every
run writes CSV files plus a ``manifest.json`` recording the resolved
configuration and package version into the output directory.

Exit codes: 0 success, 1 numerical failure, 2 configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .runner import (
    ConfigError,
    NumericalError,
    apply_preset,
    load_config,
    parse_sweep_values,
    run_fidelity,
    run_simulation,
    run_sweep,
    write_manifest,
    write_occupancy_csv,
    write_sweep_csv,
    write_trace_csv,
)


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("config", help="path to a JSON configuration file")
    parser.add_argument(
        "--preset",
        choices=("desk", "paper"),
        help="scale override applied after the config file: 'desk' is a "
        "sub-minute smoke scale (N=100, dt=0.005, t_f=10), 'paper' the "
        "full reference scale (N=350, dt=0.001, t_f=20)",
    )
    parser.add_argument("--output-dir", help="override the config's output directory")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmbsim",
        description="Covariance-matrix simulation of an oscillator coupled to "
        "structured bosonic baths, with non-Markovianity quantifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="run one configuration")
    _add_common(p_sim)

    p_sweep = sub.add_parser("sweep", help="sweep the damping factor alpha")
    _add_common(p_sweep)
    p_sweep.add_argument("--param", default="alpha", help="sweep parameter (only 'alpha')")
    p_sweep.add_argument(
        "--values", required=True, help="comma list '0.2,0.4' or range 'start:stop:step'"
    )
    p_sweep.add_argument("--workers", type=int, default=1, help="parallel sweep cells")

    p_occ = sub.add_parser("occupancy", help="bath-mode occupancy map")
    _add_common(p_occ)

    p_fid = sub.add_parser("fidelity", help="fidelity dynamics of two squeezed probes")
    _add_common(p_fid)
    p_fid.add_argument("--r1", type=float, default=4.0, help="squeezing of state 1")
    p_fid.add_argument("--r2", type=float, default=0.1, help="squeezing of state 2")
    p_fid.add_argument("--phase", type=float, default=0.0, help="common squeezing phase")

    return parser


def _prepare(args) -> tuple:
    cfg = apply_preset(load_config(args.config), args.preset)
    if args.output_dir is not None:
        cfg.output_dir = args.output_dir
    out_dir = Path(cfg.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    return cfg, out_dir


def _cmd_simulate(args) -> int:
    cfg, out_dir = _prepare(args)
    res = run_simulation(cfg)
    files, results = [], {"nmbq": res.nmbq}
    if "entanglement" in cfg.outputs:
        write_trace_csv(out_dir / "entanglement.csv", ("t", "E"), res.times, res.entanglement)
        files.append("entanglement.csv")
    if res.energy is not None:
        write_trace_csv(out_dir / "energy.csv", ("t", "E_sys"), res.times, res.energy)
        files.append("energy.csv")
    if res.occupancy is not None:
        write_occupancy_csv(
            out_dir / "occupancy.csv", res.occupancy_times, res.occupancy_freqs, res.occupancy
        )
        files.append("occupancy.csv")
    write_manifest(out_dir / "manifest.json", cfg, results, files)
    print(f"nmbq = {res.nmbq:.12g}")
    print(f"wrote {', '.join(files + ['manifest.json'])} to {out_dir}")
    return 0


def _cmd_sweep(args) -> int:
    cfg, out_dir = _prepare(args)
    values = parse_sweep_values(args.values)
    sweep = run_sweep(cfg, values, param=args.param, workers=args.workers)
    write_sweep_csv(out_dir / "sweep.csv", sweep.rows)
    results = {}
    for alpha, q, err in sweep.rows:
        if err is None:
            print(f"alpha={alpha:.6g} nmbq={q:.12g}")
        else:
            print(f"alpha={alpha:.6g} FAILED: {err}", file=sys.stderr)
    results["rows"] = [
        {"alpha": a, "nmbq": q, "error": err} for a, q, err in sweep.rows
    ]
    write_manifest(out_dir / "manifest.json", cfg, results, ["sweep.csv"])
    print(f"wrote sweep.csv, manifest.json to {out_dir}")
    return 1 if sweep.failed else 0


def _cmd_occupancy(args) -> int:
    cfg, out_dir = _prepare(args)
    if "occupancy" not in cfg.outputs:
        cfg.outputs = list(cfg.outputs) + ["occupancy"]
    res = run_simulation(cfg)
    write_occupancy_csv(
        out_dir / "occupancy.csv", res.occupancy_times, res.occupancy_freqs, res.occupancy
    )
    write_manifest(out_dir / "manifest.json", cfg, {"nmbq": res.nmbq}, ["occupancy.csv"])
    print(f"wrote occupancy.csv, manifest.json to {out_dir}")
    return 0


def _cmd_fidelity(args) -> int:
    cfg, out_dir = _prepare(args)
    res = run_fidelity(cfg, args.r1, args.r2, phase=args.phase)
    write_trace_csv(out_dir / "fidelity.csv", ("t", "F"), res.times, res.fidelity)
    write_trace_csv(out_dir / "energy_state1.csv", ("t", "E_sys"), res.times, res.energy_1)
    write_trace_csv(out_dir / "energy_state2.csv", ("t", "E_sys"), res.times, res.energy_2)
    files = ["fidelity.csv", "energy_state1.csv", "energy_state2.csv"]
    write_manifest(
        out_dir / "manifest.json",
        cfg,
        {"fidelity_nm": res.quantifier, "r1": args.r1, "r2": args.r2, "phase": args.phase},
        files,
    )
    print(f"fidelity_nm = {res.quantifier:.12g}")
    print(f"wrote {', '.join(files + ['manifest.json'])} to {out_dir}")
    return 0


_COMMANDS = {
    "simulate": _cmd_simulate,
    "sweep": _cmd_sweep,
    "occupancy": _cmd_occupancy,
    "fidelity": _cmd_fidelity,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
