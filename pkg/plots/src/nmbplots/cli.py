"""
Command-line figure scripts.

Each script reads one or more of the simulator's CSV files, validates the
schema, and writes a raster image.  A JSON recipe file (--recipe) may be
used instead of flags; its keys mirror FigureRecipe.

Exit codes: 0 success, 2 schema or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .render import FigureRecipe, render
from .schema import SchemaError


def _base_parser(prog: str, description: str, multi_input: bool) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=prog, description=description)
    nargs = "*" if multi_input else "?"
    parser.add_argument("inputs", nargs=nargs, help="input CSV file(s)")
    parser.add_argument("--recipe", help="JSON recipe file (overrides other flags)")
    parser.add_argument("-o", "--output", default=None, help="output image path")
    parser.add_argument("--labels", help="comma-separated legend labels")
    parser.add_argument("--title", default="", help="figure title")
    return parser


def _recipe_from_args(args, kind: str, default_output: str) -> FigureRecipe:
    if args.recipe:
        payload = json.loads(Path(args.recipe).read_text())
        return FigureRecipe(**payload)
    inputs = args.inputs if isinstance(args.inputs, list) else [args.inputs]
    inputs = [p for p in inputs if p]
    labels = [s.strip() for s in args.labels.split(",")] if args.labels else []
    return FigureRecipe(
        kind=kind,
        inputs=inputs,
        output=args.output or default_output,
        labels=labels,
        title=args.title,
        include_low_end=getattr(args, "include_low_end", False),
    )


def _run(kind: str, default_output: str, args) -> int:
    try:
        recipe = _recipe_from_args(args, kind, default_output)
        out = render(recipe)
    except (SchemaError, FileNotFoundError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


def main_traces(argv: list[str] | None = None) -> int:
    parser = _base_parser(
        "plot_traces", "Overlay entanglement traces (CSV schema t,E).", True
    )
    return _run("trace-family", "traces.png", parser.parse_args(argv))


def main_sweep(argv: list[str] | None = None) -> int:
    parser = _base_parser(
        "plot_sweep", "Overlay NMBQ sweep curves (CSV schema alpha,nmbq).", True
    )
    return _run("sweep-curve", "sweep.png", parser.parse_args(argv))


def main_occupancy(argv: list[str] | None = None) -> int:
    parser = _base_parser(
        "plot_occupancy",
        "Bath occupancy heat map over (t, omega) (CSV schema t,omega,occupancy).",
        False,
    )
    parser.add_argument(
        "--include-low-end",
        action="store_true",
        help="keep modes below the default omega window (high thermal variance)",
    )
    return _run("heatmap", "occupancy.png", parser.parse_args(argv))


def main_fidelity(argv: list[str] | None = None) -> int:
    parser = _base_parser(
        "plot_fidelity",
        "Fidelity traces (t,F); with --energy, system-energy traces (t,E_sys).",
        True,
    )
    parser.add_argument(
        "--energy",
        action="store_true",
        help="inputs are energy CSVs (schema t,E_sys) instead of fidelity",
    )
    args = parser.parse_args(argv)
    kind = "energy" if args.energy else "fidelity"
    return _run(kind, f"{kind}.png", args)


if __name__ == "__main__":
    sys.exit(main_traces())
