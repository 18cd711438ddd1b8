"""
Figure rendering from validated CSV input.

No physics is computed here: the scripts draw exactly what the simulator
wrote.  Re-rendering the same inputs yields the same image.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .schema import SchemaError, occupancy_grid, read_csv

KINDS = ("trace-family", "sweep-curve", "heatmap", "fidelity", "energy")

#: heatmap frequency window; the low end hides high-variance thermal modes
HEATMAP_OMEGA_RANGE = (1.0, 30.0)

_STYLE = {
    "figure.figsize": (7.0, 4.2),
    "figure.dpi": 130,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "legend.frameon": False,
}


@dataclass
class FigureRecipe:
    kind: str
    inputs: list[str]
    output: str
    labels: list[str] = field(default_factory=list)
    title: str = ""
    include_low_end: bool = False  # heatmaps: keep omega below the window

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise SchemaError(f"unknown figure kind {self.kind!r}; valid: {list(KINDS)}")
        if not self.inputs:
            raise SchemaError("recipe needs at least one input CSV")
        if self.labels and len(self.labels) != len(self.inputs):
            raise SchemaError("labels, when given, must match the number of inputs")
        if self.kind == "heatmap" and len(self.inputs) != 1:
            raise SchemaError("heatmap takes exactly one occupancy CSV")


def _labels(recipe: FigureRecipe) -> list[str]:
    if recipe.labels:
        return recipe.labels
    return [Path(p).stem for p in recipe.inputs]


def _line_figure(recipe: FigureRecipe, schema: str, xlabel: str, ylabel: str) -> None:
    fig, ax = plt.subplots()
    for path, label in zip(recipe.inputs, _labels(recipe)):
        data = read_csv(path, schema)
        ax.plot(data[:, 0], data[:, 1], label=label, linewidth=1.0)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if recipe.title:
        ax.set_title(recipe.title)
    if len(recipe.inputs) > 1 or recipe.labels:
        ax.legend()
    fig.savefig(recipe.output, bbox_inches="tight")
    plt.close(fig)


def _sweep_figure(recipe: FigureRecipe) -> None:
    fig, ax = plt.subplots()
    for path, label in zip(recipe.inputs, _labels(recipe)):
        data = read_csv(path, "sweep")
        ax.plot(data[:, 0], data[:, 1], marker="o", label=label, linewidth=1.0)
    ax.set_xlabel(r"damping factor $\alpha$")
    ax.set_ylabel("NMBQ")
    if recipe.title:
        ax.set_title(recipe.title)
    if len(recipe.inputs) > 1 or recipe.labels:
        ax.legend()
    fig.savefig(recipe.output, bbox_inches="tight")
    plt.close(fig)


def _heatmap_figure(recipe: FigureRecipe) -> None:
    data = read_csv(recipe.inputs[0], "occupancy")
    times, freqs, values = occupancy_grid(data)
    lo, hi = HEATMAP_OMEGA_RANGE
    keep = freqs <= hi
    if not recipe.include_low_end:
        keep &= freqs >= lo
    if not keep.any():
        raise SchemaError("no bath modes inside the heatmap frequency window")
    fig, ax = plt.subplots()
    mesh = ax.pcolormesh(times, freqs[keep], values[:, keep].T, shading="nearest")
    fig.colorbar(mesh, ax=ax, label="occupancy gain")
    ax.set_xlabel("t")
    ax.set_ylabel(r"$\omega_r$")
    if recipe.title:
        ax.set_title(recipe.title)
    fig.savefig(recipe.output, bbox_inches="tight")
    plt.close(fig)


def render(recipe: FigureRecipe) -> Path:
    """Validate inputs against their schema and write the image file."""
    recipe.validate()
    with plt.rc_context(_STYLE):
        if recipe.kind == "trace-family":
            _line_figure(recipe, "trace", "t", "log-negativity")
        elif recipe.kind == "sweep-curve":
            _sweep_figure(recipe)
        elif recipe.kind == "heatmap":
            _heatmap_figure(recipe)
        elif recipe.kind == "fidelity":
            _line_figure(recipe, "fidelity", "t", "fidelity")
        elif recipe.kind == "energy":
            _line_figure(recipe, "energy", "t", "system energy")
    return Path(recipe.output)
