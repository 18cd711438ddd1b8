"""
Strict readers for the simulator's CSV schemas.

Schemas (exact headers):
  trace:     t,E
  sweep:     alpha,nmbq
  occupancy: t,omega,occupancy
  fidelity:  t,F
  energy:    t,E_sys
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

SCHEMAS = {
    "trace": ("t", "E"),
    "sweep": ("alpha", "nmbq"),
    "occupancy": ("t", "omega", "occupancy"),
    "fidelity": ("t", "F"),
    "energy": ("t", "E_sys"),
}


class SchemaError(ValueError):
    """CSV input does not match the documented schema."""


def read_csv(path: str | Path, schema: str) -> np.ndarray:
    """Read a CSV against a named schema, returning an (n_rows, n_cols) array.

    Raises SchemaError naming the offending column on any mismatch.
    """
    expected = SCHEMAS[schema]
    path = Path(path)
    if not path.exists():
        raise SchemaError(f"{path}: file does not exist")
    lines = path.read_text().strip().splitlines()
    if not lines:
        raise SchemaError(f"{path}: file is empty")
    header = tuple(col.strip() for col in lines[0].split(","))
    if header != expected:
        missing = [c for c in expected if c not in header]
        extra = [c for c in header if c not in expected]
        if missing:
            raise SchemaError(
                f"{path}: missing column {missing[0]!r} (expected header {','.join(expected)})"
            )
        if extra:
            raise SchemaError(
                f"{path}: unexpected column {extra[0]!r} (expected header {','.join(expected)})"
            )
        raise SchemaError(
            f"{path}: columns out of order (expected header {','.join(expected)})"
        )
    if len(lines) < 2:
        raise SchemaError(f"{path}: no data rows")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != len(expected):
            raise SchemaError(
                f"{path}: line {lineno} has {len(parts)} fields, expected {len(expected)}"
            )
        try:
            rows.append([float(p) for p in parts])
        except ValueError:
            bad = next(p for p in parts if not _is_float(p))
            col = expected[parts.index(bad)]
            raise SchemaError(
                f"{path}: line {lineno}, column {col!r}: not a number ({bad!r})"
            ) from None
    return np.asarray(rows)


def _is_float(text: str) -> bool:
    try:
        float(text)
        return True
    except ValueError:
        return False


def occupancy_grid(data: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pivot long-format occupancy rows into (times, freqs, values[t, w])."""
    times = np.unique(data[:, 0])
    freqs = np.unique(data[:, 1])
    if len(times) * len(freqs) != data.shape[0]:
        raise SchemaError("occupancy rows do not form a complete (t, omega) grid")
    order = np.lexsort((data[:, 1], data[:, 0]))
    values = data[order, 2].reshape(len(times), len(freqs))
    return times, freqs, values
