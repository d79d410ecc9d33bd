"""JSON wire formats for matrices and suite reports.

A matrix travels as ``{"rows": r, "cols": c, "data": [[re, im], ...]}``
with the data row-major; complex entries are [re, im] pairs so no string
parsing is ever involved.  Reports embed witness matrices in the same
format, which keeps them replayable: Python's json round-trips floats
exactly (shortest repr), so a reloaded witness reproduces its recorded
slack bit for bit.
"""

from __future__ import annotations

import json

import numpy as np

from .exceptions import DimensionMismatchError


def matrix_to_dict(m) -> dict:
    m = np.atleast_2d(np.asarray(m, dtype=np.complex128))
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in m.ravel()],
    }


def matrix_from_dict(d) -> np.ndarray:
    try:
        rows, cols, data = int(d["rows"]), int(d["cols"]), d["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DimensionMismatchError(f"malformed matrix object: {exc}") from exc
    if rows <= 0 or cols <= 0:
        raise DimensionMismatchError("matrix dimensions must be positive")
    if len(data) != rows * cols:
        raise DimensionMismatchError(
            f"data length {len(data)} does not match {rows}x{cols}"
        )
    out = np.empty(rows * cols, dtype=np.complex128)
    for i, pair in enumerate(data):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise DimensionMismatchError(f"entry {i} is not an [re, im] pair")
        out[i] = complex(float(pair[0]), float(pair[1]))
    if not np.all(np.isfinite(out.real)) or not np.all(np.isfinite(out.imag)):
        raise DimensionMismatchError("matrix entries must be finite")
    return out.reshape(rows, cols)


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_dict(json.load(fh))


def save_matrix(path, m) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_dict(m), fh, indent=2, sort_keys=True)
        fh.write("\n")


def dump_report(report_dict: dict) -> str:
    """Canonical byte-stable encoding used for report files."""
    return json.dumps(report_dict, indent=2, sort_keys=True) + "\n"
