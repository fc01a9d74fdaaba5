"""Readers and writers for the sequence, matrix and step-sequence files."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .dyadic import DyadicStepSeq


def _read(path) -> str:
    return Path(path).read_text(encoding="utf-8")


def _complex_item(v) -> complex:
    if isinstance(v, (list, tuple)):
        if len(v) != 2:
            raise ValueError(f"complex entry must be [re, im], got {v!r}")
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    raise ValueError(f"not a number: {v!r}")


def parse_sequence(text: str, complex_ok: bool = False) -> np.ndarray:
    """A JSON array of numbers (``[re, im]`` pairs allowed when
    ``complex_ok``), or one decimal per line."""
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        if not isinstance(data, list):
            raise ValueError("sequence JSON must be an array")
        if complex_ok:
            arr = np.array([_complex_item(v) for v in data], dtype=complex)
            return arr.real.copy() if not np.any(arr.imag) else arr
        arr = np.array([float(v) for v in data], dtype=float)
    else:
        lines = [ln.strip() for ln in stripped.splitlines() if ln.strip()]
        arr = np.array([float(ln) for ln in lines], dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("sequence contains non-finite values")
    return arr


def load_sequence(path, complex_ok: bool = False) -> np.ndarray:
    return parse_sequence(_read(path), complex_ok)


def parse_matrix(data: dict) -> np.ndarray:
    """``{"dim": n, "entries": [[re, im], ...]}`` in row-major order. Rows of
    pairs (a list of ``n`` lists) are accepted too."""
    dim = int(data["dim"])
    entries = data["entries"]
    if len(entries) == dim and entries and isinstance(entries[0], list) \
            and len(entries[0]) == dim and isinstance(entries[0][0], list):
        flat = [v for row in entries for v in row]
    else:
        flat = entries
    if len(flat) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries, got {len(flat)}")
    return np.array([_complex_item(v) for v in flat], dtype=complex).reshape(dim, dim)


def load_matrix(path) -> np.ndarray:
    return parse_matrix(json.loads(_read(path)))


def matrix_to_json(t: np.ndarray) -> dict:
    t = np.asarray(t, dtype=complex)
    return {"dim": t.shape[0],
            "entries": [[float(v.real), float(v.imag)] for v in t.ravel()]}


def load_generator(path):
    """Either a step sequence (JSON object with ``intervals``) or a plain
    sequence."""
    text = _read(path)
    if text.lstrip().startswith("{"):
        return DyadicStepSeq.from_json(json.loads(text))
    return parse_sequence(text)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, default=_default) + "\n"


def _default(o):
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, (np.floating,)):
        return float(o)
    if isinstance(o, np.bool_):
        return bool(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"not JSON serializable: {type(o).__name__}")
