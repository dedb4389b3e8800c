"""Plain-text covariance-matrix files.

Format::

    n_modes=<N> basis=<complex|quadrature>
    <2N rows of 2N whitespace-separated entries like 1.5+0j>
"""
from __future__ import annotations

import os
from typing import TextIO

import numpy as np

BASES = ("complex", "quadrature")


def format_state(sigma: np.ndarray, basis: str = "complex") -> str:
    sigma = np.asarray(sigma, dtype=complex)
    if basis not in BASES:
        raise ValueError(f"basis must be one of {BASES}, got {basis!r}")
    dim = sigma.shape[0]
    if sigma.shape != (dim, dim) or dim % 2:
        raise ValueError(f"expected a (2N, 2N) matrix, got shape {sigma.shape}")
    lines = [f"n_modes={dim // 2} basis={basis}"]
    for row in sigma:
        lines.append(" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row))
    return "\n".join(lines) + "\n"


def parse_state(text: str) -> tuple[np.ndarray, str]:
    """Parse the text format; returns ``(sigma, basis)``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty state file")
    header = dict(tok.split("=", 1) for tok in lines[0].split() if "=" in tok)
    try:
        n = int(header["n_modes"])
        basis = header["basis"]
    except (KeyError, ValueError) as exc:
        raise ValueError(f"line 1: malformed header {lines[0]!r}") from exc
    if n < 1 or basis not in BASES:
        raise ValueError(f"line 1: invalid header values n_modes={n} basis={basis}")
    rows = lines[1:]
    if len(rows) != 2 * n:
        raise ValueError(f"expected {2 * n} matrix rows, found {len(rows)}")
    data = np.empty((2 * n, 2 * n), dtype=complex)
    for i, row in enumerate(rows):
        entries = row.split()
        if len(entries) != 2 * n:
            raise ValueError(f"line {i + 2}: expected {2 * n} entries, found {len(entries)}")
        try:
            data[i] = [complex(e) for e in entries]
        except ValueError as exc:
            raise ValueError(f"line {i + 2}: {exc}") from exc
    return data, basis


def write_state(path: str | os.PathLike | TextIO, sigma: np.ndarray, basis: str = "complex") -> None:
    text = format_state(sigma, basis)
    if hasattr(path, "write"):
        path.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def read_state(path: str | os.PathLike) -> tuple[np.ndarray, str]:
    with open(path) as fh:
        return parse_state(fh.read())
