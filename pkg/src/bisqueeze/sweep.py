"""Parameter sweeps over ``r = R_ab = R_bc`` written as CSV.

Config files are flat ``key = value`` text, ``#`` starts a comment::

    omega_a = 4.99e9      # Hz
    omega_b = 5e9
    omega_c = 5.01e9
    temperature = 0.015   # K
    r_min = 0
    r_max = 2
    r_steps = 41
    theta = 0             # homodyne angle of the idler measurement
    outputs = N_abc, N_ab, N_out   # optional subset of columns
"""
from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, fields, replace
from typing import Mapping, Optional

import numpy as np

from .generation import PumpParameters, ThermalSpec, bisqueezed_state
from .homodyne import homodyne_condition
from .measures import (
    bipartition_negativities,
    first_order_coherence,
    negativity,
    pair_negativity,
)
from .symplectic import partial_trace

COLUMNS = (
    "r",
    "N_abc",
    "N_a-bc",
    "N_b-ac",
    "N_c-ab",
    "N_ab",
    "N_bc",
    "N_ac",
    "adagc",
    "C_ac",
    "N_out",
    "adagc_out",
    "C_out",
    "sigma_out_11",
    "sigma_out_22",
    "sigma_out_12",
    "sigma_out_13",
    "sigma_out_14",
    "sigma_out_24",
)

THREADS_ENV = "BISQUEEZE_THREADS"


class ConfigError(ValueError):
    """Invalid sweep configuration; the message names the offending line or field."""


@dataclass(frozen=True)
class SweepConfig:
    """Sweep settings. Frequencies are in Hz, the temperature in kelvin."""

    omega_a: float = 4.99e9
    omega_b: float = 5.0e9
    omega_c: float = 5.01e9
    temperature: float = 0.015
    r_min: float = 0.0
    r_max: float = 2.0
    r_steps: int = 41
    theta: float = 0.0
    outputs: tuple[str, ...] = field(default=COLUMNS)

    def __post_init__(self):
        for name in ("omega_a", "omega_b", "omega_c"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name}: frequency must be positive, got {getattr(self, name)}")
        if not self.temperature >= 0:
            raise ConfigError(f"temperature: must be non-negative, got {self.temperature}")
        if self.r_steps < 2:
            raise ConfigError(f"r_steps: must be at least 2, got {self.r_steps}")
        if not self.r_max >= self.r_min:
            raise ConfigError("r_max: must not be below r_min")
        unknown = [c for c in self.outputs if c not in COLUMNS]
        if unknown:
            raise ConfigError(f"outputs: unknown column(s) {', '.join(unknown)}")
        if not self.outputs:
            raise ConfigError("outputs: at least one column is required")

    @property
    def thermal_spec(self) -> ThermalSpec:
        return ThermalSpec.from_hz(self.omega_a, self.omega_b, self.omega_c, self.temperature)

    def r_values(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.r_steps)


_FIELD_TYPES = {f.name: f.type for f in fields(SweepConfig)}


def _convert(key: str, value: str):
    kind = _FIELD_TYPES[key]
    if key == "outputs":
        cols = tuple(c.strip() for c in value.split(",") if c.strip())
        # r is always written first
        return ("r",) + tuple(c for c in cols if c != "r")
    try:
        return int(value) if kind == "int" else float(value)
    except ValueError:
        raise ValueError(f"expected {kind}, got {value!r}") from None


def parse_config(text: str) -> dict:
    """Parse ``key = value`` lines into a dict of typed values."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _FIELD_TYPES:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = _convert(key, value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: {key}: {exc}") from None
    return values


def load_config(path: Optional[str] = None, overrides: Optional[Mapping[str, object]] = None) -> SweepConfig:
    """Build a config from an optional file, then apply ``overrides`` (e.g. CLI flags)."""
    values = {}
    if path is not None:
        with open(path) as fh:
            values.update(parse_config(fh.read()))
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in _FIELD_TYPES:
            raise ConfigError(f"unknown setting {key!r}")
        values[key] = _convert(key, value) if isinstance(value, str) else value
    return SweepConfig(**values)


def sweep_row(r: float, spec: ThermalSpec, theta: float = 0.0) -> dict[str, float]:
    """All sweep columns at one squeezing value."""
    sigma = bisqueezed_state(PumpParameters(r, r), spec)
    parts = bipartition_negativities(sigma)
    pre = first_order_coherence(sigma, 0, 2)
    out = homodyne_condition(sigma, measured=1, theta=theta)
    post = first_order_coherence(out, 0, 1)
    s = out.real
    row = {
        "r": float(r),
        "N_abc": float(np.prod(list(parts.values())) ** (1 / 3)),
        **{f"N_{k}": v for k, v in parts.items()},
        "N_ab": pair_negativity(sigma, "ab"),
        "N_bc": pair_negativity(sigma, "bc"),
        "N_ac": negativity(partial_trace(sigma, [0, 2])).negativity,
        "adagc": pre.pair_coherence,
        "C_ac": pre.relative_entropy_coherence,
        "N_out": negativity(out).negativity,
        "adagc_out": post.pair_coherence,
        "C_out": post.relative_entropy_coherence,
        "sigma_out_11": s[0, 0],
        "sigma_out_22": s[1, 1],
        "sigma_out_12": s[0, 1],
        "sigma_out_13": s[0, 2],
        "sigma_out_14": s[0, 3],
        "sigma_out_24": s[1, 3],
    }
    return {k: float(v) for k, v in row.items()}


def thread_count() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ConfigError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        return max(1, n)
    return os.cpu_count() or 1


def run_sweep(config: SweepConfig) -> list[dict[str, float]]:
    """Evaluate every grid point; rows come back in grid order."""
    spec = config.thermal_spec
    rs = config.r_values()
    with ThreadPoolExecutor(max_workers=min(thread_count(), len(rs))) as pool:
        rows = list(pool.map(lambda r: sweep_row(r, spec, config.theta), rs))
    return [{k: row[k] for k in config.outputs} for row in rows]


def format_csv(rows: list[dict[str, float]], columns=None) -> str:
    columns = list(columns or (rows[0].keys() if rows else COLUMNS))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([f"{row[c]:.12g}" for c in columns])
    return buf.getvalue()


def write_csv(path: str, rows: list[dict[str, float]], columns=None) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(format_csv(rows, columns))


def with_overrides(config: SweepConfig, **changes) -> SweepConfig:
    return replace(config, **{k: v for k, v in changes.items() if v is not None})
