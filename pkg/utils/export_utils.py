"""CSV exports: energy traces, Schmidt spectra, marginals and timings."""
from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from model.embedding import EnergyTrace
from model.phase_space import KvnState, Representation, marginals, to_representation

ENERGY_COLUMNS = ("t", "value")
SCHMIDT_COLUMNS = ("t", "k", "sigma_k")
MARGINAL_COLUMNS = ("axis", "x", "density")
TIMING_COLUMNS = ("stage", "seconds")


def _number(value: float) -> str:
    return repr(float(value))


def write_rows(path: str | Path, columns: tuple[str, ...], rows: Iterable[Mapping[str, object]]) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _number(v) if isinstance(v, (float, np.floating)) else v for k, v in row.items()})
    return path


def read_rows(path: str | Path) -> list[dict[str, str]]:
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


def write_energy_trace(trace: EnergyTrace, path: str | Path) -> Path:
    return write_rows(path, ENERGY_COLUMNS, trace.rows())


def write_schmidt_spectra(samples: Iterable[tuple[float, np.ndarray]], path: str | Path, keep: int = 8) -> Path:
    """One row per (time, index) for the leading ``keep`` Schmidt values."""
    rows = ({"t": t, "k": k, "sigma_k": float(sigma)}
            for t, spectrum in samples for k, sigma in enumerate(spectrum[:keep]))
    return write_rows(path, SCHMIDT_COLUMNS, rows)


def write_marginals(state: KvnState, path: str | Path) -> Path:
    """|psi|^2 integrated over p (axis=q) and over q (axis=p)."""
    state = to_representation(state, Representation.Q_P)
    rho_q, rho_p = marginals(state)
    rows = [{"axis": "q", "x": x, "density": d} for x, d in zip(state.grid.q, rho_q)]
    rows += [{"axis": "p", "x": x, "density": d} for x, d in zip(state.grid.p, rho_p)]
    return write_rows(path, MARGINAL_COLUMNS, rows)


def write_timings(timings: Mapping[str, float], path: str | Path) -> Path:
    return write_rows(path, TIMING_COLUMNS, ({"stage": k, "seconds": v} for k, v in timings.items()))
