"""Method-of-characteristics reference solution for the Liouville equation.

Used only to cross-check the split-operator propagator: psi(phi, t) = psi(flow_{-t}(phi), 0)
with the backward flow integrated by velocity Verlet and psi_0 sampled by cubic-spline
interpolation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

import app
from model.phase_space.hamiltonian import HamiltonianSpec
from model.phase_space.state import KvnState, Representation

DEFAULT_ORACLE_DT = 1e-3


@dataclass(frozen=True, eq=False)
class CharacteristicsResult:
    state: KvnState
    coverage: float
    outside: np.ndarray

    @property
    def complete(self) -> bool:
        return self.coverage == 1.0


def backward_flow(q: np.ndarray, p: np.ndarray, hamiltonian: HamiltonianSpec, t: float,
                  max_step: float = DEFAULT_ORACLE_DT) -> tuple[np.ndarray, np.ndarray]:
    """Foot points flow_{-t}(q, p) from velocity Verlet with step <= max_step."""
    steps = max(1, math.ceil(abs(t) / max_step))
    h = -t / steps
    m = hamiltonian.mass
    q = np.array(q, dtype=float, copy=True)
    p = np.array(p, dtype=float, copy=True)
    force = -hamiltonian.force_gradient(q)
    for _ in range(steps):
        p += 0.5 * h * force
        q += h * p / m
        force = -hamiltonian.force_gradient(q)
        p += 0.5 * h * force
    return q, p


def characteristics_oracle(state: KvnState, hamiltonian: HamiltonianSpec, t: float,
                           max_step: float = DEFAULT_ORACLE_DT) -> CharacteristicsResult:
    """Transport ``state`` along the Hamiltonian flow for time t.

    Foot points that leave the grid are zeroed and flagged in ``outside``; ``coverage`` is the
    fraction of samples whose foot point stayed inside.

    Raises:
        RepresentationError: If the state is not in (q, p).
    """
    state.require(Representation.Q_P)
    grid = state.grid
    q, p = np.meshgrid(grid.q, grid.p, indexing="ij")
    q_foot, p_foot = backward_flow(q, p, hamiltonian, t, max_step)

    outside = ((q_foot < grid.q_min) | (q_foot >= grid.q_max)
               | (p_foot < grid.p_min) | (p_foot >= grid.p_max))
    coordinates = np.array([(q_foot - grid.q_min) / grid.dq, (p_foot - grid.p_min) / grid.dp])

    amplitudes = np.asarray(state.amplitudes)
    sampled = (ndimage.map_coordinates(amplitudes.real, coordinates, order=3, mode="grid-wrap")
               + 1j * ndimage.map_coordinates(amplitudes.imag, coordinates, order=3, mode="grid-wrap"))
    sampled[outside] = 0.0

    coverage = 1.0 - float(np.count_nonzero(outside)) / outside.size
    if coverage < 1.0:
        app.logger.warning(f"Characteristics oracle: {np.count_nonzero(outside)} foot points left the grid "
                           f"(coverage {coverage:.4f})")
    outside.setflags(write=False)
    return CharacteristicsResult(state.with_amplitudes(sampled), coverage, outside)
