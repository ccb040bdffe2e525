"""Classical expectation values and the classical-phase scramble."""
from __future__ import annotations

import numpy as np

from model.algebra import ClassicalPolynomial
from model.phase_space.state import KvnState, Representation


def expectation_classical(state: KvnState, f: ClassicalPolynomial) -> float:
    """integral f(q, p) |psi(q, p)|^2 dq dp by midpoint quadrature on the grid.

    Raises:
        RepresentationError: If the state is not in (q, p).
    """
    state.require(Representation.Q_P)
    q, p = np.meshgrid(state.grid.q, state.grid.p, indexing="ij")
    density = np.abs(state.amplitudes) ** 2
    return float(np.sum(f.evaluate(q, p) * density) * state.cell_area)


def marginals(state: KvnState) -> tuple[np.ndarray, np.ndarray]:
    """Position and momentum densities of a (q, p) state."""
    state.require(Representation.Q_P)
    density = np.abs(state.amplitudes) ** 2
    return density.sum(axis=1) * state.grid.dp, density.sum(axis=0) * state.grid.dq


def phase_scramble(state: KvnState, seed: int) -> KvnState:
    """Multiply by a seeded pseudo-random pure phase; |psi| is unchanged."""
    state.require(Representation.Q_P)
    rng = np.random.default_rng(seed)
    phases = rng.uniform(0.0, 2 * np.pi, size=state.amplitudes.shape)
    return state.with_amplitudes(state.amplitudes * np.exp(1j * phases))
