"""Gaussian initial states."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from model.phase_space.errors import GridConfigurationError
from model.phase_space.grid import PhaseSpaceGrid
from model.phase_space.state import KvnState, Representation
from model.phase_space.transforms import to_representation

BOUNDARY_DECAY = 1e-12


@dataclass(frozen=True)
class GaussianParams:
    """|psi|^2 is a Gaussian with standard deviations (sigma_q, sigma_p) along axes rotated by ``angle``."""
    q0: float = 0.0
    p0: float = 0.0
    sigma_q: float = 1.0
    sigma_p: float = 1.0
    angle: float = 0.0

    def __post_init__(self):
        if not (self.sigma_q > 0 and self.sigma_p > 0):
            raise GridConfigurationError(f"Gaussian widths must be positive, got ({self.sigma_q}, {self.sigma_p})")

    def amplitude(self, q: np.ndarray, p: np.ndarray) -> np.ndarray:
        dq, dp = q - self.q0, p - self.p0
        c, s = math.cos(self.angle), math.sin(self.angle)
        xi = c * dq + s * dp
        eta = -s * dq + c * dp
        return np.exp(-xi ** 2 / (4 * self.sigma_q ** 2) - eta ** 2 / (4 * self.sigma_p ** 2))


def _check_boundary(amplitudes: np.ndarray, grid: PhaseSpaceGrid) -> None:
    edges = {
        f"q_min = {grid.q_min:g}": amplitudes[0, :],
        f"q_max = {grid.q_max:g}": amplitudes[-1, :],
        f"p_min = {grid.p_min:g}": amplitudes[:, 0],
        f"p_max = {grid.p_max:g}": amplitudes[:, -1],
    }
    for name, edge in edges.items():
        peak = float(np.max(np.abs(edge)))
        if peak >= BOUNDARY_DECAY:
            raise GridConfigurationError(
                f"Initial state does not decay at the grid boundary {name}: |psi| = {peak:.3e} "
                f"(must stay below {BOUNDARY_DECAY:.0e}); widen that extent or narrow the Gaussian")


def init_gaussian(grid: PhaseSpaceGrid, params: GaussianParams,
                  representation: Representation = Representation.Q_P, hbar: float = 1.0) -> KvnState:
    """Normalized Gaussian built in (q, p), then moved to ``representation``.

    Raises:
        GridConfigurationError: If the amplitude at any grid edge is not below 1e-12.
    """
    q, p = np.meshgrid(grid.q, grid.p, indexing="ij")
    state = KvnState.normalized(Representation.Q_P, params.amplitude(q, p), grid, hbar)
    _check_boundary(state.amplitudes, grid)
    return to_representation(state, representation)
