"""KvN wavefunctions sampled on a phase-space grid."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from model.phase_space.errors import RepresentationError
from model.phase_space.grid import PhaseSpaceGrid

NORM_TOLERANCE = 1e-10


class Representation(Enum):
    """Which pair of commuting operators is diagonal on the amplitude array (axis 0, axis 1)."""
    Q_P = "q,p"
    Q_LAMBDA_P = "q,lambda_p"
    Q_QBAR = "Q,Qbar"

    @property
    def tag(self) -> int:
        """Stable integer code used in snapshot headers."""
        return list(Representation).index(self)

    @classmethod
    def from_tag(cls, tag: int) -> Representation:
        members = list(cls)
        if not 0 <= tag < len(members):
            raise RepresentationError(f"Unknown representation tag {tag}")
        return members[tag]


@dataclass(frozen=True, eq=False)
class KvnState:
    """Immutable amplitude field; every operation returns a new state.

    The representation tag changes only through the transforms in
    ``model.phase_space.transforms``.
    """
    representation: Representation
    amplitudes: np.ndarray
    grid: PhaseSpaceGrid
    hbar: float = 1.0

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=np.complex128, copy=True)
        if amplitudes.shape != (self.grid.n_q, self.grid.n_p):
            raise RepresentationError(
                f"Amplitude shape {amplitudes.shape} does not match grid {self.grid.n_q}x{self.grid.n_p}")
        if not self.hbar > 0:
            raise RepresentationError(f"hbar must be positive, got {self.hbar}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def normalized(cls, representation: Representation, amplitudes: np.ndarray, grid: PhaseSpaceGrid,
                   hbar: float = 1.0) -> KvnState:
        """Build a state and rescale it to unit KvN norm."""
        state = cls(representation, amplitudes, grid, hbar)
        norm = state.norm_squared()
        if not norm > 0:
            raise RepresentationError("Cannot normalize a zero state")
        return state.with_amplitudes(state.amplitudes / np.sqrt(norm))

    def with_amplitudes(self, amplitudes: np.ndarray, representation: Representation | None = None) -> KvnState:
        return KvnState(representation or self.representation, amplitudes, self.grid, self.hbar)

    @property
    def cell_area(self) -> float:
        if self.representation is Representation.Q_P:
            return self.grid.dq * self.grid.dp
        if self.representation is Representation.Q_LAMBDA_P:
            return self.grid.dq * self.grid.dlambda_p
        return self.grid.bopp_spacing ** 2

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        """Sample coordinates along axis 0 and axis 1 for the current representation."""
        if self.representation is Representation.Q_P:
            return self.grid.q, self.grid.p
        if self.representation is Representation.Q_LAMBDA_P:
            return self.grid.q, self.grid.lambda_p
        return self.grid.bopp_axis.values, self.grid.bopp_axis.values

    def norm_squared(self) -> float:
        """KvN norm <psi|psi> = integral |psi|^2."""
        return float(np.sum(np.abs(self.amplitudes) ** 2) * self.cell_area)

    def inner(self, other: KvnState) -> complex:
        """<self|other>; both states must share grid, hbar and representation."""
        self.require(other.representation)
        if other.grid != self.grid:
            raise RepresentationError("Inner product of states on different grids")
        return complex(np.vdot(self.amplitudes, other.amplitudes) * self.cell_area)

    def require(self, representation: Representation, hbar: float | None = None) -> None:
        """
        Raises:
            RepresentationError: If the representation or hbar does not match.
        """
        if self.representation is not representation:
            raise RepresentationError(
                f"Expected a state in the ({representation.value}) representation, got ({self.representation.value})")
        if hbar is not None and not np.isclose(hbar, self.hbar, rtol=1e-12, atol=0.0):
            raise RepresentationError(f"hbar mismatch: state carries {self.hbar}, operation uses {hbar}")

    def check_normalized(self, tolerance: float = NORM_TOLERANCE) -> None:
        deviation = abs(self.norm_squared() - 1.0)
        if deviation > tolerance:
            raise RepresentationError(f"State norm deviates from 1 by {deviation:.3e} (tolerance {tolerance:.1e})")

    def max_difference(self, other: KvnState) -> float:
        self.require(other.representation)
        return float(np.max(np.abs(self.amplitudes - other.amplitudes)))
