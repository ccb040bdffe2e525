"""Wavefunctions of the embedded quantum Hilbert space and product KvN states."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from model.embedding.errors import GridMismatchError
from model.phase_space import Axis, KvnState, PhaseSpaceGrid, Representation

NORM_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class QuantumState1D:
    """psi(Q) sampled on the grid's Q axis (the same axis serves Qbar)."""
    amplitudes: np.ndarray
    grid: PhaseSpaceGrid
    hbar: float = 1.0

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=np.complex128, copy=True)
        if amplitudes.shape != (self.grid.n_q,):
            raise GridMismatchError(f"Expected {self.grid.n_q} amplitudes, got shape {amplitudes.shape}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def normalized(cls, amplitudes: np.ndarray, grid: PhaseSpaceGrid, hbar: float = 1.0) -> QuantumState1D:
        state = cls(amplitudes, grid, hbar)
        return cls(state.amplitudes / np.sqrt(state.norm_squared()), grid, hbar)

    @property
    def axis(self) -> Axis:
        return self.grid.bopp_axis

    @property
    def coordinates(self) -> np.ndarray:
        return self.axis.values

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2) * self.axis.spacing)

    def inner(self, other: QuantumState1D) -> complex:
        check_compatible(self, other)
        return complex(np.vdot(self.amplitudes, other.amplitudes) * self.axis.spacing)

    def with_amplitudes(self, amplitudes: np.ndarray) -> QuantumState1D:
        return QuantumState1D(amplitudes, self.grid, self.hbar)


def check_compatible(a: QuantumState1D, b: QuantumState1D) -> None:
    """
    Raises:
        GridMismatchError: If the two states differ in grid or hbar.
    """
    if a.grid != b.grid:
        raise GridMismatchError(f"States live on different grids: {a.grid.describe()} vs {b.grid.describe()}")
    if not np.isclose(a.hbar, b.hbar, rtol=1e-12, atol=0.0):
        raise GridMismatchError(f"States carry different hbar: {a.hbar} vs {b.hbar}")


def fidelity(a: QuantumState1D, b: QuantumState1D) -> float:
    """|<a|b>|^2 / (<a|a><b|b>); insensitive to global phase and normalization."""
    overlap = a.inner(b)
    return float(abs(overlap) ** 2 / (a.norm_squared() * b.norm_squared()))


def gaussian_wavepacket(grid: PhaseSpaceGrid, hbar: float = 1.0, center: float = 0.0, width: float = 1.0,
                        momentum: float = 0.0) -> QuantumState1D:
    """psi(Q) proportional to exp(-(Q - center)^2 / (2 width^2) + i momentum Q / hbar).

    ``width`` 1 with m = omega = hbar = 1 is the harmonic-oscillator coherent-state width.
    """
    if not width > 0:
        raise ValueError(f"width must be positive, got {width}")
    Q = grid.bopp_axis.values
    amplitudes = np.exp(-(Q - center) ** 2 / (2 * width ** 2) + 1j * momentum * Q / hbar)
    return QuantumState1D.normalized(amplitudes, grid, hbar)


@dataclass(frozen=True, eq=False)
class ProductState:
    """psi(Q) chi(Qbar): an element of the invariant subspace fixed by chi."""
    q_factor: QuantumState1D
    qbar_factor: QuantumState1D

    def __post_init__(self):
        check_compatible(self.q_factor, self.qbar_factor)

    @property
    def joint_norm(self) -> float:
        return self.q_factor.norm_squared() * self.qbar_factor.norm_squared()


def build_product_state(psi: QuantumState1D, chi: QuantumState1D) -> KvnState:
    """amplitudes(Q, Qbar) = psi(Q) chi(Qbar) in the (Q, Qbar) representation.

    Raises:
        GridMismatchError: If psi and chi differ in grid or hbar.
        GridConfigurationError: If the grid is not aligned for the (Q, Qbar) representation.
    """
    product = ProductState(psi, chi)
    psi.grid.check_shear_alignment(psi.hbar)
    amplitudes = np.outer(product.q_factor.amplitudes, product.qbar_factor.amplitudes)
    return KvnState(Representation.Q_QBAR, amplitudes, psi.grid, psi.hbar)
