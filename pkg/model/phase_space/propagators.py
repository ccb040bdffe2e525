"""Strang split-operator propagators for the Liouvillian and the Moyal generator.

Both generators share the kinetic part -i (p/m) d_q, applied in (lambda_q, p) as the phase
exp(-i lambda_q p dt / m). They differ in the potential part, applied in (q, lambda_p):

    liouville: exp(+i lambda_p V'(q) dt)                 (shear p -> p + V'(q) dt)
    moyal:     exp(-i dt [V(q - hbar lambda_p/2) - V(q + hbar lambda_p/2)] / hbar)

The Moyal multiplier resums the odd hbar^2 series of the generator exactly; for quadratic V
the two multipliers coincide. Steps are V/2 - K - V/2, and consecutive half potential steps
are fused when several steps run back to back.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable

import numpy as np
import scipy.fft

import app
from model.phase_space.hamiltonian import HamiltonianSpec
from model.phase_space.grid import PhaseSpaceGrid
from model.phase_space.state import KvnState, Representation

DEFAULT_DT = 1e-3


class Generator(Enum):
    LIOUVILLE = "liouville"
    MOYAL = "moyal"


@dataclass(frozen=True)
class SplitOperatorPropagator:
    """Cached phase multipliers for one (grid, H, dt, generator, hbar) combination."""
    grid: PhaseSpaceGrid
    hamiltonian: HamiltonianSpec
    dt: float
    generator: Generator
    hbar: float = 1.0
    workers: int | None = None

    def __post_init__(self):
        q = self.grid.q[:, None]
        lam_p = self.grid.p_axis.fft_frequencies()[None, :]
        lam_q = self.grid.q_axis.fft_frequencies()[:, None]
        p = self.grid.p[None, :]
        object.__setattr__(self, "_half_potential", self._potential_phase(q, lam_p, self.dt / 2))
        object.__setattr__(self, "_full_potential", self._potential_phase(q, lam_p, self.dt))
        object.__setattr__(self, "_kinetic", np.exp(-1j * lam_q * p * self.dt / self.hamiltonian.mass))

    def _potential_phase(self, q: np.ndarray, lam_p: np.ndarray, tau: float) -> np.ndarray:
        H = self.hamiltonian
        if self.generator is Generator.LIOUVILLE:
            return np.exp(1j * lam_p * H.force_gradient(q) * tau)
        shift = self.hbar * lam_p / 2
        difference = H.potential_at(q - shift) - H.potential_at(q + shift)
        return np.exp(-1j * tau * difference / self.hbar)

    def _potential(self, psi: np.ndarray, multiplier: np.ndarray) -> np.ndarray:
        spectrum = scipy.fft.fft(psi, axis=1, workers=self.workers)
        return scipy.fft.ifft(spectrum * multiplier, axis=1, workers=self.workers)

    def _kinetic_step(self, psi: np.ndarray) -> np.ndarray:
        spectrum = scipy.fft.fft(psi, axis=0, workers=self.workers)
        return scipy.fft.ifft(spectrum * self._kinetic, axis=0, workers=self.workers)

    def advance(self, psi: np.ndarray, steps: int = 1) -> np.ndarray:
        """Apply ``steps`` Strang steps to a raw (q, p) amplitude array."""
        if steps < 1:
            return psi
        psi = self._potential(psi, self._half_potential)
        for step in range(steps):
            psi = self._kinetic_step(psi)
            last = step == steps - 1
            psi = self._potential(psi, self._half_potential if last else self._full_potential)
        return psi

    def step(self, state: KvnState, steps: int = 1) -> KvnState:
        state.require(Representation.Q_P)
        return state.with_amplitudes(self.advance(np.asarray(state.amplitudes), steps))


@lru_cache(maxsize=32)
def get_propagator(grid: PhaseSpaceGrid, hamiltonian: HamiltonianSpec, dt: float, generator: Generator,
                   hbar: float = 1.0) -> SplitOperatorPropagator:
    workers = app.get_max_threads()
    app.logger.info(f"Building {generator.value} propagator on {grid.describe()} with dt={dt:g}, hbar={hbar:g}")
    return SplitOperatorPropagator(grid, hamiltonian, dt, generator, hbar, workers)


def liouville_step(state: KvnState, hamiltonian: HamiltonianSpec, dt: float = DEFAULT_DT) -> KvnState:
    """One Strang step of i d/dt psi = L psi.

    Raises:
        RepresentationError: If the state is not in (q, p).
    """
    state.require(Representation.Q_P)
    return get_propagator(state.grid, hamiltonian, dt, Generator.LIOUVILLE, state.hbar).step(state)


def moyal_step(state: KvnState, hamiltonian: HamiltonianSpec, dt: float = DEFAULT_DT,
               hbar: float | None = None) -> KvnState:
    """One Strang step of i d/dt psi = G psi.

    Raises:
        RepresentationError: If the state is not in (q, p) or carries a different hbar.
    """
    hbar = state.hbar if hbar is None else hbar
    state.require(Representation.Q_P, hbar)
    return get_propagator(state.grid, hamiltonian, dt, Generator.MOYAL, hbar).step(state)


def evolve(state: KvnState, hamiltonian: HamiltonianSpec, generator: Generator, dt: float, steps: int,
           every: int = 0, callback: Callable[[int, KvnState], None] | None = None) -> KvnState:
    """Run ``steps`` steps, calling ``callback(step, state)`` every ``every`` steps and at the end."""
    state.require(Representation.Q_P)
    propagator = get_propagator(state.grid, hamiltonian, dt, generator, state.hbar)
    done = 0
    chunk = every if every > 0 else steps
    while done < steps:
        count = min(chunk, steps - done)
        state = propagator.step(state, count)
        done += count
        if callback is not None:
            callback(done, state)
    return state
