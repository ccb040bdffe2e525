"""Split-operator Schroedinger propagator on the Q axis.

Kept on numpy.fft and its own multipliers so it shares no code with the phase-space
propagators it is used to validate.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from model.embedding.states import QuantumState1D
from model.phase_space import HamiltonianSpec


@dataclass(frozen=True, eq=False)
class SchrodingerPropagator:
    """Strang step V/2 - T - V/2 for i hbar d/dt psi = [-hbar^2/(2m) d^2/dQ^2 + V(Q)] psi."""
    hamiltonian: HamiltonianSpec
    coordinates: np.ndarray
    spacing: float
    hbar: float
    dt: float

    def __post_init__(self):
        n = self.coordinates.size
        k = 2 * np.pi * np.fft.fftfreq(n, self.spacing)
        potential = self.hamiltonian.potential_at(self.coordinates)
        object.__setattr__(self, "_half_potential", np.exp(-0.5j * self.dt * potential / self.hbar))
        object.__setattr__(self, "_kinetic",
                           np.exp(-1j * self.dt * self.hbar * k ** 2 / (2 * self.hamiltonian.mass)))

    @classmethod
    def for_state(cls, psi: QuantumState1D, hamiltonian: HamiltonianSpec, dt: float) -> SchrodingerPropagator:
        return cls(hamiltonian, psi.coordinates, psi.axis.spacing, psi.hbar, dt)

    def advance(self, amplitudes: np.ndarray, steps: int = 1) -> np.ndarray:
        psi = np.asarray(amplitudes, dtype=np.complex128)
        for _ in range(steps):
            psi = self._half_potential * psi
            psi = np.fft.ifft(self._kinetic * np.fft.fft(psi))
            psi = self._half_potential * psi
        return psi


def schrodinger_oracle_step(psi: QuantumState1D, hamiltonian: HamiltonianSpec, dt: float) -> QuantumState1D:
    """One Strang step of the ordinary Schroedinger equation."""
    return schrodinger_evolve(psi, hamiltonian, dt, 1)


def schrodinger_evolve(psi: QuantumState1D, hamiltonian: HamiltonianSpec, dt: float, steps: int) -> QuantumState1D:
    propagator = SchrodingerPropagator.for_state(psi, hamiltonian, dt)
    return psi.with_amplitudes(propagator.advance(psi.amplitudes, steps))
