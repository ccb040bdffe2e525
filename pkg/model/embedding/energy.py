"""Quantum energy <H(Q, P)> sampled along KvN evolution."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

import app
from model.embedding.errors import EmbeddingError
from model.embedding.observables import quantum_expectation
from model.phase_space import (Generator, HamiltonianSpec, KvnState, Representation, evolve,
                               to_representation)


@dataclass(frozen=True, eq=False)
class EnergyTrace:
    times: tuple[float, ...]
    values: tuple[float, ...]
    generator: Generator

    def __post_init__(self):
        if len(self.times) != len(self.values):
            raise EmbeddingError("EnergyTrace needs one value per time")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise EmbeddingError("EnergyTrace times must be strictly increasing")

    def absolute_drift(self) -> float:
        """max_t |E(t) - E(0)|."""
        values = np.asarray(self.values)
        return float(np.max(np.abs(values - values[0])))

    def relative_drift(self) -> float:
        """max_t |E(t) - E(0)| / |E(0)|; the absolute drift when E(0) = 0."""
        reference = self.values[0]
        return self.absolute_drift() / (abs(reference) if reference != 0 else 1.0)

    def rows(self) -> list[dict[str, float]]:
        return [{"t": t, "value": v} for t, v in zip(self.times, self.values)]


def energy_trace(initial: KvnState, hamiltonian: HamiltonianSpec, generator: Generator, dt: float,
                 steps: int, every: int = 1) -> tuple[EnergyTrace, KvnState]:
    """Evolve ``initial`` and sample <H(Q, P)> at t = 0 and every ``every`` steps.

    Returns the trace and the final (q, p) state.
    """
    energy = hamiltonian.to_classical()
    state = to_representation(initial, Representation.Q_P)
    times = [0.0]
    values = [quantum_expectation(state, energy)]

    def sample(step: int, current: KvnState) -> None:
        times.append(step * dt)
        values.append(quantum_expectation(current, energy))

    final = evolve(state, hamiltonian, generator, dt, steps, every=every, callback=sample)
    trace = EnergyTrace(tuple(times), tuple(values), generator)
    app.logger.info(f"Energy trace ({generator.value}): {len(times)} samples, "
                    f"relative drift {trace.relative_drift():.3e}")
    return trace, final
