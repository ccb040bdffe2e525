"""Schmidt decomposition of (Q, Qbar) amplitude fields."""
from __future__ import annotations

import numpy as np

from model.embedding.errors import EntangledStateError
from model.embedding.states import QuantumState1D
from model.phase_space import KvnState, Representation

ENTANGLEMENT_THRESHOLD = 1e-6


def schmidt_spectrum(state: KvnState) -> np.ndarray:
    """Singular values of the amplitude matrix, descending, with squares summing to 1.

    Raises:
        RepresentationError: If the state is not in (Q, Qbar).
    """
    state.require(Representation.Q_QBAR)
    values = np.linalg.svd(np.asarray(state.amplitudes), compute_uv=False)
    return values / np.sqrt(np.sum(values ** 2))


def extract_q_factor(state: KvnState, threshold: float = ENTANGLEMENT_THRESHOLD) -> QuantumState1D:
    """Dominant left singular vector as a normalized psi(Q).

    The global phase is fixed by making the largest-magnitude component real and positive.

    Raises:
        EntangledStateError: If the second Schmidt value exceeds ``threshold``.
    """
    state.require(Representation.Q_QBAR)
    u, values, _ = np.linalg.svd(np.asarray(state.amplitudes), full_matrices=False)
    spectrum = values / np.sqrt(np.sum(values ** 2))
    if spectrum.size > 1 and spectrum[1] > threshold:
        raise EntangledStateError(spectrum, threshold)
    vector = u[:, 0]
    peak = vector[np.argmax(np.abs(vector))]
    vector = vector * (np.conj(peak) / abs(peak))
    return QuantumState1D.normalized(vector, state.grid, state.hbar)
