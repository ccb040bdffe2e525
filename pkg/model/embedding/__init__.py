"""Embedding of ordinary quantum mechanics in the (Q, Qbar) representation of KvN states."""

from .checks import momentum_representation_check, momentum_route_expectation, redundancy_check
from .energy import EnergyTrace, energy_trace
from .errors import EmbeddingError, EntangledStateError, GridMismatchError
from .observables import apply_quantum_observable, quantum_expectation
from .schmidt import ENTANGLEMENT_THRESHOLD, extract_q_factor, schmidt_spectrum
from .schrodinger import SchrodingerPropagator, schrodinger_evolve, schrodinger_oracle_step
from .states import ProductState, QuantumState1D, build_product_state, fidelity, gaussian_wavepacket

__all__ = [
    'momentum_representation_check', 'momentum_route_expectation', 'redundancy_check',
    'EnergyTrace', 'energy_trace',
    'EmbeddingError', 'EntangledStateError', 'GridMismatchError',
    'apply_quantum_observable', 'quantum_expectation',
    'ENTANGLEMENT_THRESHOLD', 'extract_q_factor', 'schmidt_spectrum',
    'SchrodingerPropagator', 'schrodinger_evolve', 'schrodinger_oracle_step',
    'ProductState', 'QuantumState1D', 'build_product_state', 'fidelity', 'gaussian_wavepacket',
]
