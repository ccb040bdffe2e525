"""Numerical KvN evolution on a periodic 2D phase-space grid."""

from .errors import GridConfigurationError, PhaseSpaceError, RepresentationError
from .gaussian import GaussianParams, init_gaussian
from .grid import Axis, PhaseSpaceGrid
from .hamiltonian import HamiltonianSpec
from .observables import expectation_classical, marginals, phase_scramble
from .oracle import CharacteristicsResult, characteristics_oracle
from .propagators import Generator, SplitOperatorPropagator, evolve, liouville_step, moyal_step
from .state import KvnState, Representation
from .transforms import to_representation

__all__ = [
    'GridConfigurationError', 'PhaseSpaceError', 'RepresentationError',
    'GaussianParams', 'init_gaussian',
    'Axis', 'PhaseSpaceGrid',
    'HamiltonianSpec',
    'expectation_classical', 'marginals', 'phase_scramble',
    'CharacteristicsResult', 'characteristics_oracle',
    'Generator', 'SplitOperatorPropagator', 'evolve', 'liouville_step', 'moyal_step',
    'KvnState', 'Representation',
    'to_representation',
]
