"""Scenario files, the run pipeline and run reports."""

from .errors import CheckpointMismatchError, ScenarioError, ScenarioParseError, ScenarioValidationError
from .pipeline import ScenarioRunner
from .report import RunReport, digest_of
from .scenario import (DiagnosticKind, DiagnosticSpec, ProductSpec, Scenario, WavepacketSpec,
                       build_initial_state, load_scenario, parse_scenario)

__all__ = [
    'CheckpointMismatchError', 'ScenarioError', 'ScenarioParseError', 'ScenarioValidationError',
    'ScenarioRunner',
    'RunReport', 'digest_of',
    'DiagnosticKind', 'DiagnosticSpec', 'ProductSpec', 'Scenario', 'WavepacketSpec',
    'build_initial_state', 'load_scenario', 'parse_scenario',
]
