"""
Utility functions for the KvN lab.

This module provides file-level helpers: binary state snapshots, CSV exports and
dill checkpoints for resumable runs.
"""

from .checkpoint_utils import save_checkpoint, load_checkpoint, remove_checkpoint
from .export_utils import (
    read_rows, write_rows, write_energy_trace, write_schmidt_spectra, write_marginals, write_timings
)
from .snapshot_utils import SnapshotError, write_snapshot, read_header, read_snapshot, headers_match

__all__ = [
    # Checkpoint utilities
    'save_checkpoint',
    'load_checkpoint',
    'remove_checkpoint',

    # Export utilities
    'read_rows',
    'write_rows',
    'write_energy_trace',
    'write_schmidt_spectra',
    'write_marginals',
    'write_timings',

    # Snapshot utilities
    'SnapshotError',
    'write_snapshot',
    'read_header',
    'read_snapshot',
    'headers_match',
]
