"""Binary state snapshots.

Layout (little-endian, 56-byte header followed by the payload):

    offset  size  type     field
    0       4     bytes    magic b"KVNS"
    4       2     uint16   format version (1)
    6       2     uint16   representation tag (0 = q,p; 1 = q,lambda_p; 2 = Q,Qbar)
    8       4     uint32   n_q
    12      4     uint32   n_p
    16      8     float64  q_min
    24      8     float64  q_max
    32      8     float64  p_min
    40      8     float64  p_max
    48      8     float64  hbar
    56      16*n_q*n_p     complex128 amplitudes, row-major (axis 0 slowest)
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from model.phase_space import KvnState, PhaseSpaceGrid, Representation

MAGIC = b"KVNS"
VERSION = 1
HEADER_DTYPE = np.dtype([
    ("magic", "S4"),
    ("version", "<u2"),
    ("representation", "<u2"),
    ("n_q", "<u4"),
    ("n_p", "<u4"),
    ("q_min", "<f8"),
    ("q_max", "<f8"),
    ("p_min", "<f8"),
    ("p_max", "<f8"),
    ("hbar", "<f8"),
])
PAYLOAD_DTYPE = np.dtype("<c16")


class SnapshotError(Exception):
    """Raised for unreadable snapshot files or snapshots that cannot be compared."""
    pass


def _header(state: KvnState) -> np.ndarray:
    grid = state.grid
    header = np.zeros(1, dtype=HEADER_DTYPE)
    header[0] = (MAGIC, VERSION, state.representation.tag, grid.n_q, grid.n_p,
                 grid.q_min, grid.q_max, grid.p_min, grid.p_max, state.hbar)
    return header


def write_snapshot(state: KvnState, path: str | Path) -> Path:
    path = Path(path)
    with open(path, "wb") as f:
        f.write(_header(state).tobytes())
        f.write(np.ascontiguousarray(state.amplitudes, dtype=PAYLOAD_DTYPE).tobytes())
    return path


def read_header(path: str | Path) -> np.void:
    raw = Path(path).read_bytes()[:HEADER_DTYPE.itemsize]
    if len(raw) < HEADER_DTYPE.itemsize:
        raise SnapshotError(f"{path}: file is shorter than the {HEADER_DTYPE.itemsize}-byte header")
    header = np.frombuffer(raw, dtype=HEADER_DTYPE)[0]
    if header["magic"] != MAGIC:
        raise SnapshotError(f"{path}: not a KvN snapshot (magic {bytes(header['magic'])!r})")
    if header["version"] != VERSION:
        raise SnapshotError(f"{path}: unsupported snapshot version {int(header['version'])}")
    return header


def read_snapshot(path: str | Path) -> KvnState:
    """
    Raises:
        SnapshotError: On a bad magic, version or payload size.
    """
    header = read_header(path)
    n_q, n_p = int(header["n_q"]), int(header["n_p"])
    payload = np.fromfile(path, dtype=PAYLOAD_DTYPE, offset=HEADER_DTYPE.itemsize)
    if payload.size != n_q * n_p:
        raise SnapshotError(f"{path}: expected {n_q * n_p} amplitudes, found {payload.size}")
    grid = PhaseSpaceGrid(n_q, n_p, float(header["q_min"]), float(header["q_max"]),
                          float(header["p_min"]), float(header["p_max"]))
    representation = Representation.from_tag(int(header["representation"]))
    return KvnState(representation, payload.reshape(n_q, n_p), grid, float(header["hbar"]))


def headers_match(a: np.void, b: np.void) -> list[str]:
    """Names of the header fields that differ between two snapshots."""
    return [name for name in HEADER_DTYPE.names if a[name] != b[name]]
