import struct

import numpy as np
import pytest

from model.phase_space import PhaseSpaceGrid, Representation
from tests.fixtures.phase_space_fixtures import random_state, small_grid
from utils.snapshot_utils import (HEADER_DTYPE, MAGIC, SnapshotError, headers_match, read_header, read_snapshot,
                                  write_snapshot)


class TestSnapshotLayout:
    def setup_method(self):
        self.grid = small_grid()
        self.state = random_state(self.grid, seed=4, representation=Representation.Q_QBAR)

    def test_header_bytes(self, tmp_path):
        path = write_snapshot(self.state, tmp_path / "state.kvn")
        raw = path.read_bytes()

        assert HEADER_DTYPE.itemsize == 56
        assert raw[:4] == MAGIC
        version, tag, n_q, n_p = struct.unpack("<HHII", raw[4:16])
        assert (version, tag, n_q, n_p) == (1, 2, 64, 64)
        q_min, q_max, p_min, p_max, hbar = struct.unpack("<5d", raw[16:56])
        assert (q_min, q_max, hbar) == (-6.0, 6.0, 1.0)
        assert (p_min, p_max) == (self.grid.p_min, self.grid.p_max)
        assert len(raw) == 56 + 16 * 64 * 64

    def test_payload_row_major(self, tmp_path):
        path = write_snapshot(self.state, tmp_path / "state.kvn")
        payload = np.frombuffer(path.read_bytes()[56:], dtype="<c16")

        assert payload[1] == self.state.amplitudes[0, 1]
        assert payload[64] == self.state.amplitudes[1, 0]

    def test_read_back_exactly(self, tmp_path):
        loaded = read_snapshot(write_snapshot(self.state, tmp_path / "state.kvn"))

        assert loaded.representation is Representation.Q_QBAR
        assert loaded.hbar == 1.0
        assert loaded.grid == self.grid
        assert loaded.max_difference(self.state) == 0.0

    def test_rectangular_grid(self, tmp_path):
        grid = PhaseSpaceGrid(32, 16, -4.0, 4.0, -2.0, 2.0)
        state = random_state(grid, seed=1, hbar=0.5)
        loaded = read_snapshot(write_snapshot(state, tmp_path / "rect.kvn"))

        assert loaded.amplitudes.shape == (32, 16)
        assert loaded.hbar == 0.5


class TestSnapshotErrors:
    def setup_method(self):
        self.state = random_state(small_grid(), seed=2)

    def test_bad_magic(self, tmp_path):
        path = write_snapshot(self.state, tmp_path / "state.kvn")
        raw = bytearray(path.read_bytes())
        raw[:4] = b"NOPE"
        path.write_bytes(bytes(raw))
        with pytest.raises(SnapshotError, match="not a KvN snapshot"):
            read_snapshot(path)

    def test_unsupported_version(self, tmp_path):
        path = write_snapshot(self.state, tmp_path / "state.kvn")
        raw = bytearray(path.read_bytes())
        raw[4:6] = struct.pack("<H", 7)
        path.write_bytes(bytes(raw))
        with pytest.raises(SnapshotError, match="version 7"):
            read_header(path)

    def test_truncated_payload(self, tmp_path):
        path = write_snapshot(self.state, tmp_path / "state.kvn")
        path.write_bytes(path.read_bytes()[:-16])
        with pytest.raises(SnapshotError, match="expected 4096 amplitudes, found 4095"):
            read_snapshot(path)

    def test_short_header(self, tmp_path):
        path = tmp_path / "short.kvn"
        path.write_bytes(MAGIC + b"\x01\x00")
        with pytest.raises(SnapshotError, match="56-byte header"):
            read_header(path)


class TestHeadersMatch:
    def test_same_grid(self, tmp_path):
        a = write_snapshot(random_state(small_grid(), seed=0), tmp_path / "a.kvn")
        b = write_snapshot(random_state(small_grid(), seed=1), tmp_path / "b.kvn")
        assert headers_match(read_header(a), read_header(b)) == []

    def test_reports_differing_fields(self, tmp_path):
        a = write_snapshot(random_state(small_grid(), seed=0), tmp_path / "a.kvn")
        b = write_snapshot(random_state(small_grid(hbar=0.5), seed=0, hbar=0.5,
                                        representation=Representation.Q_LAMBDA_P), tmp_path / "b.kvn")
        assert headers_match(read_header(a), read_header(b)) == ["representation", "p_min", "p_max", "hbar"]
