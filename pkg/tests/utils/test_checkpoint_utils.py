import numpy as np

from model.phase_space import Generator
from tests.fixtures.phase_space_fixtures import small_gaussian
from utils.checkpoint_utils import load_checkpoint, remove_checkpoint, save_checkpoint


class TestCheckpointUtils:
    def test_round_trip_keeps_state(self, tmp_path):
        state = small_gaussian()
        payload = {"digest": "abc", "step": 20, "legs": {"moyal": (Generator.MOYAL, state)}}
        save_checkpoint(payload, tmp_path / "checkpoint.pckl")
        loaded = load_checkpoint(tmp_path / "checkpoint.pckl")

        assert loaded["digest"] == "abc"
        assert loaded["step"] == 20
        generator, restored = loaded["legs"]["moyal"]
        assert generator is Generator.MOYAL
        assert restored.representation is state.representation
        assert np.array_equal(restored.amplitudes, state.amplitudes)

    def test_no_temporary_file_left(self, tmp_path):
        save_checkpoint({"step": 1}, tmp_path / "checkpoint.pckl")
        assert [p.name for p in tmp_path.iterdir()] == ["checkpoint.pckl"]

    def test_overwrite(self, tmp_path):
        save_checkpoint({"step": 1}, tmp_path / "checkpoint.pckl")
        save_checkpoint({"step": 2}, tmp_path / "checkpoint.pckl")
        assert load_checkpoint(tmp_path / "checkpoint.pckl") == {"step": 2}

    def test_missing_checkpoint(self, tmp_path):
        assert load_checkpoint(tmp_path / "checkpoint.pckl") is None

    def test_remove(self, tmp_path):
        save_checkpoint({"step": 1}, tmp_path / "checkpoint.pckl")
        remove_checkpoint(tmp_path / "checkpoint.pckl")
        remove_checkpoint(tmp_path / "checkpoint.pckl")
        assert not (tmp_path / "checkpoint.pckl").exists()
