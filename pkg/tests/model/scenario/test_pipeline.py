from pathlib import Path

import numpy as np
import pytest

import model.scenario.pipeline as pipeline
from model.scenario import CheckpointMismatchError, ScenarioRunner, load_scenario, parse_scenario
from model.scenario.pipeline import CHECKPOINT_FILENAME
from tests.fixtures.common_patches import isolated_settings  # noqa: F401
from tests.fixtures.scenario_fixtures import harmonic_scenario, quartic_product_scenario
from time_utils import Stopwatch
from utils.checkpoint_utils import load_checkpoint
from utils.export_utils import read_rows
from utils.snapshot_utils import read_header, read_snapshot


@pytest.mark.usefixtures("isolated_settings")
class TestHarmonicRun:
    def setup_method(self):
        self.scenario = None

    def _run(self, tmp_path, **overrides):
        self.scenario = parse_scenario(harmonic_scenario(**overrides), output=tmp_path / "run")
        return ScenarioRunner(self.scenario).run()

    def test_passes_and_writes_outputs(self, tmp_path):
        report = self._run(tmp_path)
        out = tmp_path / "run"

        assert report.passed
        assert report.exit_code == 0
        for name in ("initial.kvn", "final.kvn", "final_moyal.kvn", "final_liouville.kvn", "marginals.csv",
                     "report.txt", "timings.csv", CHECKPOINT_FILENAME):
            assert (out / name).is_file(), name
        assert not list(out.glob("schmidt_*.csv"))
        assert not list(out.glob("energy_*.csv"))
        assert (out / "report.txt").read_text(encoding="utf-8") == report.render()

    def test_report_contents(self, tmp_path):
        report = self._run(tmp_path)
        text = report.render()

        assert text.startswith(f"# scenario small_harmonic\ndigest: {self.scenario.digest}\n")
        assert "== norm ==" in text
        assert "== generator_agreement ==" in text
        assert text.endswith("RESULT: PASS (2/2 checks passed)\n")

    def test_final_snapshot_is_the_primary_generator(self, tmp_path):
        self._run(tmp_path)
        out = tmp_path / "run"
        final = read_snapshot(out / "final.kvn")
        moyal = read_snapshot(out / "final_moyal.kvn")

        assert final.max_difference(moyal) == 0.0
        assert final.norm_squared() == pytest.approx(1.0, abs=1e-10)
        assert read_header(out / "initial.kvn")["representation"] == 0

    def test_marginals_are_normalized(self, tmp_path):
        self._run(tmp_path)
        rows = read_rows(tmp_path / "run" / "marginals.csv")
        grid = self.scenario.grid
        q_density = np.array([float(r["density"]) for r in rows if r["axis"] == "q"])
        p_density = np.array([float(r["density"]) for r in rows if r["axis"] == "p"])

        assert len(q_density) == grid.n_q and len(p_density) == grid.n_p
        assert q_density.sum() * grid.dq == pytest.approx(1.0, abs=1e-8)
        assert p_density.sum() * grid.dp == pytest.approx(1.0, abs=1e-8)

    def test_timings(self, tmp_path):
        ticks = iter(range(1000))
        stopwatch = Stopwatch(clock=lambda: float(next(ticks)))
        scenario = parse_scenario(harmonic_scenario(), output=tmp_path / "run")
        report = ScenarioRunner(scenario, stopwatch=stopwatch).run()

        stages = [row["stage"] for row in read_rows(tmp_path / "run" / "timings.csv")]
        assert stages[:3] == ["initial state", "evolve moyal", "evolve liouville"]
        assert "diagnostics" in stages and "write outputs" in stages
        assert "seconds" not in report.render()

    def test_failing_check_sets_exit_code(self, tmp_path):
        report = self._run(tmp_path, diagnostics=[{"kind": "norm", "expect": "nonzero"}])

        assert not report.passed
        assert report.exit_code == 1
        assert report.failures() == ["norm: |norm^2 - 1| of final moyal state"]
        assert report.render().endswith("RESULT: FAIL (0/1 checks passed)\n")

    def test_deterministic(self, tmp_path):
        first = self._run(tmp_path).render()
        second = self._run(tmp_path).render()
        assert first == second


@pytest.mark.usefixtures("isolated_settings")
class TestQuarticProductRun:
    def test_embedding_diagnostics_pass(self, tmp_path):
        scenario = parse_scenario(quartic_product_scenario(), output=tmp_path / "run")
        report = ScenarioRunner(scenario).run()

        assert report.failures() == []
        assert [s.title for s in report.sections] == ["norm", "schmidt", "fidelity_vs_oracle",
                                                      "classical_expectations"]
        assert "[expected-nonzero]" in report.render()

    def test_schmidt_csv(self, tmp_path):
        scenario = parse_scenario(quartic_product_scenario(), output=tmp_path / "run")
        ScenarioRunner(scenario).run()
        rows = read_rows(tmp_path / "run" / "schmidt_moyal.csv")

        times = sorted({float(r["t"]) for r in rows})
        assert times == pytest.approx([0.0, 0.05, 0.1, 0.15, 0.2])
        leading = [float(r["sigma_k"]) for r in rows if r["k"] == "0"]
        assert leading == pytest.approx([1.0] * 5, abs=1e-6)
        assert {int(r["k"]) for r in rows} <= set(range(8))

    def test_schmidt_csv_per_generator(self, tmp_path):
        raw = quartic_product_scenario(diagnostics=[{"kind": "schmidt", "tolerance": 1.0e-6},
                                                    {"kind": "schmidt", "generator": "liouville", "tolerance": 1.0}])
        scenario = parse_scenario(raw, output=tmp_path / "run")
        report = ScenarioRunner(scenario).run()
        out = tmp_path / "run"

        assert [s.title for s in report.sections] == ["schmidt", "schmidt (liouville)"]
        assert sorted(path.name for path in out.glob("schmidt_*.csv")) == ["schmidt_liouville.csv",
                                                                          "schmidt_moyal.csv"]
        moyal = read_rows(out / "schmidt_moyal.csv")
        liouville = read_rows(out / "schmidt_liouville.csv")
        assert {r["t"] for r in moyal} == {r["t"] for r in liouville}
        assert moyal != liouville

    def test_infidelity_is_never_negative(self, tmp_path, monkeypatch):
        monkeypatch.setattr(pipeline, "fidelity", lambda a, b: 1.0 + 2.2e-16)
        raw = quartic_product_scenario(diagnostics=[{"kind": "fidelity_vs_oracle"}])
        report = ScenarioRunner(parse_scenario(raw, output=tmp_path / "run")).run()

        line = report.sections[0].lines[0]
        assert line.passed
        assert line.measured == "0.000000e+00"

    def test_energy_trace_csv(self, tmp_path):
        raw = quartic_product_scenario(diagnostics=[{"kind": "energy_trace", "tolerance": 1.0e-3}])
        scenario = parse_scenario(raw, output=tmp_path / "run")
        report = ScenarioRunner(scenario).run()
        rows = read_rows(tmp_path / "run" / "energy_moyal.csv")

        assert report.passed
        assert [float(r["t"]) for r in rows] == pytest.approx([0.0, 0.05, 0.1, 0.15, 0.2])
        assert "E(0)=" in report.render()


@pytest.mark.usefixtures("isolated_settings")
class TestResume:
    def test_resume_after_completion_reproduces_report(self, tmp_path):
        scenario = parse_scenario(harmonic_scenario(), output=tmp_path / "run")
        first = ScenarioRunner(scenario).run()
        resumed = ScenarioRunner(scenario, resume=True).run()

        assert resumed.render() == first.render()
        payload = load_checkpoint(tmp_path / "run" / CHECKPOINT_FILENAME)
        assert payload["digest"] == scenario.digest
        assert {name: leg.step for name, leg in payload["legs"].items()} == {"moyal": 40, "liouville": 40}

    def test_interrupted_run_resumes(self, tmp_path, monkeypatch):
        raw = quartic_product_scenario(checkpoint_every=10,
                                       diagnostics=[{"kind": "norm"}, {"kind": "schmidt", "tolerance": 1.0e-6}])
        reference = ScenarioRunner(parse_scenario(raw, output=tmp_path / "reference")).run()

        scenario = parse_scenario(raw, output=tmp_path / "run")
        real_save = pipeline.save_checkpoint

        def save_then_stop(payload, fileName):
            real_save(payload, fileName)
            raise KeyboardInterrupt

        monkeypatch.setattr(pipeline, "save_checkpoint", save_then_stop)
        with pytest.raises(KeyboardInterrupt):
            ScenarioRunner(scenario).run()
        monkeypatch.setattr(pipeline, "save_checkpoint", real_save)

        assert load_checkpoint(tmp_path / "run" / CHECKPOINT_FILENAME)["step"] == 10
        resumed = ScenarioRunner(scenario, resume=True).run()
        assert resumed.render() == reference.render()
        assert (read_rows(tmp_path / "run" / "schmidt_moyal.csv") ==
                read_rows(tmp_path / "reference" / "schmidt_moyal.csv"))

    def test_resume_without_checkpoint_starts_fresh(self, tmp_path):
        scenario = parse_scenario(harmonic_scenario(), output=tmp_path / "run")
        assert ScenarioRunner(scenario, resume=True).run().passed

    def test_resume_of_other_scenario_is_refused(self, tmp_path):
        ScenarioRunner(parse_scenario(harmonic_scenario(), output=tmp_path / "run")).run()
        changed = parse_scenario(harmonic_scenario(steps=50), output=tmp_path / "run")

        with pytest.raises(CheckpointMismatchError):
            ScenarioRunner(changed, resume=True).run()

    def test_fresh_run_discards_old_checkpoint(self, tmp_path):
        ScenarioRunner(parse_scenario(harmonic_scenario(), output=tmp_path / "run")).run()
        changed = parse_scenario(harmonic_scenario(steps=50), output=tmp_path / "run")

        assert ScenarioRunner(changed).run().passed
        assert load_checkpoint(tmp_path / "run" / CHECKPOINT_FILENAME)["digest"] == changed.digest


BUNDLED = Path(__file__).resolve().parents[3] / "scenarios"


@pytest.mark.slow
@pytest.mark.usefixtures("isolated_settings")
class TestBundledScenarios:

    @pytest.mark.parametrize("filename", ["harmonic_equivalence.yaml", "quartic_dichotomy.yaml",
                                          "embedding_quartic.yaml"])
    def test_passes(self, filename, tmp_path):
        report = ScenarioRunner(load_scenario(BUNDLED / filename, output=tmp_path / "run")).run()
        assert report.failures() == []
        assert report.exit_code == 0

    def test_embedding_stays_a_product_until_t_2(self, tmp_path):
        scenario = load_scenario(BUNDLED / "embedding_quartic.yaml", output=tmp_path / "run")
        report = ScenarioRunner(scenario).run()
        rows = read_rows(tmp_path / "run" / "schmidt_moyal.csv")

        assert scenario.total_time == pytest.approx(2.0)
        second = [float(r["sigma_k"]) for r in rows if r["k"] == "1"]
        assert len(second) == scenario.steps // scenario.sample_every + 1
        assert max(second) < 1e-8
        fidelity_section = next(s for s in report.sections if s.title == "fidelity_vs_oracle")
        assert fidelity_section.passed
