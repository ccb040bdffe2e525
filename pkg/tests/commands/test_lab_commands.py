"""End-to-end tests of the lab commands through KvnApp.run."""
import json

import pytest

from kvn import KvnApp
from model.phase_space import Representation
from tests.fixtures.common_patches import isolated_settings  # noqa: F401
from tests.fixtures.phase_space_fixtures import random_state, small_gaussian, small_grid
from tests.fixtures.scenario_fixtures import harmonic_scenario, write_scenario
from utils.snapshot_utils import write_snapshot


@pytest.mark.usefixtures('isolated_settings')
class TestVerifyAlgebraCommand:
    def test_small_run_passes(self, capsys, tmp_path):
        out = tmp_path / 'algebra.txt'
        code = KvnApp.run(['verify-algebra', '--ndof', '1', '--max-degree', '2', '--samples', '2',
                           '--out', str(out)])
        printed = capsys.readouterr().out

        assert code == 0
        assert printed.startswith('# verify-algebra\ndigest: ')
        assert 'RESULT: PASS' in printed
        assert out.read_text(encoding='utf-8') == printed

    def test_alias_is_deterministic(self, capsys):
        KvnApp.run(['va', '--ndof', '1', '--max-degree', '2', '--samples', '1', '--seed', '5'])
        first = capsys.readouterr().out
        KvnApp.run(['verify-algebra', '--ndof', '1', '--max-degree', '2', '--samples', '1', '--seed', '5'])
        assert capsys.readouterr().out == first

    @pytest.mark.parametrize('argv,message', [
        (['--ndof', '0'], '--ndof must be >= 1'),
        (['--samples', '0'], '--samples must be >= 1'),
        (['--max-degree', '7'], '--max-degree must be between 1 and 6'),
    ])
    def test_rejected_parameters(self, capsys, argv, message):
        assert KvnApp.run(['verify-algebra'] + argv) == 2
        assert message in capsys.readouterr().err


@pytest.mark.usefixtures('isolated_settings')
class TestCompareCommand:
    def setup_method(self):
        self.grid = small_grid()

    def _snapshots(self, tmp_path, a, b):
        return str(write_snapshot(a, tmp_path / 'a.kvn')), str(write_snapshot(b, tmp_path / 'b.kvn'))

    def test_identical(self, capsys, tmp_path):
        state = small_gaussian(self.grid)
        a, b = self._snapshots(tmp_path, state, state)

        assert KvnApp.run(['compare', a, b]) == 0
        printed = capsys.readouterr().out
        assert 'PASS max |a - b| measured=0.000000e+00' in printed
        assert 'L2 |a - b|' in printed

    def test_different_states(self, capsys, tmp_path):
        a, b = self._snapshots(tmp_path, small_gaussian(self.grid), small_gaussian(self.grid, q0=0.0))

        assert KvnApp.run(['compare', a, b, '--tol', '1e-4']) == 1
        assert KvnApp.run(['compare', a, b, '--tol', '1e-4', '--expect-different']) == 0
        assert '[expected-nonzero]' in capsys.readouterr().out

    def test_header_mismatch(self, capsys, tmp_path):
        a, b = self._snapshots(tmp_path, random_state(self.grid),
                               random_state(self.grid, representation=Representation.Q_QBAR))
        assert KvnApp.run(['compare', a, b]) == 2
        assert 'Snapshot headers differ in: representation' in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path):
        a = str(write_snapshot(random_state(self.grid), tmp_path / 'a.kvn'))
        assert KvnApp.run(['compare', a, str(tmp_path / 'missing.kvn')]) == 2
        assert 'missing.kvn' in capsys.readouterr().err

    def test_tolerance_must_be_positive(self, tmp_path):
        state = random_state(self.grid)
        a, b = self._snapshots(tmp_path, state, state)
        assert KvnApp.run(['compare', a, b, '--tol', '0']) == 2


class TestSettingsCommand:
    def test_show_all(self, capsys, isolated_settings):  # noqa: F811
        assert KvnApp.run(['settings']) == 0
        printed = capsys.readouterr().out
        assert f'Settings file: {isolated_settings}' in printed
        assert 'max_threads = (unset)' in printed

    def test_set_and_show(self, capsys, isolated_settings):  # noqa: F811
        assert KvnApp.run(['settings', 'max_threads', '3']) == 0
        assert KvnApp.run(['settings', 'max_threads']) == 0
        assert capsys.readouterr().out.splitlines()[-1] == 'max_threads = 3'
        assert json.loads(isolated_settings.read_text()) == {'run': {'max_threads': 3}}

    def test_empty_value_clears(self, capsys, isolated_settings):  # noqa: F811
        KvnApp.run(['settings', 'output_root', 'results'])
        assert KvnApp.run(['settings', 'output_root', '']) == 0
        assert json.loads(isolated_settings.read_text()) == {'run': {}}

    @pytest.mark.parametrize('argv', [['colour'], ['max_threads', 'lots'], ['max_threads', '0']])
    def test_rejected(self, capsys, isolated_settings, argv):  # noqa: F811
        assert KvnApp.run(['settings'] + argv) == 2
        assert 'error:' in capsys.readouterr().err


@pytest.mark.usefixtures('isolated_settings')
class TestSimulateCommand:
    def test_passing_scenario(self, capsys, tmp_path):
        path = write_scenario(tmp_path, harmonic_scenario())
        code = KvnApp.run(['simulate', str(path), '--out', str(tmp_path / 'run')])
        printed = capsys.readouterr().out

        assert code == 0
        assert 'RESULT: PASS (2/2 checks passed)' in printed
        assert f'Outputs written to {tmp_path / "run"}' in printed
        assert (tmp_path / 'run' / 'report.txt').is_file()

    def test_default_output_directory(self, tmp_path):
        path = write_scenario(tmp_path, harmonic_scenario())
        assert KvnApp.run(['sim', str(path)]) == 0
        assert (tmp_path / 'runs' / 'small_harmonic' / 'final.kvn').is_file()

    def test_failing_check(self, capsys, tmp_path):
        path = write_scenario(tmp_path, harmonic_scenario(diagnostics=[{'kind': 'norm', 'expect': 'nonzero'}]))
        assert KvnApp.run(['simulate', str(path), '--out', str(tmp_path / 'run')]) == 1
        assert 'RESULT: FAIL' in capsys.readouterr().out
        assert 'RESULT: FAIL' in (tmp_path / 'run' / 'report.txt').read_text(encoding='utf-8')

    def test_resume(self, capsys, tmp_path):
        path = write_scenario(tmp_path, harmonic_scenario())
        KvnApp.run(['simulate', str(path), '--out', str(tmp_path / 'run')])
        first = capsys.readouterr().out
        assert KvnApp.run(['simulate', str(path), '--out', str(tmp_path / 'run'), '--resume']) == 0
        assert capsys.readouterr().out == first

    def test_resume_of_changed_scenario(self, capsys, tmp_path):
        KvnApp.run(['simulate', str(write_scenario(tmp_path, harmonic_scenario())), '--out', str(tmp_path / 'run')])
        changed = write_scenario(tmp_path, harmonic_scenario(steps=20), 'changed.yaml')
        assert KvnApp.run(['simulate', str(changed), '--out', str(tmp_path / 'run'), '--resume']) == 2
        assert 'different scenario' in capsys.readouterr().err

    def test_invalid_scenario(self, capsys, tmp_path):
        path = write_scenario(tmp_path, harmonic_scenario(steps=0))
        assert KvnApp.run(['simulate', str(path)]) == 2
        assert 'steps: must be >= 1' in capsys.readouterr().err

    def test_yaml_error(self, capsys, tmp_path):
        path = tmp_path / 'broken.yaml'
        path.write_text('steps: [1, 2\n', encoding='utf-8')
        assert KvnApp.run(['simulate', str(path)]) == 2
        assert 'line ' in capsys.readouterr().err

    def test_missing_file(self, capsys, tmp_path):
        assert KvnApp.run(['simulate', str(tmp_path / 'nothing.yaml')]) == 2
        assert 'Scenario file not found' in capsys.readouterr().err

    def test_missing_argument(self):
        with pytest.raises(SystemExit) as e:
            KvnApp.run(['simulate'])
        assert e.value.code == 2
