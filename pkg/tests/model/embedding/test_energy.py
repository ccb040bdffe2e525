"""Tests for quantum energy traces."""
import numpy as np
import pytest

from model.embedding import EmbeddingError, EnergyTrace, build_product_state, energy_trace
from model.phase_space import (GaussianParams, Generator, HamiltonianSpec, PhaseSpaceGrid, Representation,
                               init_gaussian)
from tests.fixtures.phase_space_fixtures import small_grid, small_product_state, wavepacket


class TestEnergyTrace:

    def test_relative_drift(self):
        trace = EnergyTrace((0.0, 0.1, 0.2), (2.0, 2.1, 1.9), Generator.MOYAL)
        assert trace.relative_drift() == pytest.approx(0.05)

    def test_absolute_drift(self):
        trace = EnergyTrace((0.0, 0.1, 0.2), (2.0, 2.1, 1.7), Generator.MOYAL)
        assert trace.absolute_drift() == pytest.approx(0.3)
        assert trace.relative_drift() == pytest.approx(0.15)

    def test_zero_initial_energy_uses_absolute_drift(self):
        trace = EnergyTrace((0.0, 1.0), (0.0, 0.25), Generator.LIOUVILLE)
        assert trace.relative_drift() == pytest.approx(0.25)

    def test_rows(self):
        trace = EnergyTrace((0.0, 0.5), (1.0, 1.5), Generator.MOYAL)
        assert trace.rows() == [{"t": 0.0, "value": 1.0}, {"t": 0.5, "value": 1.5}]

    @pytest.mark.parametrize("times, values", [
        ((0.0, 0.0), (1.0, 1.0)),
        ((0.0, 1.0, 0.5), (1.0, 1.0, 1.0)),
        ((0.0, 1.0), (1.0,)),
    ])
    def test_invalid(self, times, values):
        with pytest.raises(EmbeddingError):
            EnergyTrace(times, values, Generator.MOYAL)


class TestEnergySampling:

    def setup_method(self):
        self.initial = small_product_state(small_grid())

    def test_samples_and_final_state(self):
        trace, final = energy_trace(self.initial, HamiltonianSpec.harmonic(1.0), Generator.MOYAL, 0.01, 25, every=10)
        assert trace.times == pytest.approx((0.0, 0.1, 0.2, 0.25))
        assert final.representation is Representation.Q_P
        assert final.norm_squared() == pytest.approx(1.0, abs=1e-12)

    def test_harmonic_generators_give_the_same_trace(self):
        harmonic = HamiltonianSpec.harmonic(1.0)
        moyal, _ = energy_trace(self.initial, harmonic, Generator.MOYAL, 0.01, 100, every=10)
        liouville, _ = energy_trace(self.initial, harmonic, Generator.LIOUVILLE, 0.01, 100, every=10)
        assert moyal.values == pytest.approx(liouville.values, abs=1e-10)
        assert moyal.relative_drift() < 1e-3

    def test_quartic_energy_drifts_only_under_liouville(self):
        quartic = HamiltonianSpec.quartic(0.25)
        moyal, _ = energy_trace(self.initial, quartic, Generator.MOYAL, 0.01, 100, every=10)
        liouville, _ = energy_trace(self.initial, quartic, Generator.LIOUVILLE, 0.01, 100, every=10)
        assert moyal.relative_drift() < 1e-3
        assert liouville.relative_drift() > 10 * moyal.relative_drift()


@pytest.mark.slow
class TestQuarticEnergyDichotomy:

    def setup_method(self):
        self.quartic = HamiltonianSpec.quartic(0.25)

    def test_thousand_steps_from_a_squeezed_product(self):
        grid = PhaseSpaceGrid.aligned(256, -10.0, 10.0, 1.0)
        initial = build_product_state(wavepacket(grid, center=1.0, width=0.5), wavepacket(grid, center=1.0))
        moyal, _ = energy_trace(initial, self.quartic, Generator.MOYAL, 1e-3, 1000, every=100)
        liouville, _ = energy_trace(initial, self.quartic, Generator.LIOUVILLE, 1e-3, 1000, every=100)
        assert moyal.relative_drift() < 1e-6
        assert liouville.relative_drift() > 1e-3

    def test_liouville_drift_scales_as_hbar_squared(self):
        hbars = (0.1, 0.2, 0.4)
        drifts = []
        for hbar in hbars:
            grid = PhaseSpaceGrid.aligned(512, -6.0, 6.0, hbar)
            state = init_gaussian(grid, GaussianParams(1.0, 0.0, 0.3, 0.5), hbar=hbar)
            trace, _ = energy_trace(state, self.quartic, Generator.LIOUVILLE, 1e-3, 1000, every=100)
            drifts.append(trace.absolute_drift())
        exponent = np.polyfit(np.log(hbars), np.log(drifts), 1)[0]
        assert 1.8 <= exponent <= 2.2, drifts
