"""Tests for classical expectations, marginals and the phase scramble."""
import numpy as np
import pytest

from model.algebra import parse_classical
from model.phase_space import (Representation, RepresentationError, expectation_classical, marginals,
                               phase_scramble, to_representation)
from tests.fixtures.phase_space_fixtures import small_gaussian, small_grid


class TestClassicalObservables:

    def setup_method(self):
        self.grid = small_grid()
        self.state = small_gaussian(self.grid, q0=0.5, p0=-0.5)

    def test_moments(self):
        assert expectation_classical(self.state, parse_classical("1")) == pytest.approx(1.0, abs=1e-12)
        assert expectation_classical(self.state, parse_classical("q")) == pytest.approx(0.5, abs=1e-10)
        assert expectation_classical(self.state, parse_classical("q^2 + p^2")) == pytest.approx(1.0, abs=1e-10)

    def test_marginals_are_densities(self):
        position, momentum = marginals(self.state)
        assert position.shape == (self.grid.n_q,)
        assert momentum.shape == (self.grid.n_p,)
        assert np.sum(position) * self.grid.dq == pytest.approx(1.0, abs=1e-12)
        assert np.sum(momentum) * self.grid.dp == pytest.approx(1.0, abs=1e-12)
        assert self.grid.q[np.argmax(position)] == pytest.approx(0.5, abs=self.grid.dq)

    def test_phase_scramble_keeps_the_density(self):
        scrambled = phase_scramble(self.state, seed=7)
        assert np.allclose(np.abs(scrambled.amplitudes), np.abs(self.state.amplitudes))
        f = parse_classical("p^2/2 + q^4/4")
        assert abs(expectation_classical(scrambled, f) - expectation_classical(self.state, f)) < 1e-12

    def test_phase_scramble_is_seeded(self):
        a = phase_scramble(self.state, seed=3)
        b = phase_scramble(self.state, seed=3)
        c = phase_scramble(self.state, seed=4)
        assert a.max_difference(b) == 0.0
        assert a.max_difference(c) > 0.0

    def test_q_p_representation_required(self):
        moved = to_representation(self.state, Representation.Q_LAMBDA_P)
        for operation in (lambda s: expectation_classical(s, parse_classical("q")), marginals,
                          lambda s: phase_scramble(s, 0)):
            with pytest.raises(RepresentationError):
                operation(moved)
