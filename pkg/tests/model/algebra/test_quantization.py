"""Tests for Bopp quantization, the generators and the energy and angular-momentum identities."""
from fractions import Fraction

import numpy as np
import pytest

from model.algebra import (AlgebraContext, BoppVariant, ClassicalPolynomial, ComplexRational, OperatorPolynomial,
                           PhaseIndex, PhaseKind, UnsupportedInputError, angular_momentum,
                           angular_momentum_display, bopp_operators, bopp_quantize, classical_operator, commutator,
                           energy_drift_closed_form, energy_nonconservation_leading, groenewald_probe,
                           hbar_component, is_hermitian, leading_moyal_correction, liouvillian, moyal_generator,
                           random_classical_polynomial, substitute_hbar, verify_difference_identity)

CTX = AlgebraContext(1)
q = ClassicalPolynomial.q()
p = ClassicalPolynomial.p()


def g(kind: PhaseKind, dof: int = 0, context: AlgebraContext = CTX) -> OperatorPolynomial:
    return OperatorPolynomial.generator(context, PhaseIndex(kind, dof))


def hbar(power: int, value=1, context: AlgebraContext = CTX) -> OperatorPolynomial:
    return OperatorPolynomial.hbar(context, power, value)


class TestBoppQuantization:

    def setup_method(self):
        self.q = g(PhaseKind.Q)
        self.p = g(PhaseKind.P)
        self.lq = g(PhaseKind.LAMBDA_Q)
        self.lp = g(PhaseKind.LAMBDA_P)

    def test_coordinates(self):
        assert bopp_quantize(q) == self.q - hbar(1, Fraction(1, 2)) * self.lp
        assert bopp_quantize(p) == self.p + hbar(1, Fraction(1, 2)) * self.lq
        assert bopp_quantize(q, BoppVariant.BARRED) == self.q + hbar(1, Fraction(1, 2)) * self.lp
        assert bopp_quantize(p, BoppVariant.BARRED) == self.p - hbar(1, Fraction(1, 2)) * self.lq

    def test_product_qp(self):
        expected = (self.q * self.p
                    + hbar(1, Fraction(1, 2)) * (self.q * self.lq - self.p * self.lp)
                    - hbar(2, Fraction(1, 4)) * self.lq * self.lp)
        assert bopp_quantize(q * p) == expected

    def test_constant_maps_to_constant(self):
        assert bopp_quantize(ClassicalPolynomial.constant(Fraction(3, 2))) == OperatorPolynomial.constant(
            CTX, Fraction(3, 2))

    def test_classical_limit_is_multiplication(self):
        f = q ** 3 * p - 2 * p ** 2 + Fraction(1, 3)
        assert substitute_hbar(bopp_quantize(f), 0) == classical_operator(f)

    def test_real_polynomials_give_hermitian_operators(self):
        rng = np.random.default_rng(11)
        for _ in range(5):
            f = random_classical_polynomial(rng, ndof=1, max_degree=4)
            assert is_hermitian(bopp_quantize(f))
            assert is_hermitian(bopp_quantize(f, BoppVariant.BARRED))

    def test_heisenberg_relations(self):
        Q, P, Qb, Pb = bopp_operators(CTX)
        i_hbar = hbar(1, ComplexRational.i())
        assert commutator(Q, P) == i_hbar
        assert commutator(Qb, Pb) == -1 * i_hbar
        for unbarred in (Q, P):
            for barred in (Qb, Pb):
                assert commutator(unbarred, barred).is_zero()

    def test_unbarred_and_barred_images_commute(self):
        f = q ** 2 * p + p ** 3
        h = q * p ** 2 - q ** 3
        assert commutator(bopp_quantize(f), bopp_quantize(h, BoppVariant.BARRED)).is_zero()

    def test_rejects_non_polynomials(self):
        with pytest.raises(UnsupportedInputError):
            bopp_quantize("q^2")


class TestGenerators:

    def setup_method(self):
        self.q = g(PhaseKind.Q)
        self.p = g(PhaseKind.P)
        self.lq = g(PhaseKind.LAMBDA_Q)
        self.lp = g(PhaseKind.LAMBDA_P)
        self.quartic = p ** 2 / 2 + q ** 4 / 4

    def test_liouvillian_of_quartic(self):
        assert liouvillian(self.quartic) == self.p * self.lq - self.q ** 3 * self.lp

    def test_liouvillian_of_constant_is_zero(self):
        assert liouvillian(ClassicalPolynomial.constant(5)).is_zero()

    def test_moyal_generator_of_quartic_potential(self):
        generator = moyal_generator(q ** 4 / 4)
        assert generator.render() == "(-1)*q^3*lp + (-1/4)*hbar^2*q*lp^3"

    def test_leading_correction(self):
        assert leading_moyal_correction(q ** 4 / 4) == -1 * hbar(2, Fraction(1, 4)) * self.q * self.lp ** 3
        assert leading_moyal_correction(p ** 2 / 2 + q ** 2 / 2).is_zero()

    def test_quadratic_hamiltonian_generators_agree(self):
        harmonic = p ** 2 / 2 + q ** 2 / 2 + q * p / 3
        assert moyal_generator(harmonic) == liouvillian(harmonic)

    def test_moyal_reduces_to_liouvillian(self):
        assert substitute_hbar(moyal_generator(q ** 6 + p ** 2 * q ** 3), 0) == liouvillian(q ** 6 + p ** 2 * q ** 3)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_difference_identity_holds(self, seed):
        rng = np.random.default_rng(seed)
        for ndof in (1, 2):
            h = random_classical_polynomial(rng, ndof=ndof, max_degree=5)
            assert verify_difference_identity(h).is_zero()

    def test_difference_identity_on_quartic(self):
        assert verify_difference_identity(self.quartic).is_zero()


class TestEnergyConservation:

    def test_quadratic_energy_is_conserved(self):
        harmonic = p ** 2 / 2 + q ** 2 / 2
        assert energy_nonconservation_leading(harmonic).is_zero()

    def test_quartic_energy_is_not_conserved_under_liouvillian(self):
        quartic = p ** 2 / 2 + q ** 4 / 4
        leading = energy_nonconservation_leading(quartic)
        assert not leading.is_zero()
        assert hbar_component(leading, 0).is_zero()
        assert hbar_component(leading, 1).is_zero()
        assert leading == energy_drift_closed_form(quartic)

    def test_moyal_conserves_energy_exactly(self):
        quartic = p ** 2 / 2 + q ** 4 / 4
        assert commutator(moyal_generator(quartic), bopp_quantize(quartic)).is_zero()


class TestAngularMomentum:

    def setup_method(self):
        self.context = AlgebraContext(3)

    def _generator(self, kind: PhaseKind, dof: int) -> OperatorPolynomial:
        return g(kind, dof, self.context)

    def test_z_component_order_zero(self):
        expected = (self._generator(PhaseKind.Q, 0) * self._generator(PhaseKind.P, 1)
                    - self._generator(PhaseKind.Q, 1) * self._generator(PhaseKind.P, 0))
        assert hbar_component(angular_momentum("z"), 0) == expected

    def test_z_component_order_two(self):
        lq0, lq1 = self._generator(PhaseKind.LAMBDA_Q, 0), self._generator(PhaseKind.LAMBDA_Q, 1)
        lp0, lp1 = self._generator(PhaseKind.LAMBDA_P, 0), self._generator(PhaseKind.LAMBDA_P, 1)
        expected = Fraction(-1, 4) * (lp0 * lq1 - lq0 * lp1)
        assert hbar_component(angular_momentum("z"), 2) == expected

    @pytest.mark.parametrize("axis", ["x", "y", "z"])
    def test_matches_display_form(self, axis):
        assert angular_momentum(axis) == angular_momentum_display(axis)

    def test_cyclic_commutator(self):
        Mx, My, Mz = (angular_momentum(axis) for axis in "xyz")
        i_hbar = OperatorPolynomial.hbar(self.context, 1, ComplexRational.i())
        assert commutator(Mx, My) == i_hbar * Mz

    def test_invalid_axis(self):
        with pytest.raises(UnsupportedInputError):
            angular_momentum("w")


class TestGroenewald:

    def test_quadratic_pairs_obey_dirac_rule(self):
        assert groenewald_probe(q ** 2, p ** 2).is_zero()
        assert groenewald_probe(q * p, q ** 2).is_zero()

    def test_cubic_pair_has_constant_hbar_cubed_residual(self):
        residual = groenewald_probe(q ** 3, p ** 3)
        assert not residual.is_zero()
        assert residual.is_constant()
        assert residual.hbar_powers() == (3,)
