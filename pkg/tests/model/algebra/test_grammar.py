"""Tests for the polynomial text grammar."""
from fractions import Fraction

import pytest

from model.algebra import (AlgebraContext, ClassicalPolynomial, ComplexRational, OperatorPolynomial, PhaseIndex,
                           PhaseKind, UnsupportedInputError, angular_momentum, commutator, moyal_generator,
                           parse_classical, parse_operator, poisson_bracket)

q = ClassicalPolynomial.q()
p = ClassicalPolynomial.p()


class TestParseClassical:

    @pytest.mark.parametrize("text, expected", [
        ("q", q),
        ("p^2/2 + q^4/4", p ** 2 / 2 + q ** 4 / 4),
        ("0.25*q**4", Fraction(1, 4) * q ** 4),
        ("-(q - p)^2", -((q - p) ** 2)),
        ("3/4 q", None),
        ("2*q*p - -p", 2 * q * p + p),
        ("  q^2  +  p^2 ", q ** 2 + p ** 2),
    ])
    def test_expressions(self, text, expected):
        if expected is None:
            with pytest.raises(UnsupportedInputError):
                parse_classical(text)
        else:
            assert parse_classical(text) == expected

    def test_decimals_are_exact(self):
        assert parse_classical("0.1").constant_term() == Fraction(1, 10)

    def test_several_degrees_of_freedom(self):
        f = parse_classical("q0*p1 - q1*p0", ndof=2)
        q0, q1 = ClassicalPolynomial.q(0, 2), ClassicalPolynomial.q(1, 2)
        p0, p1 = ClassicalPolynomial.p(0, 2), ClassicalPolynomial.p(1, 2)
        assert f == q0 * p1 - q1 * p0

    def test_render_round_trip(self):
        f = p ** 2 / 2 - Fraction(3, 7) * q ** 3 * p + 5
        assert parse_classical(f.render()) == f

    @pytest.mark.parametrize("text", [
        "x + q",
        "q $ p",
        "q p",
        "q^-1",
        "q^1.5",
        "1/q",
        "(q + p",
        "",
        "q2",
    ])
    def test_rejected_input(self, text):
        with pytest.raises(UnsupportedInputError):
            parse_classical(text)

    def test_bare_symbol_needs_suffix_with_several_dofs(self):
        with pytest.raises(UnsupportedInputError, match="suffix"):
            parse_classical("q + p", ndof=2)


class TestClassicalPolynomial:

    def test_poisson_bracket_canonical(self):
        assert poisson_bracket(q, p) == ClassicalPolynomial.constant(1)
        assert poisson_bracket(p, q) == ClassicalPolynomial.constant(-1)

    def test_poisson_bracket_of_energy(self):
        h = p ** 2 / 2 + q ** 4 / 4
        assert poisson_bracket(q, h) == p
        assert poisson_bracket(p, h) == -(q ** 3)

    def test_float_coefficients_rejected(self):
        with pytest.raises(UnsupportedInputError):
            q * 0.5

    def test_division_by_polynomial_rejected(self):
        with pytest.raises(UnsupportedInputError):
            p / q

    def test_evaluate(self):
        f = parse_classical("p^2/2 + q^4/4")
        assert f.evaluate(2.0, 1.0) == pytest.approx(4.5)

    def test_render(self):
        assert (p ** 2 / 2 + q ** 4 / 4).render() == "(1/2)*p^2 + (1/4)*q^4"
        assert ClassicalPolynomial.zero().render() == "0"


class TestParseOperator:

    def setup_method(self):
        self.context = AlgebraContext()
        self.q = OperatorPolynomial.generator(self.context, PhaseIndex(PhaseKind.Q))
        self.lp = OperatorPolynomial.generator(self.context, PhaseIndex(PhaseKind.LAMBDA_P))
        self.i = OperatorPolynomial.constant(self.context, ComplexRational.i())

    def test_products_are_normal_ordered(self):
        assert parse_operator("lq*q") == parse_operator("q*lq") - self.i
        assert parse_operator("lp*p - p*lp") == -self.i

    def test_hbar_and_complex_constants(self):
        expected = self.q - OperatorPolynomial.hbar(self.context) * self.lp * Fraction(1, 2)
        assert parse_operator("q - hbar*lp/2") == expected
        assert parse_operator("(1/2-3/4*i)*q") == self.q * ComplexRational(Fraction(1, 2), Fraction(-3, 4))

    def test_render_round_trip(self):
        generator = moyal_generator(parse_classical("p^2/2 + q^4/4"))
        assert parse_operator(generator.render()) == generator

    def test_render_round_trip_several_dofs(self):
        context = AlgebraContext(ndof=3)
        lz = angular_momentum("z", context)
        assert parse_operator(lz.render(), context) == lz

    def test_commutator_of_parsed_operators(self):
        assert commutator(parse_operator("q"), parse_operator("lq")) == self.i

    @pytest.mark.parametrize("text", [
        "x",
        "q/lp",
        "q/i",
        "q/hbar",
        "q/0",
        "lq2",
    ])
    def test_rejected_input(self, text):
        with pytest.raises(UnsupportedInputError):
            parse_operator(text)

    def test_classical_grammar_rejects_operator_symbols(self):
        for text in ("lq", "hbar", "i"):
            with pytest.raises(UnsupportedInputError):
                parse_classical(text)
