"""Bopp quantization, the Liouvillian and the Moyal generator as exact operator polynomials.

All three are built from the same derivation D = lambda_a omega^{ab} d_b acting on a
commutative symbol in (phi, lambda). A symbol is turned into an operator by writing every
lambda factor to the left of the phi factors and normal-ordering the result.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from math import factorial

from model.algebra.classical import ClassicalPolynomial, poisson_bracket
from model.algebra.coefficients import ComplexRational, HbarCoefficient
from model.algebra.errors import ContractViolationError, UnsupportedInputError
from model.algebra.monomials import Monomial, PhaseIndex, PhaseKind
from model.algebra.operators import (AlgebraContext, OperatorPolynomial, commutator, divide_by_hbar,
                                     normal_order_product, poly_add, poly_mul, poly_scale, truncate_hbar)
from model.algebra.symplectic import SymplecticConvention

Symbol = dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction]


class BoppVariant(Enum):
    """Sign of hbar in the Bopp shift: Q = q - (hbar/2) lp for unbarred, + for barred."""
    UNBARRED = 1
    BARRED = -1


class AngularAxis(Enum):
    X = 0
    Y = 1
    Z = 2


# ==============================
# Symbols
# ==============================
def _context_for(f: ClassicalPolynomial, context: AlgebraContext | None) -> AlgebraContext:
    if not isinstance(f, ClassicalPolynomial):
        raise UnsupportedInputError(f"Expected a ClassicalPolynomial, got {type(f).__name__}")
    context = context or AlgebraContext(f.ndof)
    if context.ndof != f.ndof:
        raise ContractViolationError(f"Polynomial has ndof {f.ndof}, context has ndof {context.ndof}")
    return context


def _symbol(f: ClassicalPolynomial) -> Symbol:
    zeros = (0,) * (2 * f.ndof)
    return {(exponents, zeros): value for exponents, value in f.terms.items()}


def _apply_derivation(symbol: Symbol, omega: SymplecticConvention) -> Symbol:
    """D = sum_ab omega^{ab} lambda_a d_b, treating lambda as commuting parameters."""
    result: Symbol = {}
    for (phi, lam), value in symbol.items():
        for a, b, sign in omega.nonzero:
            power = phi[b]
            if not power:
                continue
            new_phi = phi[:b] + (power - 1,) + phi[b + 1:]
            new_lam = lam[:a] + (lam[a] + 1,) + lam[a + 1:]
            key = (new_phi, new_lam)
            result[key] = result.get(key, Fraction(0)) + sign * power * value
    return {key: value for key, value in result.items() if value}


def _derivation_powers(f: ClassicalPolynomial) -> list[Symbol]:
    """[f, Df, D^2 f, ...] up to the last nonzero power."""
    omega = SymplecticConvention(f.ndof)
    powers = []
    current = _symbol(f)
    while current:
        powers.append(current)
        current = _apply_derivation(current, omega)
    return powers


def _lambda_left(symbol: Symbol, context: AlgebraContext) -> OperatorPolynomial:
    zeros = (0,) * (2 * context.ndof)
    total = OperatorPolynomial.zero(context)
    for (phi, lam), value in symbol.items():
        ordered = normal_order_product(Monomial(zeros, lam), Monomial(phi, zeros), context)
        total = poly_add(total, poly_scale(value, ordered))
    return total


# ==============================
# Quantization map
# ==============================
def bopp_quantize(f: ClassicalPolynomial,
                  variant: BoppVariant = BoppVariant.UNBARRED,
                  context: AlgebraContext | None = None) -> OperatorPolynomial:
    """F = sum_n (1/n!) (+-hbar/2)^n lambda...lambda omega...omega d...d f, lambda factors left.

    The result equals the Weyl-symmetrized f(Q, P) of the Bopp operators, so real f gives a
    Hermitian operator and unbarred images commute with barred ones.

    Raises:
        UnsupportedInputError: If f is not a ClassicalPolynomial.
    """
    context = _context_for(f, context)
    total = OperatorPolynomial.zero(context)
    for n, symbol in enumerate(_derivation_powers(f)):
        weight = HbarCoefficient.hbar(n, Fraction(variant.value, 2) ** n / factorial(n))
        total = poly_add(total, poly_scale(weight, _lambda_left(symbol, context)))
    return total


def bopp_operators(context: AlgebraContext, dof: int = 0) -> tuple[OperatorPolynomial, ...]:
    """(Q_j, P_j, Qbar_j, Pbar_j) for degree of freedom j."""
    q = ClassicalPolynomial.variable(PhaseIndex(PhaseKind.Q, dof), context.ndof)
    p = ClassicalPolynomial.variable(PhaseIndex(PhaseKind.P, dof), context.ndof)
    return (bopp_quantize(q, BoppVariant.UNBARRED, context),
            bopp_quantize(p, BoppVariant.UNBARRED, context),
            bopp_quantize(q, BoppVariant.BARRED, context),
            bopp_quantize(p, BoppVariant.BARRED, context))


def classical_operator(f: ClassicalPolynomial, context: AlgebraContext | None = None) -> OperatorPolynomial:
    """f(q, p) as a multiplicative operator."""
    context = _context_for(f, context)
    return _lambda_left(_symbol(f), context)


# ==============================
# Generators of evolution
# ==============================
def liouvillian(hamiltonian: ClassicalPolynomial, context: AlgebraContext | None = None) -> OperatorPolynomial:
    """L = lambda_a omega^{ab} d_b H with the lambda factor on the left."""
    context = _context_for(hamiltonian, context)
    powers = _derivation_powers(hamiltonian)
    if len(powers) < 2:
        return OperatorPolynomial.zero(context)
    return _lambda_left(powers[1], context)


def _odd_generator_terms(hamiltonian: ClassicalPolynomial, context: AlgebraContext):
    powers = _derivation_powers(hamiltonian)
    for j, n in enumerate(range(1, len(powers), 2)):
        weight = HbarCoefficient.hbar(2 * j, Fraction(1, 2 ** (2 * j) * factorial(2 * j + 1)))
        yield j, poly_scale(weight, _lambda_left(powers[n], context))


def moyal_generator(hamiltonian: ClassicalPolynomial, context: AlgebraContext | None = None) -> OperatorPolynomial:
    """G = sum_j hbar^{2j} / (2^{2j} (2j+1)!) lambda^{2j+1} omega^{2j+1} d^{2j+1} H.

    The series stops once 2j + 1 exceeds the degree of H; the j = 0 term is the Liouvillian.
    """
    context = _context_for(hamiltonian, context)
    total = OperatorPolynomial.zero(context)
    for _, term in _odd_generator_terms(hamiltonian, context):
        total = poly_add(total, term)
    return total


def leading_moyal_correction(hamiltonian: ClassicalPolynomial,
                             context: AlgebraContext | None = None) -> OperatorPolynomial:
    """G_(1) = (hbar^2/24) lambda_a lambda_b lambda_c omega^{ad} omega^{be} omega^{cf} d_d d_e d_f H."""
    context = _context_for(hamiltonian, context)
    for j, term in _odd_generator_terms(hamiltonian, context):
        if j == 1:
            return term
    return OperatorPolynomial.zero(context)


def verify_difference_identity(hamiltonian: ClassicalPolynomial,
                               context: AlgebraContext | None = None) -> OperatorPolynomial:
    """Residual G - (1/hbar)[H(Q, P) - H(Qbar, Pbar)]; zero for every polynomial H."""
    context = _context_for(hamiltonian, context)
    difference = poly_add(bopp_quantize(hamiltonian, BoppVariant.UNBARRED, context),
                          poly_scale(-1, bopp_quantize(hamiltonian, BoppVariant.BARRED, context)))
    return poly_add(moyal_generator(hamiltonian, context), poly_scale(-1, divide_by_hbar(difference)))


# ==============================
# Energy (non-)conservation
# ==============================
def energy_nonconservation_leading(hamiltonian: ClassicalPolynomial,
                                   context: AlgebraContext | None = None) -> OperatorPolynomial:
    """[L, H(Q, P)] kept up to order hbar^2; orders 0 and 1 vanish identically."""
    context = _context_for(hamiltonian, context)
    full = commutator(liouvillian(hamiltonian, context), bopp_quantize(hamiltonian, context=context))
    return truncate_hbar(full, 2)


def energy_drift_closed_form(hamiltonian: ClassicalPolynomial,
                             context: AlgebraContext | None = None) -> OperatorPolynomial:
    """Explicit contraction for the hbar^2 part of [L, H(Q, P)].

    -(hbar^2/8) w^{al be} w^{a1 b1} w^{a2 b2} (i l_a1 l_a2 d_al d_b1 d_b2 H d_be H
                                               + l_al d_be d_a1 d_a2 H d_b1 d_b2 H),
    with every lambda factor written on the left before normal ordering.
    """
    context = _context_for(hamiltonian, context)
    omega = SymplecticConvention(hamiltonian.ndof)
    n2 = 2 * hamiltonian.ndof
    first: Symbol = {}
    second: Symbol = {}

    def add(target: Symbol, lam_slots: tuple[int, ...], polynomial: ClassicalPolynomial, sign: int):
        lam = [0] * n2
        for slot in lam_slots:
            lam[slot] += 1
        for exponents, value in polynomial.terms.items():
            key = (exponents, tuple(lam))
            target[key] = target.get(key, Fraction(0)) + sign * value

    d = hamiltonian.derivative
    for alpha, beta, w1 in omega.nonzero:
        for a1, b1, w2 in omega.nonzero:
            for a2, b2, w3 in omega.nonzero:
                sign = w1 * w2 * w3
                add(first, (a1, a2), d(alpha).derivative(b1).derivative(b2) * d(beta), sign)
                add(second, (alpha,), d(beta).derivative(a1).derivative(a2) * d(b1).derivative(b2), sign)

    bracket = poly_add(poly_scale(ComplexRational.i(), _lambda_left(first, context)),
                       _lambda_left(second, context))
    return poly_scale(HbarCoefficient.hbar(2, Fraction(-1, 8)), bracket)


# ==============================
# Angular momentum
# ==============================
def _angular_pair(axis: AngularAxis | str) -> tuple[int, int]:
    """Degrees of freedom (i, j) with M_axis = x_i p_j - x_j p_i."""
    if isinstance(axis, str):
        try:
            axis = AngularAxis[axis.upper()]
        except KeyError:
            raise UnsupportedInputError(f"Invalid angular momentum axis {axis!r}; expected x, y or z")
    if not isinstance(axis, AngularAxis):
        raise UnsupportedInputError(f"Invalid angular momentum axis {axis!r}")
    return (axis.value + 1) % 3, (axis.value + 2) % 3


def _three_dof(context: AlgebraContext | None) -> AlgebraContext:
    context = context or AlgebraContext(3)
    if context.ndof != 3:
        raise ContractViolationError(f"Angular momentum needs ndof = 3 (x, y, z), context has ndof {context.ndof}")
    return context


def angular_momentum(axis: AngularAxis | str, context: AlgebraContext | None = None) -> OperatorPolynomial:
    """Bopp image of the classical component, e.g. M_z = Q(x p_y - y p_x)."""
    i, j = _angular_pair(axis)
    context = _three_dof(context)
    q = [ClassicalPolynomial.q(k, 3) for k in range(3)]
    p = [ClassicalPolynomial.p(k, 3) for k in range(3)]
    return bopp_quantize(q[i] * p[j] - q[j] * p[i], context=context)


def angular_momentum_display(axis: AngularAxis | str, context: AlgebraContext | None = None) -> OperatorPolynomial:
    """The component assembled term by term in its textbook form.

    M_k = x_i p_j - x_j p_i - (hbar/2)[l_i x_j - l_j x_i + l_pi p_j - l_pj p_i]
          - (hbar^2/4)[l_pi l_j - l_i l_pj]
    """
    i, j = _angular_pair(axis)
    context = _three_dof(context)

    def g(kind: PhaseKind, dof: int) -> OperatorPolynomial:
        return OperatorPolynomial.generator(context, PhaseIndex(kind, dof))

    x_i, x_j = g(PhaseKind.Q, i), g(PhaseKind.Q, j)
    p_i, p_j = g(PhaseKind.P, i), g(PhaseKind.P, j)
    l_i, l_j = g(PhaseKind.LAMBDA_Q, i), g(PhaseKind.LAMBDA_Q, j)
    lp_i, lp_j = g(PhaseKind.LAMBDA_P, i), g(PhaseKind.LAMBDA_P, j)
    classical = x_i * p_j - x_j * p_i
    first = l_i * x_j - l_j * x_i + lp_i * p_j - lp_j * p_i
    second = lp_i * l_j - l_i * lp_j
    return (classical
            + poly_scale(HbarCoefficient.hbar(1, Fraction(-1, 2)), first)
            + poly_scale(HbarCoefficient.hbar(2, Fraction(-1, 4)), second))


# ==============================
# Quantization obstruction
# ==============================
def groenewald_probe(f: ClassicalPolynomial, g: ClassicalPolynomial,
                     context: AlgebraContext | None = None) -> OperatorPolynomial:
    """[Q(f), Q(g)] - i hbar Q({f, g}); zero when the pair obeys the Dirac rule."""
    context = _context_for(f, context)
    bracket = commutator(bopp_quantize(f, context=context), bopp_quantize(g, context=context))
    expected = poly_scale(HbarCoefficient.hbar(1, ComplexRational.i()),
                          bopp_quantize(poisson_bracket(f, g), context=context))
    return poly_add(bracket, poly_scale(-1, expected))


