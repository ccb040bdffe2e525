"""The exact identity suite behind ``verify-algebra``.

Every check compares an operator polynomial with the zero polynomial, so a line either
prints 0 or the full nonzero residual.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

import numpy as np

import app
from model.algebra.classical import ClassicalPolynomial, poisson_bracket
from model.algebra.coefficients import ComplexRational, HbarCoefficient
from model.algebra.errors import ContractViolationError
from model.algebra.operators import (AlgebraContext, OperatorPolynomial, commutator, divide_by_hbar,
                                     hermitian_conjugate, poly_add, poly_mul, poly_scale, substitute_hbar,
                                     truncate_hbar)
from model.algebra.quantization import (AngularAxis, BoppVariant, angular_momentum, angular_momentum_display,
                                        bopp_operators, bopp_quantize, classical_operator, energy_drift_closed_form,
                                        energy_nonconservation_leading, groenewald_probe, leading_moyal_correction,
                                        liouvillian, moyal_generator, verify_difference_identity)
from model.algebra.sampling import random_classical_polynomial, random_operator
from model.reports import EXACT, CheckLine, CheckReport, Expectation

DEFAULT_SAMPLES = 50
RING_SAMPLES = 10
RING_DEGREE = 3


def exact_line(name: str, residual: OperatorPolynomial, expectation: Expectation = Expectation.PASS) -> CheckLine:
    """PASS when the residual is the zero polynomial (or, for an expected-nonzero check, when it is not)."""
    zero = residual.is_zero()
    passed = zero if expectation is Expectation.PASS else not zero
    return CheckLine(name, passed, residual.render(), EXACT, expectation)


def _first_residual(name: str, residuals: Iterable[OperatorPolynomial], count: int) -> CheckLine:
    """One line for a whole randomized family: the first nonzero residual, if any."""
    for index, residual in enumerate(residuals):
        if not residual.is_zero():
            return CheckLine(name, False, residual.render(), EXACT, detail=f"sample {index} of {count}")
    return CheckLine(name, True, "0", EXACT, detail=f"all {count} samples")


def weyl_symmetrized(f: ClassicalPolynomial, context: AlgebraContext) -> OperatorPolynomial:
    """f(Q, P) with each q^a p^b replaced by 2^-a sum_k C(a, k) Q^k P^b Q^(a-k)."""
    operators = [bopp_operators(context, dof)[:2] for dof in range(f.ndof)]
    total = OperatorPolynomial.zero(context)
    for exponents, coefficient in f.terms.items():
        term = OperatorPolynomial.constant(context, coefficient)
        for dof, (Q, P) in enumerate(operators):
            a, b = exponents[dof], exponents[f.ndof + dof]
            factor = OperatorPolynomial.zero(context)
            for k in range(a + 1):
                factor = factor + comb(a, k) * (Q ** k * P ** b * Q ** (a - k))
            term = poly_mul(term, poly_scale(Fraction(1, 2 ** a), factor))
        total = poly_add(total, term)
    return total


# ==============================
# Sections
# ==============================
def heisenberg_checks(context: AlgebraContext) -> CheckReport:
    """All commutators among Q_j, P_j, Qbar_j, Pbar_j."""
    i_hbar = OperatorPolynomial.hbar(context, 1, ComplexRational.i())
    zero = OperatorPolynomial.zero(context)
    ops = [bopp_operators(context, dof) for dof in range(context.ndof)]
    lines = []
    for j in range(context.ndof):
        for k in range(context.ndof):
            Qj, Pj, Qbj, Pbj = ops[j]
            Qk, Pk, Qbk, Pbk = ops[k]
            delta = i_hbar if j == k else zero
            suffix = f"_{j}{k}" if context.ndof > 1 else ""
            lines += [
                exact_line(f"[Q,P]{suffix} - i hbar delta", commutator(Qj, Pk) - delta),
                exact_line(f"[Qbar,Pbar]{suffix} + i hbar delta", commutator(Qbj, Pbk) + delta),
                exact_line(f"[Q,Qbar]{suffix}", commutator(Qj, Qbk)),
                exact_line(f"[Q,Pbar]{suffix}", commutator(Qj, Pbk)),
                exact_line(f"[P,Qbar]{suffix}", commutator(Pj, Qbk)),
                exact_line(f"[P,Pbar]{suffix}", commutator(Pj, Pbk)),
            ]
            if j < k:
                lines += [
                    exact_line(f"[Q,Q]{suffix}", commutator(Qj, Qk)),
                    exact_line(f"[P,P]{suffix}", commutator(Pj, Pk)),
                    exact_line(f"[Qbar,Qbar]{suffix}", commutator(Qbj, Qbk)),
                    exact_line(f"[Pbar,Pbar]{suffix}", commutator(Pbj, Pbk)),
                ]
    return CheckReport(f"Heisenberg algebra (ndof={context.ndof})", tuple(lines))


def angular_momentum_checks() -> CheckReport:
    """[M_i, M_j] = i hbar eps_ijk M_k, and each M_k matches its displayed form."""
    context = AlgebraContext(3)
    axes = list(AngularAxis)
    M = {axis: angular_momentum(axis, context) for axis in axes}
    i_hbar = HbarCoefficient.hbar(1, ComplexRational.i())
    lines = []
    for n, axis in enumerate(axes):
        a, b = axes[(n + 1) % 3], axes[(n + 2) % 3]
        lines.append(exact_line(f"[M_{a.name.lower()},M_{b.name.lower()}] - i hbar M_{axis.name.lower()}",
                                commutator(M[a], M[b]) - poly_scale(i_hbar, M[axis])))
    for axis in axes:
        lines.append(exact_line(f"M_{axis.name.lower()} - displayed form",
                                M[axis] - angular_momentum_display(axis, context)))
    return CheckReport("angular momentum", tuple(lines))


def generator_checks(hamiltonians: Sequence[ClassicalPolynomial], context: AlgebraContext,
                     max_degree: int) -> CheckReport:
    """Difference identity and conservation laws over a randomized Hamiltonian set."""
    count = len(hamiltonians)
    label = f"random H (ndof={context.ndof}, degree<={max_degree})"

    def lazily(build: Callable[[ClassicalPolynomial], OperatorPolynomial]):
        return (build(h) for h in hamiltonians)

    lines = (
        _first_residual(f"G - (1/hbar)[H(Q,P) - H(Qbar,Pbar)], {label}",
                        lazily(lambda h: verify_difference_identity(h, context)), count),
        _first_residual(f"[G, H(Q,P)], {label}",
                        lazily(lambda h: commutator(moyal_generator(h, context), bopp_quantize(h, context=context))),
                        count),
        _first_residual(f"[L, H(q,p)], {label}",
                        lazily(lambda h: commutator(liouvillian(h, context), classical_operator(h, context))), count),
    )
    return CheckReport("generators", lines)


def quartic_energy_checks() -> CheckReport:
    """[L, H(Q, P)] up to hbar^2 for H = p^2/2 + q^4/4: nonzero, closed form, cancelled by G_(1)."""
    context = AlgebraContext(1)
    q, p = ClassicalPolynomial.q(), ClassicalPolynomial.p()
    h = p ** 2 / 2 + q ** 4 / 4
    leading = energy_nonconservation_leading(h, context)
    correction = commutator(leading_moyal_correction(h, context), bopp_quantize(h, context=context))
    return CheckReport("energy non-conservation (p^2/2 + q^4/4)", (
        exact_line("[L, H(Q,P)] up to hbar^2", leading, Expectation.NONZERO),
        exact_line("[L, H(Q,P)] up to hbar^2 - closed form", leading - energy_drift_closed_form(h, context)),
        exact_line("[L, H(Q,P)] + [G_(1), H(Q,P)] up to hbar^2", truncate_hbar(leading + correction, 2)),
    ))


def groenewald_checks() -> CheckReport:
    """[Q(f), Q(g)] - i hbar Q({f, g}) for the monomial pairs (q^n, p^n)."""
    context = AlgebraContext(1)
    q, p = ClassicalPolynomial.q(), ClassicalPolynomial.p()
    lines = []
    for n in (1, 2, 3):
        expectation = Expectation.PASS if n < 3 else Expectation.NONZERO
        lines.append(exact_line(f"Dirac rule residual for (q^{n}, p^{n})",
                                groenewald_probe(q ** n, p ** n, context), expectation))
    return CheckReport("quantization obstruction", tuple(lines))


def ring_checks(rng: np.random.Generator, context: AlgebraContext, samples: int = RING_SAMPLES) -> CheckReport:
    """Jacobi identity, antisymmetry and associativity on random normal-ordered operators."""
    triples = [tuple(random_operator(rng, context, RING_DEGREE) for _ in range(3)) for _ in range(samples)]
    label = f"random operators (ndof={context.ndof})"
    return CheckReport("operator ring", (
        _first_residual(f"Jacobi identity, {label}",
                        (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a))
                         + commutator(c, commutator(a, b)) for a, b, c in triples), samples),
        _first_residual(f"[A,B] + [B,A], {label}",
                        (commutator(a, b) + commutator(b, a) for a, b, _ in triples), samples),
        _first_residual(f"(AB)C - A(BC), {label}",
                        (poly_mul(poly_mul(a, b), c) - poly_mul(a, poly_mul(b, c)) for a, b, c in triples), samples),
        _first_residual(f"(AB)^dagger - B^dagger A^dagger, {label}",
                        (hermitian_conjugate(poly_mul(a, b)) - poly_mul(hermitian_conjugate(b), hermitian_conjugate(a))
                         for a, b, _ in triples), samples),
    ))


def bopp_map_checks(hamiltonians: Sequence[ClassicalPolynomial], context: AlgebraContext) -> CheckReport:
    """Hermiticity, linearity, Weyl symmetrization and the classical limit of the Bopp map."""
    count = len(hamiltonians)
    pairs = list(zip(hamiltonians, hamiltonians[1:] + hamiltonians[:1]))

    def classical_limit(f: ClassicalPolynomial, g: ClassicalPolynomial) -> OperatorPolynomial:
        bracket = commutator(bopp_quantize(f, context=context), bopp_quantize(g, context=context))
        try:
            leading = substitute_hbar(divide_by_hbar(bracket), 0)
        except ContractViolationError:
            return bracket
        expected = poly_scale(ComplexRational.i(), classical_operator(poisson_bracket(f, g), context))
        return leading - expected

    return CheckReport("Bopp quantization", (
        _first_residual("Q(f) - Q(f)^dagger",
                        (bopp_quantize(f, context=context) - hermitian_conjugate(bopp_quantize(f, context=context))
                         for f in hamiltonians), count),
        _first_residual("Q(2f - g) - 2Q(f) + Q(g)",
                        (bopp_quantize(2 * f - g, context=context) - 2 * bopp_quantize(f, context=context)
                         + bopp_quantize(g, context=context) for f, g in pairs), count),
        _first_residual("Q(f) - Weyl-symmetrized f(Q,P)",
                        (bopp_quantize(f, context=context) - weyl_symmetrized(f, context) for f in hamiltonians),
                        count),
        _first_residual("Qbar(f) - Weyl-symmetrized f(Qbar,Pbar) (hbar -> -hbar)",
                        (bopp_quantize(f, BoppVariant.BARRED, context)
                         - _flip_hbar(weyl_symmetrized(f, context)) for f in hamiltonians), count),
        _first_residual("lim hbar->0 [Q(f),Q(g)]/(i hbar) - {f,g}",
                        (classical_limit(f, g) for f, g in pairs), count),
    ))


def _flip_hbar(a: OperatorPolynomial) -> OperatorPolynomial:
    terms = {}
    for monomial, coefficient in a.terms.items():
        terms[monomial] = HbarCoefficient({k: v * (-1) ** k for k, v in coefficient.terms.items()})
    return OperatorPolynomial(a.context, terms)


# ==============================
# Suite
# ==============================
def verify_algebra(ndof: int = 3, max_degree: int = 6, seed: int = 0,
                   samples: int = DEFAULT_SAMPLES) -> tuple[CheckReport, ...]:
    """Run every exact check; the randomized ones draw from default_rng(seed)."""
    context = AlgebraContext(ndof)
    if 2 * max_degree > context.degree_cap:
        raise ContractViolationError(f"max_degree {max_degree} needs products of degree {2 * max_degree}, "
                                     f"above the degree cap {context.degree_cap}")
    rng = np.random.default_rng(seed)
    hamiltonians = [random_classical_polynomial(rng, ndof, max_degree) for _ in range(samples)]
    app.logger.info(f"verify-algebra: ndof={ndof}, max_degree={max_degree}, seed={seed}, samples={samples}")
    reports = (
        heisenberg_checks(context),
        angular_momentum_checks(),
        generator_checks(hamiltonians, context, max_degree),
        quartic_energy_checks(),
        groenewald_checks(),
        ring_checks(rng, context),
        bopp_map_checks(hamiltonians, context),
    )
    for report in reports:
        app.logger.info(f"verify-algebra: {report.title}: {'PASS' if report.passed else 'FAIL'}")
    return reports
