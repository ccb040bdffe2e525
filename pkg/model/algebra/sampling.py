"""Seeded random polynomials for the randomized identity checks."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from model.algebra.classical import ClassicalPolynomial
from model.algebra.coefficients import ComplexRational, HbarCoefficient
from model.algebra.monomials import Monomial
from model.algebra.operators import AlgebraContext, OperatorPolynomial


def _exponents(rng: np.random.Generator, slots: int, max_degree: int) -> tuple[int, ...]:
    degree = int(rng.integers(0, max_degree + 1))
    return tuple(int(e) for e in rng.multinomial(degree, [1 / slots] * slots))


def _rational(rng: np.random.Generator, bound: int = 5) -> Fraction:
    numerator = int(rng.integers(1, bound + 1)) * (1 if rng.random() < 0.5 else -1)
    return Fraction(numerator, int(rng.integers(1, 5)))


def random_classical_polynomial(rng: np.random.Generator, ndof: int = 1, max_degree: int = 6,
                                n_terms: int = 4) -> ClassicalPolynomial:
    """A polynomial with up to n_terms monomials, each of total degree <= max_degree."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for _ in range(n_terms):
        exponents = _exponents(rng, 2 * ndof, max_degree)
        terms[exponents] = terms.get(exponents, Fraction(0)) + _rational(rng)
    return ClassicalPolynomial(ndof, terms)


def random_monomial(rng: np.random.Generator, ndof: int = 1, max_degree: int = 4) -> Monomial:
    """A normal-ordered monomial mixing phi and lambda factors."""
    exponents = _exponents(rng, 4 * ndof, max_degree)
    return Monomial(exponents[:2 * ndof], exponents[2 * ndof:])


def random_operator(rng: np.random.Generator, context: AlgebraContext, max_degree: int = 3,
                    n_terms: int = 3) -> OperatorPolynomial:
    """A sum of random monomials with complex-rational, hbar-graded coefficients."""
    terms: dict[Monomial, HbarCoefficient] = {}
    for _ in range(n_terms):
        monomial = random_monomial(rng, context.ndof, max_degree)
        coefficient = HbarCoefficient.hbar(int(rng.integers(0, 3)), ComplexRational(_rational(rng), _rational(rng)))
        terms[monomial] = terms.get(monomial, HbarCoefficient()) + coefficient
    return OperatorPolynomial(context, terms)
