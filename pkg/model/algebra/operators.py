"""Normal-ordered polynomials in the KvN operators q, p, lambda_q, lambda_p.

The only nontrivial commutators are [phi^a, lambda_b] = i delta^a_b; everything else commutes.
Every value is stored in the canonical form with all phi factors left of all lambda factors,
so two polynomials are equal exactly when their term maps are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from types import MappingProxyType
from typing import Iterable, Mapping

from model.algebra.coefficients import ComplexRational, HbarCoefficient, MINUS_I_POWERS, Scalar
from model.algebra.errors import ContractViolationError, DegreeOverflowError
from model.algebra.monomials import Monomial, PhaseIndex

DEFAULT_DEGREE_CAP = 12


@dataclass(frozen=True)
class AlgebraContext:
    """Number of degrees of freedom plus the total-degree cap for expansions."""
    ndof: int = 1
    degree_cap: int = DEFAULT_DEGREE_CAP

    def __post_init__(self):
        if self.ndof < 1:
            raise ContractViolationError(f"ndof must be positive, got {self.ndof}")
        if self.degree_cap < 1:
            raise ContractViolationError(f"degree cap must be positive, got {self.degree_cap}")


@dataclass(frozen=True)
class OperatorPolynomial:
    context: AlgebraContext
    terms: Mapping[Monomial, HbarCoefficient]

    def __init__(self, context: AlgebraContext, terms: Mapping[Monomial, HbarCoefficient] | None = None):
        cleaned = {}
        for monomial, coefficient in (terms or {}).items():
            if monomial.ndof != context.ndof:
                raise ContractViolationError(
                    f"Monomial {monomial} has ndof {monomial.ndof}, context has ndof {context.ndof}")
            if not isinstance(coefficient, HbarCoefficient):
                coefficient = HbarCoefficient.constant(coefficient)
            if not coefficient.is_zero():
                if monomial.degree > context.degree_cap:
                    raise DegreeOverflowError(monomial.degree, context.degree_cap)
                cleaned[monomial] = coefficient
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(cleaned.items(), key=_term_key))))

    # ==============================
    # Construction
    # ==============================
    @classmethod
    def zero(cls, context: AlgebraContext) -> OperatorPolynomial:
        return cls(context)

    @classmethod
    def constant(cls, context: AlgebraContext, value: Scalar | HbarCoefficient) -> OperatorPolynomial:
        return cls(context, {Monomial.identity(context.ndof): value})

    @classmethod
    def generator(cls, context: AlgebraContext, index: PhaseIndex) -> OperatorPolynomial:
        return cls(context, {Monomial.generator(context.ndof, index): 1})

    @classmethod
    def hbar(cls, context: AlgebraContext, power: int = 1, value: Scalar = 1) -> OperatorPolynomial:
        return cls.constant(context, HbarCoefficient.hbar(power, value))

    @property
    def ndof(self) -> int:
        return self.context.ndof

    # ==============================
    # Equality and queries
    # ==============================
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorPolynomial):
            return NotImplemented
        return self.context == other.context and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.context, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(monomial.is_identity() for monomial in self.terms)

    @property
    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def max_hbar_power(self) -> int:
        return max((c.max_power() for c in self.terms.values()), default=0)

    def hbar_powers(self) -> tuple[int, ...]:
        return tuple(sorted({k for c in self.terms.values() for k in c.terms}))

    # ==============================
    # Operators
    # ==============================
    def __add__(self, other) -> OperatorPolynomial:
        return poly_add(self, _coerce(self.context, other))

    __radd__ = __add__

    def __neg__(self) -> OperatorPolynomial:
        return poly_scale(-1, self)

    def __sub__(self, other) -> OperatorPolynomial:
        return poly_add(self, poly_scale(-1, _coerce(self.context, other)))

    def __rsub__(self, other) -> OperatorPolynomial:
        return _coerce(self.context, other) - self

    def __mul__(self, other) -> OperatorPolynomial:
        if isinstance(other, OperatorPolynomial):
            return poly_mul(self, other)
        return poly_scale(other, self)

    def __rmul__(self, other) -> OperatorPolynomial:
        return poly_scale(other, self)

    def __pow__(self, exponent: int) -> OperatorPolynomial:
        result = OperatorPolynomial.constant(self.context, 1)
        for _ in range(exponent):
            result = poly_mul(result, self)
        return result

    # ==============================
    # Text form
    # ==============================
    def render(self) -> str:
        """Stable text form, e.g. ``(-1/4)*hbar^2*q*lp^3 + (-1)*q^3*lp``.

        One term per (hbar power, monomial) pair, ordered by hbar power, then degree, then
        exponents. The zero polynomial renders as ``0``.
        """
        rows = []
        for monomial, coefficient in self.terms.items():
            for power, value in coefficient.terms.items():
                rows.append((power, _term_key((monomial, coefficient)), monomial, value))
        if not rows:
            return "0"
        parts = []
        for power, _, monomial, value in sorted(rows, key=lambda row: (row[0], row[1])):
            factors = []
            if value != ComplexRational.coerce(1) or (power == 0 and monomial.is_identity()):
                factors.append(f"({value})")
            if power:
                factors.append("hbar" if power == 1 else f"hbar^{power}")
            if not monomial.is_identity():
                factors.append(monomial.render())
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"OperatorPolynomial(ndof={self.ndof}, {self.render()})"


def _term_key(item: tuple[Monomial, HbarCoefficient]):
    monomial = item[0]
    return monomial.degree, monomial.phi, monomial.lam


def _coerce(context: AlgebraContext, value) -> OperatorPolynomial:
    if isinstance(value, OperatorPolynomial):
        return value
    return OperatorPolynomial.constant(context, value)


def _check_same_context(a: OperatorPolynomial, b: OperatorPolynomial) -> None:
    if a.context != b.context:
        raise ContractViolationError(
            f"Operands live in different algebra contexts: {a.context} vs {b.context}")


# ==============================
# Normal ordering
# ==============================
@lru_cache(maxsize=None)
def _ordered_terms(a: Monomial, b: Monomial) -> tuple[tuple[Monomial, ComplexRational], ...]:
    """Expand a*b = phi^A lam^B phi^C lam^D by moving lam^B past phi^C.

    Per conjugate pair: lam^m phi^n = sum_k C(m,k) C(n,k) k! (-i)^k phi^(n-k) lam^(m-k).
    """
    slots = range(len(a.phi))
    ranges = [range(min(a.lam[s], b.phi[s]) + 1) for s in slots]
    result = []
    for contractions in product(*ranges):
        weight = 1
        for s, k in enumerate(contractions):
            if k:
                weight *= comb(a.lam[s], k) * comb(b.phi[s], k) * factorial(k)
        phi = tuple(a.phi[s] + b.phi[s] - contractions[s] for s in slots)
        lam = tuple(a.lam[s] + b.lam[s] - contractions[s] for s in slots)
        result.append((Monomial(phi, lam), MINUS_I_POWERS[sum(contractions) % 4] * weight))
    return tuple(result)


def normal_order_product(a: Monomial, b: Monomial, context: AlgebraContext | None = None) -> OperatorPolynomial:
    """Normal-ordered expansion of the concatenation a*b.

    Raises:
        ContractViolationError: If the monomials belong to different ndof.
    """
    if a.ndof != b.ndof:
        raise ContractViolationError(f"Cannot multiply monomials with ndof {a.ndof} and {b.ndof}")
    context = context or AlgebraContext(a.ndof)
    return OperatorPolynomial(context, dict(_ordered_terms(a, b)))


# ==============================
# Ring operations
# ==============================
def _accumulate(context: AlgebraContext,
                contributions: Iterable[tuple[Monomial, HbarCoefficient]]) -> OperatorPolynomial:
    totals: dict[Monomial, HbarCoefficient] = {}
    for monomial, coefficient in contributions:
        if monomial in totals:
            totals[monomial] = totals[monomial] + coefficient
        else:
            totals[monomial] = coefficient
    return OperatorPolynomial(context, totals)


def poly_add(a: OperatorPolynomial, b: OperatorPolynomial) -> OperatorPolynomial:
    _check_same_context(a, b)
    return _accumulate(a.context, list(a.terms.items()) + list(b.terms.items()))


def poly_scale(factor: Scalar | HbarCoefficient, a: OperatorPolynomial) -> OperatorPolynomial:
    if not isinstance(factor, HbarCoefficient):
        factor = HbarCoefficient.constant(factor)
    return OperatorPolynomial(a.context, {m: c * factor for m, c in a.terms.items()})


def poly_mul(a: OperatorPolynomial, b: OperatorPolynomial) -> OperatorPolynomial:
    _check_same_context(a, b)
    cap = a.context.degree_cap

    def contributions():
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                if ma.degree + mb.degree > cap:
                    # contractions only lower the degree, so only the leading term can overflow
                    raise DegreeOverflowError(ma.degree + mb.degree, cap)
                coefficient = ca * cb
                for monomial, weight in _ordered_terms(ma, mb):
                    yield monomial, coefficient * weight

    return _accumulate(a.context, contributions())


def hermitian_conjugate(a: OperatorPolynomial) -> OperatorPolynomial:
    """Reverse factor order and conjugate coefficients; phi and lambda are Hermitian."""
    n2 = 2 * a.ndof

    def contributions():
        for monomial, coefficient in a.terms.items():
            lambdas = Monomial((0,) * n2, monomial.lam)
            phis = Monomial(monomial.phi, (0,) * n2)
            conjugate = coefficient.conjugate()
            for reordered, weight in _ordered_terms(lambdas, phis):
                yield reordered, conjugate * weight

    return _accumulate(a.context, contributions())


def is_hermitian(a: OperatorPolynomial) -> bool:
    return hermitian_conjugate(a) == a


def commutator(a: OperatorPolynomial, b: OperatorPolynomial) -> OperatorPolynomial:
    """[a, b] = ab - ba, normal-ordered."""
    return poly_add(poly_mul(a, b), poly_scale(-1, poly_mul(b, a)))


# ==============================
# hbar grading
# ==============================
def substitute_hbar(a: OperatorPolynomial, value: int | Fraction) -> OperatorPolynomial:
    """Evaluate every coefficient at hbar = value; value 0 is the classical limit."""
    return OperatorPolynomial(a.context, {m: HbarCoefficient.constant(c.evaluate(value))
                                          for m, c in a.terms.items()})


def truncate_hbar(a: OperatorPolynomial, max_power: int) -> OperatorPolynomial:
    """Drop every term of order above hbar**max_power."""
    return OperatorPolynomial(a.context, {m: c.truncate(max_power) for m, c in a.terms.items()})


def hbar_component(a: OperatorPolynomial, power: int) -> OperatorPolynomial:
    """The coefficient of hbar**power, returned as an hbar-free polynomial."""
    return OperatorPolynomial(a.context, {m: HbarCoefficient.constant(c.component(power))
                                          for m, c in a.terms.items()})


def divide_by_hbar(a: OperatorPolynomial) -> OperatorPolynomial:
    """Exact division by hbar as a grading shift.

    Raises:
        ContractViolationError: If the hbar**0 component is nonzero.
    """
    remainder = hbar_component(a, 0)
    if not remainder.is_zero():
        raise ContractViolationError(f"Cannot divide by hbar: order-zero part is {remainder.render()}")
    return OperatorPolynomial(a.context, {m: c.shift(-1) for m, c in a.terms.items()})

