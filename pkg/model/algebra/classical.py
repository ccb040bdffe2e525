"""Commutative phase-space polynomials f(q, p) with rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

import numpy as np

from model.algebra.errors import ContractViolationError, UnsupportedInputError
from model.algebra.monomials import PhaseIndex, PhaseKind, coordinate_index

Exponents = tuple[int, ...]


def _check_rational(value) -> Fraction:
    if isinstance(value, float):
        raise UnsupportedInputError(f"Floating point coefficient {value!r}; use an exact rational")
    try:
        return Fraction(value)
    except (TypeError, ValueError) as e:
        raise UnsupportedInputError(f"Not a rational coefficient: {value!r}") from e


@dataclass(frozen=True)
class ClassicalPolynomial:
    """A polynomial in (q_0..q_{n-1}, p_0..p_{n-1}).

    Keys of ``terms`` are exponent tuples in the phase-space slot layout; zero coefficients
    are never stored.
    """
    ndof: int
    terms: Mapping[Exponents, Fraction]

    def __init__(self, ndof: int, terms: Mapping[Exponents, int | Fraction] | None = None):
        if ndof < 1:
            raise ContractViolationError(f"ndof must be positive, got {ndof}")
        cleaned: dict[Exponents, Fraction] = {}
        for exponents, value in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != 2 * ndof or any(e < 0 for e in exponents):
                raise UnsupportedInputError(f"Exponent tuple {exponents} is not a monomial in {ndof} dof")
            value = _check_rational(value)
            if value:
                cleaned[exponents] = cleaned.get(exponents, Fraction(0)) + value
        cleaned = {k: v for k, v in cleaned.items() if v}
        object.__setattr__(self, "ndof", ndof)
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(cleaned.items()))))

    # ==============================
    # Construction
    # ==============================
    @classmethod
    def zero(cls, ndof: int = 1) -> ClassicalPolynomial:
        return cls(ndof)

    @classmethod
    def constant(cls, value: int | Fraction, ndof: int = 1) -> ClassicalPolynomial:
        return cls(ndof, {(0,) * (2 * ndof): value})

    @classmethod
    def variable(cls, index: PhaseIndex, ndof: int = 1) -> ClassicalPolynomial:
        if index.kind.is_lambda:
            raise UnsupportedInputError(f"{index.kind.value} is not a phase-space coordinate")
        exponents = [0] * (2 * ndof)
        exponents[index.slot(ndof)] = 1
        return cls(ndof, {tuple(exponents): 1})

    @classmethod
    def q(cls, dof: int = 0, ndof: int = 1) -> ClassicalPolynomial:
        return cls.variable(PhaseIndex(PhaseKind.Q, dof), ndof)

    @classmethod
    def p(cls, dof: int = 0, ndof: int = 1) -> ClassicalPolynomial:
        return cls.variable(PhaseIndex(PhaseKind.P, dof), ndof)

    # ==============================
    # Ring structure
    # ==============================
    def _coerce(self, other) -> ClassicalPolynomial:
        if isinstance(other, ClassicalPolynomial):
            if other.ndof != self.ndof:
                raise ContractViolationError(f"Cannot combine polynomials with ndof {self.ndof} and {other.ndof}")
            return other
        return ClassicalPolynomial.constant(_check_rational(other), self.ndof)

    def __add__(self, other) -> ClassicalPolynomial:
        other = self._coerce(other)
        merged = dict(self.terms)
        for exponents, value in other.terms.items():
            merged[exponents] = merged.get(exponents, Fraction(0)) + value
        return ClassicalPolynomial(self.ndof, merged)

    __radd__ = __add__

    def __neg__(self) -> ClassicalPolynomial:
        return ClassicalPolynomial(self.ndof, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> ClassicalPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> ClassicalPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> ClassicalPolynomial:
        other = self._coerce(other)
        product: dict[Exponents, Fraction] = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                product[key] = product.get(key, Fraction(0)) + v1 * v2
        return ClassicalPolynomial(self.ndof, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ClassicalPolynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise UnsupportedInputError(f"Only non-negative integer powers are polynomial, got {exponent!r}")
        result = ClassicalPolynomial.constant(1, self.ndof)
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, other) -> ClassicalPolynomial:
        other = self._coerce(other)
        if not other.is_constant() or other.is_zero():
            raise UnsupportedInputError("Division is only defined by a nonzero constant")
        return self * (1 / other.constant_term())

    # ==============================
    # Queries
    # ==============================
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exponents) for exponents in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * (2 * self.ndof), Fraction(0))

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def derivative(self, slot: int) -> ClassicalPolynomial:
        """Partial derivative along phase-space slot (q_j is slot j, p_j is slot n + j)."""
        result: dict[Exponents, Fraction] = {}
        for exponents, value in self.terms.items():
            power = exponents[slot]
            if power:
                lowered = list(exponents)
                lowered[slot] -= 1
                result[tuple(lowered)] = value * power
        return ClassicalPolynomial(self.ndof, result)

    def restricted_to_q(self) -> tuple[Fraction, ...]:
        """Coefficients c_k of a polynomial that depends on q_0 only."""
        coefficients = [Fraction(0)] * (self.degree + 1)
        for exponents, value in self.terms.items():
            if any(exponents[1:]):
                raise UnsupportedInputError(f"{self.render()} is not a function of q alone")
            coefficients[exponents[0]] = value
        return tuple(coefficients)

    def evaluate(self, *coordinates: np.ndarray | float) -> np.ndarray:
        """Evaluate on numeric arrays given in slot order (q_0..q_{n-1}, p_0..p_{n-1})."""
        if len(coordinates) != 2 * self.ndof:
            raise ContractViolationError(f"Expected {2 * self.ndof} coordinate arrays, got {len(coordinates)}")
        arrays = [np.asarray(c, dtype=float) for c in coordinates]
        total = np.zeros(np.broadcast_shapes(*(a.shape for a in arrays)))
        for exponents, value in self.terms.items():
            term = np.full(total.shape, float(value))
            for array, power in zip(arrays, exponents):
                if power:
                    term = term * array ** power
            total = total + term
        return total

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exponents, value in sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0])):
            factors = []
            for slot, power in enumerate(exponents):
                if power:
                    symbol = coordinate_index(slot, self.ndof, is_lambda=False).symbol(self.ndof)
                    factors.append(symbol if power == 1 else f"{symbol}^{power}")
            if not factors:
                parts.append(f"({value})")
            elif value == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"({value})*" + "*".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()


def poisson_bracket(f: ClassicalPolynomial, g: ClassicalPolynomial) -> ClassicalPolynomial:
    """{f, g} = sum_j (df/dq_j dg/dp_j - df/dp_j dg/dq_j)."""
    if f.ndof != g.ndof:
        raise ContractViolationError(f"Poisson bracket of polynomials with ndof {f.ndof} and {g.ndof}")
    n = f.ndof
    result = ClassicalPolynomial.zero(n)
    for j in range(n):
        result = result + f.derivative(j) * g.derivative(n + j) - f.derivative(n + j) * g.derivative(j)
    return result
