"""Hamiltonians H(q, p) = p^2 / 2m + V(q) with polynomial V."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from numpy.polynomial import polynomial as P

from model.algebra import ClassicalPolynomial
from model.phase_space.errors import PhaseSpaceError

MAX_POTENTIAL_DEGREE = 8


def _exact(value: float) -> Fraction:
    """Decimal reading of a float, so 0.1 becomes 1/10 rather than its binary expansion."""
    return Fraction(repr(float(value)))


@dataclass(frozen=True)
class HamiltonianSpec:
    """Mass and potential coefficients (c_0, c_1, ...) of V(q) = sum_k c_k q^k."""
    mass: float = 1.0
    potential: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "potential", tuple(float(c) for c in self.potential))
        if not (math.isfinite(self.mass) and self.mass > 0):
            raise PhaseSpaceError(f"mass must be positive and finite, got {self.mass}")
        if not all(math.isfinite(c) for c in self.potential):
            raise PhaseSpaceError(f"potential coefficients must be finite, got {self.potential}")
        if self.degree > MAX_POTENTIAL_DEGREE:
            raise PhaseSpaceError(f"potential degree {self.degree} exceeds the cap of {MAX_POTENTIAL_DEGREE}")

    @classmethod
    def free(cls, mass: float = 1.0) -> HamiltonianSpec:
        return cls(mass, ())

    @classmethod
    def harmonic(cls, omega: float = 1.0, mass: float = 1.0) -> HamiltonianSpec:
        return cls(mass, (0.0, 0.0, mass * omega ** 2 / 2))

    @classmethod
    def quartic(cls, coupling: float = 0.25, omega: float = 0.0, mass: float = 1.0) -> HamiltonianSpec:
        """V = m omega^2 q^2 / 2 + coupling q^4."""
        return cls(mass, (0.0, 0.0, mass * omega ** 2 / 2, 0.0, coupling))

    @property
    def degree(self) -> int:
        nonzero = [k for k, c in enumerate(self.potential) if c != 0.0]
        return max(nonzero, default=0)

    def is_quadratic(self) -> bool:
        return self.degree <= 2

    def potential_at(self, q: np.ndarray) -> np.ndarray:
        return P.polyval(q, self.potential) if self.potential else np.zeros_like(np.asarray(q, dtype=float))

    def force_gradient(self, q: np.ndarray) -> np.ndarray:
        """V'(q)."""
        if len(self.potential) < 2:
            return np.zeros_like(np.asarray(q, dtype=float))
        return P.polyval(q, P.polyder(self.potential))

    def energy(self, q: np.ndarray, p: np.ndarray) -> np.ndarray:
        return np.asarray(p) ** 2 / (2 * self.mass) + self.potential_at(q)

    def to_classical(self) -> ClassicalPolynomial:
        """The same Hamiltonian as an exact polynomial in one degree of freedom."""
        terms = {(0, 2): Fraction(1) / (2 * _exact(self.mass))}
        for k, c in enumerate(self.potential):
            if c:
                terms[(k, 0)] = _exact(c)
        return ClassicalPolynomial(1, terms)
