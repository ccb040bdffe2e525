"""Phase-space symbols and normal-ordered operator monomials."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from model.algebra.errors import ContractViolationError


class PhaseKind(Enum):
    """The four families of KvN operators, in canonical order."""
    Q = "q"
    P = "p"
    LAMBDA_Q = "lq"
    LAMBDA_P = "lp"

    @property
    def is_lambda(self) -> bool:
        return self in (PhaseKind.LAMBDA_Q, PhaseKind.LAMBDA_P)

    @property
    def conjugate(self) -> PhaseKind:
        """The kind whose commutator with this one is nonzero."""
        return {
            PhaseKind.Q: PhaseKind.LAMBDA_Q,
            PhaseKind.P: PhaseKind.LAMBDA_P,
            PhaseKind.LAMBDA_Q: PhaseKind.Q,
            PhaseKind.LAMBDA_P: PhaseKind.P,
        }[self]


_KIND_ORDER = {kind: position for position, kind in enumerate(PhaseKind)}


class PhaseIndex(NamedTuple):
    """A single generator of the algebra: kind plus degree-of-freedom index."""
    kind: PhaseKind
    dof: int = 0

    def slot(self, ndof: int) -> int:
        """Position of this symbol in a coordinate tuple (q_0..q_{n-1}, p_0..p_{n-1})."""
        if not 0 <= self.dof < ndof:
            raise ContractViolationError(f"Degree of freedom {self.dof} is outside an algebra with ndof={ndof}")
        family = 0 if self.kind in (PhaseKind.Q, PhaseKind.LAMBDA_Q) else 1
        return family * ndof + self.dof

    def sort_key(self) -> tuple[int, int]:
        return _KIND_ORDER[self.kind], self.dof

    def symbol(self, ndof: int) -> str:
        return self.kind.value if ndof == 1 else f"{self.kind.value}{self.dof}"


def coordinate_index(slot: int, ndof: int, is_lambda: bool) -> PhaseIndex:
    """Inverse of PhaseIndex.slot."""
    family, dof = divmod(slot, ndof)
    if is_lambda:
        return PhaseIndex(PhaseKind.LAMBDA_Q if family == 0 else PhaseKind.LAMBDA_P, dof)
    return PhaseIndex(PhaseKind.Q if family == 0 else PhaseKind.P, dof)


@dataclass(frozen=True, order=True)
class Monomial:
    """A normal-ordered product: every phi factor to the left of every lambda factor.

    ``phi`` holds the exponents of (q_0..q_{n-1}, p_0..p_{n-1}) and ``lam`` the exponents of
    (lq_0..lq_{n-1}, lp_0..lp_{n-1}); coordinate slot a of ``lam`` is conjugate to slot a of
    ``phi``. The empty monomial is the identity operator.
    """
    phi: tuple[int, ...]
    lam: tuple[int, ...]

    def __post_init__(self):
        if len(self.phi) != len(self.lam) or len(self.phi) % 2:
            raise ContractViolationError("Monomial exponent tuples must both have length 2*ndof")
        if any(e < 0 for e in self.phi + self.lam):
            raise ContractViolationError("Monomial exponents must be non-negative")

    @classmethod
    def identity(cls, ndof: int) -> Monomial:
        return cls((0,) * (2 * ndof), (0,) * (2 * ndof))

    @classmethod
    def from_exponents(cls, ndof: int, exponents: dict[PhaseIndex, int]) -> Monomial:
        phi = [0] * (2 * ndof)
        lam = [0] * (2 * ndof)
        for index, power in exponents.items():
            target = lam if index.kind.is_lambda else phi
            target[index.slot(ndof)] += power
        return cls(tuple(phi), tuple(lam))

    @classmethod
    def generator(cls, ndof: int, index: PhaseIndex) -> Monomial:
        return cls.from_exponents(ndof, {index: 1})

    @property
    def ndof(self) -> int:
        return len(self.phi) // 2

    @property
    def degree(self) -> int:
        return sum(self.phi) + sum(self.lam)

    @property
    def lambda_degree(self) -> int:
        return sum(self.lam)

    @property
    def exponents(self) -> dict[PhaseIndex, int]:
        """Nonzero exponents keyed by symbol, in canonical order."""
        result = {}
        for is_lambda, powers in ((False, self.phi), (True, self.lam)):
            for slot, power in enumerate(powers):
                if power:
                    result[coordinate_index(slot, self.ndof, is_lambda)] = power
        return dict(sorted(result.items(), key=lambda item: item[0].sort_key()))

    def is_identity(self) -> bool:
        return self.degree == 0

    def render(self) -> str:
        factors = []
        for index, power in self.exponents.items():
            symbol = index.symbol(self.ndof)
            factors.append(symbol if power == 1 else f"{symbol}^{power}")
        return "*".join(factors) if factors else "1"

    def __str__(self) -> str:
        return self.render()
