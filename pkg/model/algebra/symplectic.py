"""The constant symplectic form on a 2n-dimensional phase space."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np


@dataclass(frozen=True)
class SymplecticConvention:
    """omega^{ab} with omega^{q_j p_j} = +1 and omega^{p_j q_j} = -1.

    Coordinate slots follow the phase-space layout used everywhere in the algebra:
    slot j is q_j and slot n + j is p_j.
    """
    ndof: int

    def __post_init__(self):
        if self.ndof < 1:
            raise ValueError(f"ndof must be positive, got {self.ndof}")

    @property
    def dimension(self) -> int:
        return 2 * self.ndof

    def __call__(self, a: int, b: int) -> int:
        n = self.ndof
        if b == a + n and a < n:
            return 1
        if a == b + n and b < n:
            return -1
        return 0

    @cached_property
    def nonzero(self) -> tuple[tuple[int, int, int], ...]:
        """All (a, b, omega^{ab}) with a nonzero entry."""
        return tuple((a, b, self(a, b))
                     for a in range(self.dimension)
                     for b in range(self.dimension)
                     if self(a, b))

    def partners(self, a: int) -> Iterator[tuple[int, int]]:
        """Yield (b, omega^{ab}) for the single b paired with slot a."""
        for row, b, sign in self.nonzero:
            if row == a:
                yield b, sign

    def as_array(self) -> np.ndarray:
        return np.array([[self(a, b) for b in range(self.dimension)] for a in range(self.dimension)])

    def is_valid(self) -> bool:
        matrix = self.as_array()
        return bool(np.array_equal(matrix, -matrix.T)
                    and np.array_equal(matrix @ matrix, -np.eye(self.dimension, dtype=int)))
