"""Exceptions raised by the exact operator algebra."""


class AlgebraError(Exception):
    """Base class for errors raised by the operator algebra."""
    pass


class ContractViolationError(AlgebraError):
    """Raised when operands come from different algebra contexts or a precondition fails."""
    pass


class UnsupportedInputError(AlgebraError):
    """Raised for input outside the polynomial calculus (unknown symbols, bad axes, negative powers)."""
    pass


class DegreeOverflowError(AlgebraError):
    """Raised when an expansion produces a term above the context's degree cap."""

    def __init__(self, degree: int, cap: int):
        super().__init__(f"Term of total degree {degree} exceeds the degree cap of {cap}.")
        self.degree = degree
        self.cap = cap
