"""Exact operator algebra of KvN mechanics: normal ordering, Bopp quantization, generators."""

from .classical import ClassicalPolynomial, poisson_bracket
from .coefficients import ComplexRational, HbarCoefficient
from .errors import AlgebraError, ContractViolationError, DegreeOverflowError, UnsupportedInputError
from .grammar import parse_classical, parse_operator
from .monomials import Monomial, PhaseIndex, PhaseKind
from .operators import (AlgebraContext, OperatorPolynomial, commutator, divide_by_hbar, hbar_component,
                        hermitian_conjugate, is_hermitian, normal_order_product, poly_add, poly_mul,
                        poly_scale, substitute_hbar, truncate_hbar)
from .quantization import (AngularAxis, BoppVariant, angular_momentum, angular_momentum_display,
                           bopp_operators, bopp_quantize, classical_operator, energy_drift_closed_form,
                           energy_nonconservation_leading, groenewald_probe, leading_moyal_correction,
                           liouvillian, moyal_generator, verify_difference_identity)
from .sampling import random_classical_polynomial, random_monomial, random_operator
from .symplectic import SymplecticConvention

__all__ = [
    'ClassicalPolynomial', 'poisson_bracket',
    'ComplexRational', 'HbarCoefficient',
    'AlgebraError', 'ContractViolationError', 'DegreeOverflowError', 'UnsupportedInputError',
    'parse_classical', 'parse_operator',
    'Monomial', 'PhaseIndex', 'PhaseKind',
    'AlgebraContext', 'OperatorPolynomial', 'commutator', 'divide_by_hbar', 'hbar_component',
    'hermitian_conjugate', 'is_hermitian', 'normal_order_product', 'poly_add', 'poly_mul',
    'poly_scale', 'substitute_hbar', 'truncate_hbar',
    'AngularAxis', 'BoppVariant', 'angular_momentum', 'angular_momentum_display', 'bopp_operators',
    'bopp_quantize', 'classical_operator', 'energy_drift_closed_form', 'energy_nonconservation_leading',
    'groenewald_probe', 'leading_moyal_correction', 'liouvillian', 'moyal_generator',
    'verify_difference_identity',
    'random_classical_polynomial', 'random_monomial', 'random_operator',
    'SymplecticConvention',
]
