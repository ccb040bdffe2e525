"""Quantum observables F(Q, P) acting on the Q factor of a (Q, Qbar) state."""
from __future__ import annotations

from math import comb

import numpy as np
import scipy.fft

from model.algebra import ClassicalPolynomial, UnsupportedInputError
from model.phase_space import Axis, KvnState, Representation, to_representation


def spectral_power(values: np.ndarray, axis: Axis, power: int, factor: complex, along: int = 0) -> np.ndarray:
    """(factor * d/dx)^power along one axis, by multiplication with (i factor k)^power in Fourier space."""
    if power == 0:
        return values
    k = axis.fft_frequencies()
    shape = [1] * values.ndim
    shape[along] = k.size
    multiplier = ((1j * factor * k) ** power).reshape(shape)
    return scipy.fft.ifft(scipy.fft.fft(values, axis=along) * multiplier, axis=along)


def _multiply(values: np.ndarray, coordinates: np.ndarray, power: int, along: int = 0) -> np.ndarray:
    if power == 0:
        return values
    shape = [1] * values.ndim
    shape[along] = coordinates.size
    return values * (coordinates ** power).reshape(shape)


def weyl_apply(values: np.ndarray, f: ClassicalPolynomial, coordinates: np.ndarray, axis: Axis,
               hbar: float, along: int = 0) -> np.ndarray:
    """Weyl-ordered f(Q, P) with Q = coordinates and P = -i hbar d/dQ along one array axis.

    Each monomial uses Weyl(q^a p^b) = 2^-a sum_k C(a, k) Q^k P^b Q^(a-k), which is the
    symmetric ordering produced by Bopp quantization.
    """
    if f.ndof != 1:
        raise UnsupportedInputError(f"Quantum observables act on one degree of freedom, got ndof={f.ndof}")
    result = np.zeros_like(values, dtype=np.complex128)
    for (a, b), coefficient in f.terms.items():
        term = np.zeros_like(result)
        for k in range(a + 1):
            inner = _multiply(values, coordinates, a - k, along)
            inner = spectral_power(inner, axis, b, -1j * hbar, along)
            term = term + comb(a, k) * _multiply(inner, coordinates, k, along)
        result = result + float(coefficient) / 2 ** a * term
    return result


def apply_quantum_observable(state: KvnState, f: ClassicalPolynomial) -> KvnState:
    """F(Q, P) on the Q axis of a (Q, Qbar) state; the identity on Qbar.

    The result is not normalized.

    Raises:
        RepresentationError: If the state is not in (Q, Qbar).
    """
    state.require(Representation.Q_QBAR)
    axis = state.grid.bopp_axis
    amplitudes = weyl_apply(np.asarray(state.amplitudes), f, axis.values, axis, state.hbar, along=0)
    return state.with_amplitudes(amplitudes)


def quantum_expectation(state: KvnState, f: ClassicalPolynomial) -> float:
    """<psi|F(Q, P)|psi> / <psi|psi> for a state in any representation."""
    state = to_representation(state, Representation.Q_QBAR)
    applied = apply_quantum_observable(state, f)
    return float((state.inner(applied) / state.norm_squared()).real)
