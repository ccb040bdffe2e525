"""Fourier and shear conventions shared by every representation change.

Sign convention: the transform to a lambda variable uses the kernel exp(-i lambda x),

    f~(lambda) = (2 pi)^(-1/2) * integral dx exp(-i lambda x) f(x),

so lambda = -i d/dx becomes multiplication by lambda and x = i d/dlambda. On a grid with
samples x_j = x_min + j dx and centered duals lambda_k = (k - n/2) d_lambda the discrete pair
is unitary with respect to the cell measures dx and d_lambda.
"""
from __future__ import annotations

import math

import numpy as np
import scipy.fft

import app
from model.phase_space.grid import Axis

SQRT_2PI = math.sqrt(2 * math.pi)


def _workers() -> int | None:
    return app.get_max_threads()


def _broadcast(vector: np.ndarray, axis: int, ndim: int) -> np.ndarray:
    shape = [1] * ndim
    shape[axis] = vector.size
    return vector.reshape(shape)


def to_dual(values: np.ndarray, grid_axis: Axis, axis: int, workers: int | None = None) -> np.ndarray:
    """x -> lambda along ``axis`` with kernel exp(-i lambda x)."""
    workers = workers if workers is not None else _workers()
    spectrum = scipy.fft.fftshift(scipy.fft.fft(values, axis=axis, workers=workers), axes=axis)
    phase = np.exp(-1j * grid_axis.dual_values * grid_axis.start)
    return spectrum * _broadcast(phase, axis, values.ndim) * (grid_axis.spacing / SQRT_2PI)


def from_dual(values: np.ndarray, grid_axis: Axis, axis: int, workers: int | None = None) -> np.ndarray:
    """Inverse of to_dual."""
    workers = workers if workers is not None else _workers()
    phase = np.exp(1j * grid_axis.dual_values * grid_axis.start)
    shifted = scipy.fft.ifftshift(values * _broadcast(phase, axis, values.ndim), axes=axis)
    return scipy.fft.ifft(shifted, axis=axis, workers=workers) * (SQRT_2PI / grid_axis.spacing)


def spectral_shift(values: np.ndarray, spacing: float, shifts: np.ndarray, axis: int,
                   workers: int | None = None) -> np.ndarray:
    """f(x) -> f(x + s) along ``axis``, with s varying across the other axis.

    ``shifts`` has one entry per index of the other axis of a 2D array; each line is moved by a
    pure phase in Fourier space, so the operation is exactly unitary.
    """
    workers = workers if workers is not None else _workers()
    n = values.shape[axis]
    frequencies = 2 * math.pi * scipy.fft.fftfreq(n, spacing)
    other = 1 - axis
    phase = np.exp(1j * _broadcast(frequencies, axis, 2) * _broadcast(np.asarray(shifts), other, 2))
    spectrum = scipy.fft.fft(values, axis=axis, workers=workers)
    return scipy.fft.ifft(spectrum * phase, axis=axis, workers=workers)


# Rotation by -45 degrees as three shears: R = Sx(a) Sy(b) Sx(a).
_SHEAR_X = math.sqrt(2) - 1
_SHEAR_Y = -1 / math.sqrt(2)


def rotate_eighth_turn(values: np.ndarray, spacing: float, inverse: bool = False,
                             workers: int | None = None) -> np.ndarray:
    """g(r) = f(R r) for the 45 degree rotation R taking (x, y) to ((x + y)/sqrt2, (y - x)/sqrt2).

    Coordinates are (index - n/2) * spacing on both axes of a square array. With
    ``inverse=True`` the negated shears are applied in reverse order, which undoes the
    forward map to round-off.
    """
    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        raise ValueError(f"Rotation needs a square 2D array, got shape {values.shape}")
    n = values.shape[0]
    coordinate = (np.arange(n) - n // 2) * spacing
    sign = -1.0 if inverse else 1.0
    result = spectral_shift(values, spacing, sign * _SHEAR_X * coordinate, axis=0, workers=workers)
    result = spectral_shift(result, spacing, sign * _SHEAR_Y * coordinate, axis=1, workers=workers)
    return spectral_shift(result, spacing, sign * _SHEAR_X * coordinate, axis=0, workers=workers)
