"""Periodic phase-space grids and the (Q, Qbar) alignment rule."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from model.phase_space.errors import GridConfigurationError

MIN_POINTS = 8
ALIGNMENT_RTOL = 1e-9


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


@dataclass(frozen=True)
class Axis:
    """n uniformly spaced samples start, start + spacing, ... with periodic identification."""
    start: float
    spacing: float
    n: int

    @property
    def values(self) -> np.ndarray:
        return self.start + self.spacing * np.arange(self.n)

    @property
    def length(self) -> float:
        return self.spacing * self.n

    @property
    def dual_spacing(self) -> float:
        return 2 * math.pi / self.length

    @property
    def dual_values(self) -> np.ndarray:
        """Centered conjugate grid (k - n/2) * 2 pi / length."""
        return (np.arange(self.n) - self.n // 2) * self.dual_spacing

    def fft_frequencies(self) -> np.ndarray:
        """Conjugate variable in numpy FFT order."""
        return 2 * math.pi * np.fft.fftfreq(self.n, self.spacing)


@dataclass(frozen=True)
class PhaseSpaceGrid:
    """An n_q x n_p periodic grid on [q_min, q_max) x [p_min, p_max).

    Dual spacings are d_lambda_q = 2 pi / (n_q dq) and d_lambda_p = 2 pi / (n_p dp); the
    lambda grids are centered, lambda_k = (k - n/2) d_lambda.
    """
    n_q: int
    n_p: int
    q_min: float
    q_max: float
    p_min: float
    p_max: float

    def __post_init__(self):
        for name, n in (("n_q", self.n_q), ("n_p", self.n_p)):
            if not isinstance(n, (int, np.integer)) or not _is_power_of_two(int(n)) or n < MIN_POINTS:
                raise GridConfigurationError(f"{name} must be a power of two >= {MIN_POINTS}, got {n}")
        for low, high, axis in ((self.q_min, self.q_max, "q"), (self.p_min, self.p_max, "p")):
            if not (math.isfinite(low) and math.isfinite(high)):
                raise GridConfigurationError(f"{axis} extent must be finite, got [{low}, {high}]")
            if not low < high:
                raise GridConfigurationError(f"{axis}_min must be below {axis}_max, got [{low}, {high}]")

    @classmethod
    def square(cls, n: int, extent: float) -> PhaseSpaceGrid:
        """n x n grid on [-extent, extent)^2."""
        return cls(n, n, -extent, extent, -extent, extent)

    @classmethod
    def aligned(cls, n: int, q_min: float, q_max: float, hbar: float, p_center: float = 0.0) -> PhaseSpaceGrid:
        """n x n grid whose p extent satisfies hbar * d_lambda_p / 2 = dq."""
        half = math.pi * hbar * n / (q_max - q_min) / 2
        return cls(n, n, q_min, q_max, p_center - half, p_center + half)

    # ==============================
    # Axes
    # ==============================
    @cached_property
    def q_axis(self) -> Axis:
        return Axis(self.q_min, (self.q_max - self.q_min) / self.n_q, self.n_q)

    @cached_property
    def p_axis(self) -> Axis:
        return Axis(self.p_min, (self.p_max - self.p_min) / self.n_p, self.n_p)

    @property
    def dq(self) -> float:
        return self.q_axis.spacing

    @property
    def dp(self) -> float:
        return self.p_axis.spacing

    @property
    def dlambda_q(self) -> float:
        return self.q_axis.dual_spacing

    @property
    def dlambda_p(self) -> float:
        return self.p_axis.dual_spacing

    @property
    def q(self) -> np.ndarray:
        return self.q_axis.values

    @property
    def p(self) -> np.ndarray:
        return self.p_axis.values

    @property
    def lambda_q(self) -> np.ndarray:
        return self.q_axis.dual_values

    @property
    def lambda_p(self) -> np.ndarray:
        return self.p_axis.dual_values

    @property
    def q_center(self) -> float:
        """Sample q_{n/2}; rotation center of the (Q, Qbar) map."""
        return self.q_min + (self.n_q // 2) * self.dq

    # ==============================
    # (Q, Qbar) alignment
    # ==============================
    def shear_ratio(self, hbar: float) -> float:
        """k = hbar * d_lambda_p / (2 dq); the (Q, Qbar) map needs k = 1 and n_q = n_p."""
        return hbar * self.dlambda_p / (2 * self.dq)

    def is_aligned(self, hbar: float) -> bool:
        return self.n_q == self.n_p and math.isclose(self.shear_ratio(hbar), 1.0, rel_tol=ALIGNMENT_RTOL)

    def nearest_aligned(self, hbar: float) -> PhaseSpaceGrid:
        """Keep n_q and the q extent; resize the p extent around its center."""
        p_center = (self.p_min + self.p_max) / 2
        return PhaseSpaceGrid.aligned(self.n_q, self.q_min, self.q_max, hbar, p_center)

    def check_shear_alignment(self, hbar: float) -> None:
        """
        Raises:
            GridConfigurationError: With the required relation and the nearest valid grid.
        """
        if self.is_aligned(hbar):
            return
        suggestion = self.nearest_aligned(hbar)
        problems = []
        if self.n_q != self.n_p:
            problems.append(f"n_q = n_p is required (got n_q={self.n_q}, n_p={self.n_p})")
        problems.append(f"hbar * d_lambda_p / 2 = k * dq with k = 1 is required "
                        f"(got k = {self.shear_ratio(hbar):.6g}; equivalently (q_max - q_min)(p_max - p_min) "
                        f"= pi * hbar * n_q = {math.pi * hbar * self.n_q:.6g})")
        raise GridConfigurationError(
            "Grid is not aligned for the (Q, Qbar) representation: " + "; ".join(problems)
            + f". Nearest valid grid: n_q = n_p = {suggestion.n_q}, q in [{suggestion.q_min:.6g}, "
              f"{suggestion.q_max:.6g}], p in [{suggestion.p_min:.6g}, {suggestion.p_max:.6g}]")

    @property
    def bopp_spacing(self) -> float:
        """dQ = sqrt(2) dq on an aligned grid."""
        return math.sqrt(2) * self.dq

    @cached_property
    def bopp_axis(self) -> Axis:
        """Q_a = q_center + (a - n/2) dQ; shared by Q and Qbar."""
        n = self.n_q
        return Axis(self.q_center - (n // 2) * self.bopp_spacing, self.bopp_spacing, n)

    def describe(self) -> str:
        return (f"{self.n_q}x{self.n_p} grid, q in [{self.q_min:g}, {self.q_max:g}), "
                f"p in [{self.p_min:g}, {self.p_max:g})")
