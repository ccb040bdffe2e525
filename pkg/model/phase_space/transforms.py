"""Representation changes (q, p) <-> (q, lambda_p) <-> (Q, Qbar).

(q, p) <-> (q, lambda_p) is the unitary Fourier pair along the p axis with kernel
exp(-i lambda_p p). (q, lambda_p) <-> (Q, Qbar) is the linear change
Q = q - hbar lambda_p / 2, Qbar = q + hbar lambda_p / 2. On an aligned grid
(n_q = n_p, hbar d_lambda_p / 2 = dq) the scaled coordinates u = sqrt2 (q - q_c) and
v = hbar lambda_p / sqrt2 sit on the same square lattice as Q - q_c and Qbar - q_c, rotated by
45 degrees, so the change is applied as an exactly unitary three-shear rotation. The Jacobian
|d(q, lambda_p) / d(Q, Qbar)| = 1/hbar contributes the amplitude factor hbar^(-1/2).
"""
from __future__ import annotations

import numpy as np

from model.phase_space.conventions import from_dual, rotate_eighth_turn, to_dual
from model.phase_space.state import KvnState, Representation

_ORDER = (Representation.Q_P, Representation.Q_LAMBDA_P, Representation.Q_QBAR)


def _step_up(state: KvnState) -> KvnState:
    grid = state.grid
    if state.representation is Representation.Q_P:
        return state.with_amplitudes(to_dual(state.amplitudes, grid.p_axis, axis=1), Representation.Q_LAMBDA_P)
    grid.check_shear_alignment(state.hbar)
    rotated = rotate_eighth_turn(state.amplitudes, grid.bopp_spacing) / np.sqrt(state.hbar)
    return state.with_amplitudes(rotated, Representation.Q_QBAR)


def _step_down(state: KvnState) -> KvnState:
    grid = state.grid
    if state.representation is Representation.Q_QBAR:
        grid.check_shear_alignment(state.hbar)
        rotated = rotate_eighth_turn(state.amplitudes, grid.bopp_spacing, inverse=True) * np.sqrt(state.hbar)
        return state.with_amplitudes(rotated, Representation.Q_LAMBDA_P)
    return state.with_amplitudes(from_dual(state.amplitudes, grid.p_axis, axis=1), Representation.Q_P)


def to_representation(state: KvnState, target: Representation) -> KvnState:
    """Move a state to ``target`` through the chain (q,p) - (q,lambda_p) - (Q,Qbar).

    Raises:
        GridConfigurationError: If (Q, Qbar) is involved and the grid is not aligned for hbar.
    """
    current = _ORDER.index(state.representation)
    goal = _ORDER.index(target)
    while current < goal:
        state = _step_up(state)
        current += 1
    while current > goal:
        state = _step_down(state)
        current -= 1
    return state
