"""Redundancy of the chi factor and agreement of the position and momentum routes."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from model.algebra import ClassicalPolynomial
from model.embedding.errors import EmbeddingError
from model.embedding.observables import quantum_expectation, weyl_apply
from model.embedding.states import QuantumState1D, build_product_state, check_compatible, fidelity
from model.phase_space import (Axis, KvnState, Representation, expectation_classical,
                               to_representation)
from model.phase_space.conventions import to_dual
from model.reports import CheckLine, CheckReport, Expectation

REDUNDANCY_TOLERANCE = 1e-10
MOMENTUM_TOLERANCE = 1e-8
PARSEVAL_TOLERANCE = 1e-12
DISTINCT_FIDELITY = 1 - 1e-12


def redundancy_check(psi: QuantumState1D, chi: QuantumState1D, sigma: QuantumState1D,
                     observables: Sequence[ClassicalPolynomial],
                     classical_observables: Sequence[ClassicalPolynomial] = ()) -> CheckReport:
    """Quantum expectations on psi*chi and psi*sigma agree although the KvN vectors differ.

    ``classical_observables`` are evaluated as multiplicative operators in (q, p) on both
    states; their differences are reported, not asserted.
    """
    check_compatible(psi, chi)
    check_compatible(psi, sigma)
    if fidelity(chi, sigma) > DISTINCT_FIDELITY:
        raise EmbeddingError("redundancy_check needs two different Qbar factors")

    with_chi = build_product_state(psi, chi)
    with_sigma = build_product_state(psi, sigma)
    lines = []
    for f in observables:
        difference = abs(quantum_expectation(with_chi, f) - quantum_expectation(with_sigma, f))
        lines.append(CheckLine.compare(f"<{f.render()}> independent of Qbar factor", difference,
                                       REDUNDANCY_TOLERANCE))

    overlap = abs(with_chi.inner(with_sigma))
    distance_squared = with_chi.norm_squared() + with_sigma.norm_squared() - 2 * with_chi.inner(with_sigma).real
    distance = float(np.sqrt(max(distance_squared, 0.0)))
    lines.append(CheckLine(name="KvN vectors differ", passed=overlap < 1.0 - 1e-12,
                           measured=f"|<psi chi|psi sigma>|={overlap:.6e}", detail=f"distance {distance:.6e}"))

    if classical_observables:
        chi_qp = to_representation(with_chi, Representation.Q_P)
        sigma_qp = to_representation(with_sigma, Representation.Q_P)
        for f in classical_observables:
            difference = abs(expectation_classical(chi_qp, f) - expectation_classical(sigma_qp, f))
            lines.append(CheckLine(f"classical <{f.render()}> on both states", True, f"{difference:.6e}",
                                   detail="informational"))
    return CheckReport("redundancy", tuple(lines))


def _momentum_route(state: KvnState) -> tuple[np.ndarray, Axis, float]:
    """phi(P, Qbar) = (2 pi hbar)^-1/2 integral dQ exp(-i P (Q - Q_c) / hbar) psi(Q, Qbar).

    Returns the P-space amplitudes, the P axis and Q_c. With this centering Q = Q_c + i hbar d/dP.
    """
    q_axis = state.grid.bopp_axis
    center = state.grid.q_center
    relative = Axis(q_axis.start - center, q_axis.spacing, q_axis.n)
    phi = to_dual(np.asarray(state.amplitudes), relative, axis=0) / np.sqrt(state.hbar)
    p_axis = Axis(state.hbar * relative.dual_values[0], state.hbar * relative.dual_spacing, q_axis.n)
    return phi, p_axis, center


def _momentum_symbol(f: ClassicalPolynomial, center: float) -> ClassicalPolynomial:
    """f(q, p) rewritten as g(x, d) with x = P and d = Q - Q_c, so that weyl_apply can act in P space.

    Weyl ordering is preserved by the swap and by the constant shift.
    """
    x = ClassicalPolynomial.q()
    q = ClassicalPolynomial.p() + Fraction(repr(center))
    result = ClassicalPolynomial.zero()
    for (a, b), coefficient in f.terms.items():
        result = result + q ** a * x ** b * coefficient
    return result


def _momentum_expectation(state: KvnState, f: ClassicalPolynomial) -> tuple[float, float]:
    """<F> and the norm, both computed from the P-space amplitudes of a (Q, Qbar) state."""
    phi, p_axis, center = _momentum_route(state)
    cell = p_axis.spacing * state.grid.bopp_spacing
    norm_p = float(np.sum(np.abs(phi) ** 2) * cell)
    # i hbar d/dP is weyl_apply's -i hbar' d/dx with hbar' = -hbar
    applied = weyl_apply(phi, _momentum_symbol(f, center), p_axis.values, p_axis, -state.hbar, along=0)
    return float((np.vdot(phi, applied) * cell / norm_p).real), norm_p


def momentum_route_expectation(state: KvnState, f: ClassicalPolynomial) -> float:
    """<F(Q, P)> evaluated in the (P, Pbar) representation; any input representation is accepted."""
    return _momentum_expectation(to_representation(state, Representation.Q_QBAR), f)[0]


def momentum_representation_check(state: KvnState, f: ClassicalPolynomial) -> CheckReport:
    """<F> from the (Q, Qbar) route equals <F> from the (P, Pbar) route, where Q = i hbar d/dP."""
    state = to_representation(state, Representation.Q_QBAR)
    position_value = quantum_expectation(state, f)
    momentum_value, norm_p = _momentum_expectation(state, f)

    return CheckReport("momentum representation", (
        CheckLine.compare("Parseval norm across routes", abs(norm_p - state.norm_squared()), PARSEVAL_TOLERANCE),
        CheckLine.compare(f"<{f.render()}> position vs momentum route", abs(position_value - momentum_value),
                          MOMENTUM_TOLERANCE, detail=f"position {position_value:.12g}, momentum {momentum_value:.12g}"),
    ))
