"""Sequential scenario pipeline: evolve, sample, checkpoint, diagnose, export."""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

import app
from model.embedding import (EnergyTrace, EntangledStateError, extract_q_factor, fidelity, quantum_expectation,
                             schmidt_spectrum, schrodinger_evolve)
from model.phase_space import Generator, KvnState, Representation, phase_scramble, to_representation
from model.phase_space.observables import expectation_classical
from model.phase_space.propagators import get_propagator
from model.reports import CheckLine, CheckReport, Expectation
from model.scenario.errors import CheckpointMismatchError
from model.scenario.report import RunReport
from model.scenario.scenario import (DiagnosticKind, DiagnosticSpec, Scenario, build_initial_state,
                                     initial_wavefunction)
from time_utils import Stopwatch, format_duration
from utils.checkpoint_utils import load_checkpoint, remove_checkpoint, save_checkpoint
from utils.export_utils import (write_energy_trace, write_marginals, write_schmidt_spectra, write_timings)
from utils.snapshot_utils import write_snapshot

CHECKPOINT_FILENAME = "checkpoint.pckl"
SCHMIDT_KEEP = 8
QUANTUM_CHANGE_THRESHOLD = 1e-6


@dataclass
class LegProgress:
    """Evolution under one generator; pickled into the checkpoint as is."""
    generator: Generator
    step: int
    state: KvnState
    energy_times: list[float] = field(default_factory=list)
    energy_values: list[float] = field(default_factory=list)
    schmidt: list[tuple[float, np.ndarray]] = field(default_factory=list)

    def energy_trace(self) -> EnergyTrace:
        return EnergyTrace(tuple(self.energy_times), tuple(self.energy_values), self.generator)


class ScenarioRunner:
    """Runs one scenario into its own output directory."""

    def __init__(self, scenario: Scenario, resume: bool = False, stopwatch: Stopwatch | None = None):
        self.scenario = scenario
        self.resume = resume
        self.stopwatch = stopwatch or Stopwatch()
        self._energy = scenario.hamiltonian.to_classical()
        self._legs: dict[str, LegProgress] = {}

    @property
    def output(self) -> Path:
        return self.scenario.output

    @property
    def checkpoint_path(self) -> Path:
        return self.output / CHECKPOINT_FILENAME

    # ==============================
    # Orchestration
    # ==============================
    def run(self) -> RunReport:
        """
        Raises:
            CheckpointMismatchError: If resuming from a checkpoint of another scenario.
            OSError: If the output directory cannot be written.
        """
        scenario = self.scenario
        self.output.mkdir(parents=True, exist_ok=True)
        app.logger.info(f"Running scenario {scenario.name}: {scenario.steps} steps of {scenario.dt:g} "
                        f"on {scenario.grid.describe()}, output {self.output}")

        with self.stopwatch.stage("initial state"):
            initial = build_initial_state(scenario)
            write_snapshot(initial, self.output / "initial.kvn")
        self._legs = self._restore()

        for generator in scenario.generators():
            leg = self._legs.get(generator.value)
            if leg is None:
                leg = LegProgress(generator, 0, initial)
                self._sample(leg)
                self._legs[generator.value] = leg
            with self.stopwatch.stage(f"evolve {generator.value}"):
                self._advance(leg)

        with self.stopwatch.stage("diagnostics"):
            sections = tuple(self._diagnose(diagnostic) for diagnostic in scenario.diagnostics)
        report = RunReport(f"scenario {scenario.name}", scenario.digest, sections, self.stopwatch.timings)

        with self.stopwatch.stage("write outputs"):
            self._write_outputs(report)
        write_timings(self.stopwatch.timings, self.output / "timings.csv")
        app.logger.info(f"Scenario {scenario.name} finished in {format_duration(self.stopwatch.total)}: "
                        f"{'PASS' if report.passed else 'FAIL'}")
        return report

    def _restore(self) -> dict[str, LegProgress]:
        if not self.resume:
            remove_checkpoint(self.checkpoint_path)
            return {}
        payload = load_checkpoint(self.checkpoint_path)
        if payload is None:
            app.logger.warning(f"No checkpoint at {self.checkpoint_path}; starting from the initial state")
            return {}
        if payload.get("digest") != self.scenario.digest:
            raise CheckpointMismatchError(
                f"{self.checkpoint_path} belongs to a different scenario (digest {str(payload.get('digest'))[:12]}, "
                f"expected {self.scenario.digest[:12]}); rerun without --resume")
        legs = payload["legs"]
        app.logger.info(f"Resuming {self.scenario.name}: " +
                        ", ".join(f"{name} at step {leg.step}" for name, leg in legs.items()))
        return legs

    def _save(self, leg: LegProgress) -> None:
        save_checkpoint({"digest": self.scenario.digest, "step": leg.step, "legs": self._legs},
                        self.checkpoint_path)

    def _advance(self, leg: LegProgress) -> None:
        scenario = self.scenario
        propagator = get_propagator(scenario.grid, scenario.hamiltonian, scenario.dt, leg.generator, scenario.hbar)
        every = scenario.sample_every
        last_checkpoint = leg.step
        while leg.step < scenario.steps:
            count = min(every - leg.step % every, scenario.steps - leg.step)
            leg.state = propagator.step(leg.state, count)
            leg.step += count
            if leg.step % every == 0 or leg.step == scenario.steps:
                self._sample(leg)
            if scenario.checkpoint_every and leg.step - last_checkpoint >= scenario.checkpoint_every:
                self._save(leg)
                last_checkpoint = leg.step
        self._save(leg)

    def _sample(self, leg: LegProgress) -> None:
        t = leg.step * self.scenario.dt
        if self.scenario.diagnostics_for(leg.generator, DiagnosticKind.ENERGY_TRACE):
            leg.energy_times.append(t)
            leg.energy_values.append(quantum_expectation(leg.state, self._energy))
        if self.scenario.diagnostics_for(leg.generator, DiagnosticKind.SCHMIDT):
            spectrum = schmidt_spectrum(to_representation(leg.state, Representation.Q_QBAR))
            leg.schmidt.append((t, spectrum[:SCHMIDT_KEEP]))

    # ==============================
    # Diagnostics
    # ==============================
    def _final(self, diagnostic: DiagnosticSpec) -> LegProgress:
        return self._legs[(diagnostic.generator or self.scenario.generator).value]

    def _diagnose(self, diagnostic: DiagnosticSpec) -> CheckReport:
        handlers = {
            DiagnosticKind.NORM: self._check_norm,
            DiagnosticKind.ENERGY_TRACE: self._check_energy,
            DiagnosticKind.SCHMIDT: self._check_schmidt,
            DiagnosticKind.CLASSICAL_EXPECTATIONS: self._check_classical,
            DiagnosticKind.FIDELITY_VS_ORACLE: self._check_fidelity,
            DiagnosticKind.GENERATOR_AGREEMENT: self._check_agreement,
        }
        lines = handlers[diagnostic.kind](diagnostic)
        return CheckReport(diagnostic.label, tuple(lines))

    def _check_norm(self, diagnostic: DiagnosticSpec) -> list[CheckLine]:
        leg = self._final(diagnostic)
        norm = leg.state.norm_squared()
        return [CheckLine.compare(f"|norm^2 - 1| of final {leg.generator.value} state", abs(norm - 1.0),
                                  diagnostic.tolerance, diagnostic.expectation)]

    def _check_energy(self, diagnostic: DiagnosticSpec) -> list[CheckLine]:
        leg = self._final(diagnostic)
        trace = leg.energy_trace()
        return [CheckLine.compare(f"relative drift of <H(Q,P)> under {leg.generator.value}", trace.relative_drift(),
                                  diagnostic.tolerance, diagnostic.expectation,
                                  detail=f"E(0)={trace.values[0]:.12g}, E(T)={trace.values[-1]:.12g}, "
                                         f"{len(trace.values)} samples")]

    def _check_schmidt(self, diagnostic: DiagnosticSpec) -> list[CheckLine]:
        leg = self._final(diagnostic)
        second = max((float(s[1]) if s.size > 1 else 0.0) for _, s in leg.schmidt)
        return [CheckLine.compare(f"largest second Schmidt value under {leg.generator.value}", second,
                                  diagnostic.tolerance, diagnostic.expectation,
                                  detail=f"{len(leg.schmidt)} samples")]

    def _check_classical(self, diagnostic: DiagnosticSpec) -> list[CheckLine]:
        state = self._final(diagnostic).state
        scrambled = phase_scramble(state, diagnostic.seed)
        lines = []
        for f in diagnostic.observables:
            value = expectation_classical(state, f)
            difference = abs(value - expectation_classical(scrambled, f))
            lines.append(CheckLine.compare(f"classical <{f.render()}> invariant under phase scramble", difference,
                                           diagnostic.tolerance, diagnostic.expectation, detail=f"value {value:.12g}"))
        for f in diagnostic.quantum_observables:
            difference = abs(quantum_expectation(state, f) - quantum_expectation(scrambled, f))
            lines.append(CheckLine.compare(f"quantum <{f.render()}> changed by phase scramble", difference,
                                           QUANTUM_CHANGE_THRESHOLD, Expectation.NONZERO))
        return lines

    def _check_fidelity(self, diagnostic: DiagnosticSpec) -> list[CheckLine]:
        scenario = self.scenario
        state = to_representation(self._final(diagnostic).state, Representation.Q_QBAR)
        oracle = schrodinger_evolve(initial_wavefunction(scenario), scenario.hamiltonian, scenario.dt,
                                    scenario.steps)
        name = f"1 - fidelity of extracted psi(Q) vs Schroedinger at t={scenario.total_time:g}"
        try:
            extracted = extract_q_factor(state)
        except EntangledStateError as e:
            return [CheckLine(name, False, "n/a", detail=str(e))]
        infidelity = max(0.0, 1.0 - fidelity(extracted, oracle))
        return [CheckLine.compare(name, infidelity, diagnostic.tolerance, diagnostic.expectation)]

    def _check_agreement(self, diagnostic: DiagnosticSpec) -> list[CheckLine]:
        liouville = self._legs[Generator.LIOUVILLE.value].state
        moyal = self._legs[Generator.MOYAL.value].state
        difference = np.asarray(liouville.amplitudes) - np.asarray(moyal.amplitudes)
        l2 = float(np.sqrt(np.sum(np.abs(difference) ** 2) * liouville.cell_area))
        return [CheckLine.compare("max |psi_liouville - psi_moyal| of final states", liouville.max_difference(moyal),
                                  diagnostic.tolerance, diagnostic.expectation, detail=f"L2 {l2:.6e}")]

    # ==============================
    # Export
    # ==============================
    def _write_outputs(self, report: RunReport) -> None:
        primary = self._legs[self.scenario.generator.value]
        write_snapshot(primary.state, self.output / "final.kvn")
        write_marginals(primary.state, self.output / "marginals.csv")
        for name, leg in self._legs.items():
            write_snapshot(leg.state, self.output / f"final_{name}.kvn")
            if leg.energy_times:
                write_energy_trace(leg.energy_trace(), self.output / f"energy_{name}.csv")
            if leg.schmidt:
                write_schmidt_spectra(leg.schmidt, self.output / f"schmidt_{name}.csv", SCHMIDT_KEEP)
        (self.output / "report.txt").write_text(report.render(), encoding="utf-8")
