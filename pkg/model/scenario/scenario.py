"""Scenario files: YAML in, validated Scenario out.

See README.md for the schema; every bundled experiment under scenarios/ is a commented example.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Mapping

import yaml

import app
from model.algebra import ClassicalPolynomial, UnsupportedInputError, parse_classical
from model.embedding import QuantumState1D, build_product_state, gaussian_wavepacket
from model.phase_space import (GaussianParams, Generator, GridConfigurationError, HamiltonianSpec, KvnState,
                               PhaseSpaceError, PhaseSpaceGrid, Representation, init_gaussian,
                               to_representation)
from model.phase_space.propagators import DEFAULT_DT
from model.reports import Expectation
from model.scenario.errors import ScenarioParseError, ScenarioValidationError
from model.scenario.report import digest_of

DEFAULT_SAMPLE_EVERY = 10


class DiagnosticKind(Enum):
    NORM = "norm"
    ENERGY_TRACE = "energy_trace"
    SCHMIDT = "schmidt"
    CLASSICAL_EXPECTATIONS = "classical_expectations"
    FIDELITY_VS_ORACLE = "fidelity_vs_oracle"
    GENERATOR_AGREEMENT = "generator_agreement"

    @property
    def default_tolerance(self) -> float:
        return _DEFAULT_TOLERANCES[self]

    @property
    def needs_bopp_grid(self) -> bool:
        """Whether the diagnostic evaluates states in the (Q, Qbar) representation."""
        return self in (DiagnosticKind.ENERGY_TRACE, DiagnosticKind.SCHMIDT, DiagnosticKind.FIDELITY_VS_ORACLE)


_DEFAULT_TOLERANCES = {
    DiagnosticKind.NORM: 1e-10,
    DiagnosticKind.ENERGY_TRACE: 1e-6,
    DiagnosticKind.SCHMIDT: 1e-8,
    DiagnosticKind.CLASSICAL_EXPECTATIONS: 1e-12,
    DiagnosticKind.FIDELITY_VS_ORACLE: 1e-6,
    DiagnosticKind.GENERATOR_AGREEMENT: 1e-10,
}


@dataclass(frozen=True)
class DiagnosticSpec:
    kind: DiagnosticKind
    tolerance: float
    expectation: Expectation = Expectation.PASS
    generator: Generator | None = None
    observables: tuple[ClassicalPolynomial, ...] = ()
    quantum_observables: tuple[ClassicalPolynomial, ...] = ()
    seed: int = 0

    @property
    def label(self) -> str:
        return f"{self.kind.value} ({self.generator.value})" if self.generator else self.kind.value


@dataclass(frozen=True)
class WavepacketSpec:
    center: float = 0.0
    width: float = 1.0
    momentum: float = 0.0

    def build(self, grid: PhaseSpaceGrid, hbar: float) -> QuantumState1D:
        return gaussian_wavepacket(grid, hbar, self.center, self.width, self.momentum)


@dataclass(frozen=True)
class ProductSpec:
    """psi(Q) chi(Qbar) built from two Gaussian wavepackets."""
    psi: WavepacketSpec
    chi: WavepacketSpec


@dataclass(frozen=True)
class Scenario:
    name: str
    hamiltonian: HamiltonianSpec
    grid: PhaseSpaceGrid
    hbar: float
    generator: Generator
    initial: GaussianParams | ProductSpec
    dt: float
    steps: int
    diagnostics: tuple[DiagnosticSpec, ...]
    output: Path
    sample_every: int = DEFAULT_SAMPLE_EVERY
    checkpoint_every: int = 0
    source: Mapping[str, Any] = field(default_factory=dict, compare=False, repr=False)

    @property
    def digest(self) -> str:
        """sha256 of the canonical JSON of the scenario mapping, without its output path."""
        return digest_of({k: v for k, v in self.source.items() if k != "output"})

    @property
    def total_time(self) -> float:
        return self.dt * self.steps

    def generators(self) -> tuple[Generator, ...]:
        """The scenario generator first, then any other generator a diagnostic needs."""
        needed = [self.generator]
        for diagnostic in self.diagnostics:
            wanted = (tuple(Generator) if diagnostic.kind is DiagnosticKind.GENERATOR_AGREEMENT
                      else (diagnostic.generator or self.generator,))
            needed += [g for g in wanted if g not in needed]
        return tuple(needed)

    def diagnostics_for(self, generator: Generator, kind: DiagnosticKind) -> tuple[DiagnosticSpec, ...]:
        return tuple(d for d in self.diagnostics
                     if d.kind is kind and (d.generator or self.generator) is generator)


# ==============================
# Initial state
# ==============================
def build_initial_state(scenario: Scenario) -> KvnState:
    """The initial KvN state in (q, p)."""
    if isinstance(scenario.initial, ProductSpec):
        psi = scenario.initial.psi.build(scenario.grid, scenario.hbar)
        chi = scenario.initial.chi.build(scenario.grid, scenario.hbar)
        return to_representation(build_product_state(psi, chi), Representation.Q_P)
    return init_gaussian(scenario.grid, scenario.initial, Representation.Q_P, scenario.hbar)


def initial_wavefunction(scenario: Scenario) -> QuantumState1D:
    """psi_0(Q) of a product-state scenario."""
    if not isinstance(scenario.initial, ProductSpec):
        raise ScenarioValidationError("initial", "a Q factor exists only for product initial states",
                                      "use initial.product")
    return scenario.initial.psi.build(scenario.grid, scenario.hbar)


# ==============================
# Loading
# ==============================
def load_scenario(path: str | Path, output: str | Path | None = None) -> Scenario:
    """Parse and validate a scenario file.

    Args:
        path: The YAML file
        output: Overrides the file's output directory

    Raises:
        ScenarioParseError: If the file is not valid YAML (with line and column).
        ScenarioValidationError: If any field violates its constraint.
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = yaml.safe_load(f)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        line = mark.line + 1 if mark is not None else None
        column = mark.column + 1 if mark is not None else None
        raise ScenarioParseError(str(path), line, column, e.problem or str(e)) from e
    except yaml.YAMLError as e:
        raise ScenarioParseError(str(path), None, None, str(e)) from e
    if not isinstance(raw, dict):
        raise ScenarioValidationError("<root>", "the scenario file must contain a mapping",
                                      "start from one of the files in scenarios/")
    scenario = parse_scenario(raw, default_name=path.stem, output=output)
    app.logger.info(f"Loaded scenario {scenario.name} from {path} (digest {scenario.digest[:12]})")
    return scenario


def parse_scenario(raw: Mapping[str, Any], default_name: str = "scenario",
                   output: str | Path | None = None) -> Scenario:
    """Validate an already-parsed scenario mapping."""
    known = {"name", "hamiltonian", "grid", "hbar", "generator", "initial", "dt", "steps", "sample_every",
             "checkpoint_every", "diagnostics", "output"}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ScenarioValidationError(unknown[0], "unknown field", f"known fields are {', '.join(sorted(known))}")

    name = str(raw.get("name", default_name))
    hbar = _positive_float(raw, "hbar", 1.0)
    generator = _generator(raw.get("generator", Generator.MOYAL.value), "generator")
    dt = _positive_float(raw, "dt", DEFAULT_DT)
    steps = _int(raw, "steps", None, minimum=1)
    sample_every = _int(raw, "sample_every", DEFAULT_SAMPLE_EVERY, minimum=1)
    checkpoint_every = _int(raw, "checkpoint_every", 0, minimum=0)
    hamiltonian = _hamiltonian(raw.get("hamiltonian"))
    grid = _grid(raw.get("grid"), hbar)
    initial = _initial(raw.get("initial"))
    diagnostics = tuple(_diagnostic(entry, f"diagnostics[{i}]")
                        for i, entry in enumerate(_list(raw.get("diagnostics", []), "diagnostics")))

    if output is None:
        output = raw.get("output") or _default_output(name)

    scenario = Scenario(name=name, hamiltonian=hamiltonian, grid=grid, hbar=hbar, generator=generator,
                        initial=initial, dt=dt, steps=steps, diagnostics=diagnostics, output=Path(output),
                        sample_every=sample_every, checkpoint_every=checkpoint_every, source=dict(raw))
    _check_consistency(scenario)
    return scenario


def _default_output(name: str) -> Path:
    from model.settings import RunSettings
    root = RunSettings.load().get_output_root() or Path("runs")
    return root / name


# ==============================
# Field parsers
# ==============================
def _number(value: Any, field_name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioValidationError(field_name, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ScenarioValidationError(field_name, f"must be finite, got {value}")
    return value


def _positive_float(raw: Mapping[str, Any], key: str, default: float | None, prefix: str = "") -> float:
    field_name = prefix + key
    if key not in raw:
        if default is None:
            raise ScenarioValidationError(field_name, "is required")
        return default
    value = _number(raw[key], field_name)
    if not value > 0:
        raise ScenarioValidationError(field_name, f"must be > 0, got {value:g}", f"use a positive {key}")
    return value


def _int(raw: Mapping[str, Any], key: str, default: int | None, minimum: int) -> int:
    if key not in raw:
        if default is None:
            raise ScenarioValidationError(key, "is required", f"add '{key}: <integer >= {minimum}>'")
        return default
    value = raw[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ScenarioValidationError(key, f"expected an integer, got {value!r}")
    if value < minimum:
        raise ScenarioValidationError(key, f"must be >= {minimum}, got {value}")
    return value


def _mapping(value: Any, field_name: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise ScenarioValidationError(field_name, f"expected a mapping, got {value!r}")
    return value


def _list(value: Any, field_name: str) -> list:
    if not isinstance(value, list):
        raise ScenarioValidationError(field_name, f"expected a list, got {value!r}")
    return value


def _pair(value: Any, field_name: str) -> tuple[float, float]:
    items = _list(value, field_name)
    if len(items) != 2:
        raise ScenarioValidationError(field_name, f"expected [min, max], got {value!r}")
    low, high = (_number(v, field_name) for v in items)
    if not low < high:
        raise ScenarioValidationError(field_name, f"min must be below max, got [{low:g}, {high:g}]")
    return low, high


def _generator(value: Any, field_name: str) -> Generator:
    try:
        return Generator(value)
    except ValueError:
        choices = ", ".join(g.value for g in Generator)
        raise ScenarioValidationError(field_name, f"unknown generator {value!r}", f"use one of {choices}") from None


def _hamiltonian(value: Any) -> HamiltonianSpec:
    """Either a preset (free, harmonic, quartic) or an explicit potential coefficient list."""
    if value is None:
        raise ScenarioValidationError("hamiltonian", "is required", "e.g. 'hamiltonian: {preset: harmonic}'")
    raw = _mapping(value, "hamiltonian")
    mass = _positive_float(raw, "mass", 1.0, "hamiltonian.")
    try:
        if "potential" in raw:
            coefficients = tuple(_number(c, "hamiltonian.potential") for c in _list(raw["potential"],
                                                                                 "hamiltonian.potential"))
            return HamiltonianSpec(mass, coefficients)
        preset = raw.get("preset")
        if preset == "free":
            return HamiltonianSpec.free(mass)
        if preset == "harmonic":
            return HamiltonianSpec.harmonic(_positive_float(raw, "omega", 1.0, "hamiltonian."), mass)
        if preset == "quartic":
            coupling = _number(raw.get("coupling", 0.25), "hamiltonian.coupling")
            omega = _number(raw.get("omega", 0.0), "hamiltonian.omega")
            return HamiltonianSpec.quartic(coupling, omega, mass)
    except PhaseSpaceError as e:
        raise ScenarioValidationError("hamiltonian", str(e)) from e
    raise ScenarioValidationError("hamiltonian", "needs 'potential: [c0, c1, ...]' or a preset",
                                  "use preset free, harmonic or quartic")


def _grid(value: Any, hbar: float) -> PhaseSpaceGrid:
    if value is None:
        raise ScenarioValidationError("grid", "is required", "e.g. 'grid: {n: 512, q: [-20, 20], aligned: true}'")
    raw = _mapping(value, "grid")
    n = raw.get("n")
    if isinstance(n, bool) or not isinstance(n, int):
        raise ScenarioValidationError("grid.n", f"expected an integer, got {n!r}")
    q_min, q_max = _pair(raw.get("q"), "grid.q")
    aligned = raw.get("aligned", "p" not in raw)
    try:
        if aligned:
            if "p" in raw:
                raise ScenarioValidationError("grid.p", "cannot be combined with aligned: true",
                                              "drop grid.p; the aligned p extent follows from n, q and hbar")
            return PhaseSpaceGrid.aligned(n, q_min, q_max, hbar)
        p_min, p_max = _pair(raw.get("p"), "grid.p")
        return PhaseSpaceGrid(n, n, q_min, q_max, p_min, p_max)
    except GridConfigurationError as e:
        raise ScenarioValidationError("grid", str(e), "use n = 2^k >= 8 and ordered extents") from e


def _wavepacket(value: Any, field_name: str) -> WavepacketSpec:
    raw = _mapping(value, field_name)
    return WavepacketSpec(center=_number(raw.get("center", 0.0), f"{field_name}.center"),
                          width=_positive_float(raw, "width", 1.0, f"{field_name}."),
                          momentum=_number(raw.get("momentum", 0.0), f"{field_name}.momentum"))


def _initial(value: Any) -> GaussianParams | ProductSpec:
    if value is None:
        raise ScenarioValidationError("initial", "is required", "use initial.gaussian or initial.product")
    raw = _mapping(value, "initial")
    if set(raw) == {"gaussian"}:
        gaussian = _mapping(raw["gaussian"], "initial.gaussian")
        q0, p0 = (_number(v, "initial.gaussian.center") for v in _list(gaussian.get("center", [0, 0]),
                                                                         "initial.gaussian.center"))
        widths = [_number(v, "initial.gaussian.widths") for v in _list(gaussian.get("widths", [1, 1]),
                                                                         "initial.gaussian.widths")]
        if len(widths) != 2 or min(widths) <= 0:
            raise ScenarioValidationError("initial.gaussian.widths", f"expected two positive widths, got {widths}")
        angle = _number(gaussian.get("angle", 0.0), "initial.gaussian.angle")
        return GaussianParams(q0, p0, widths[0], widths[1], angle)
    if set(raw) == {"product"}:
        product = _mapping(raw["product"], "initial.product")
        if "psi" not in product:
            raise ScenarioValidationError("initial.product.psi", "is required")
        chi = product.get("chi", {})
        return ProductSpec(_wavepacket(product["psi"], "initial.product.psi"),
                           _wavepacket(chi, "initial.product.chi"))
    raise ScenarioValidationError("initial", f"expected exactly one of gaussian, product; got {sorted(raw)}")


def _polynomials(value: Any, field_name: str) -> tuple[ClassicalPolynomial, ...]:
    result = []
    for i, text in enumerate(_list(value, field_name)):
        try:
            result.append(parse_classical(str(text)))
        except UnsupportedInputError as e:
            raise ScenarioValidationError(f"{field_name}[{i}]", str(e), "write e.g. 'p^2/2 + q^4/4'") from e
    return tuple(result)


def _diagnostic(value: Any, field_name: str) -> DiagnosticSpec:
    raw = _mapping(value, field_name)
    try:
        kind = DiagnosticKind(raw.get("kind"))
    except ValueError:
        choices = ", ".join(k.value for k in DiagnosticKind)
        raise ScenarioValidationError(f"{field_name}.kind", f"unknown diagnostic {raw.get('kind')!r}",
                                      f"use one of {choices}") from None
    tolerance = _positive_float(raw, "tolerance", kind.default_tolerance, f"{field_name}.")
    try:
        expectation = Expectation(raw.get("expect", Expectation.PASS.value))
    except ValueError:
        raise ScenarioValidationError(f"{field_name}.expect", f"unknown expectation {raw.get('expect')!r}",
                                      "use pass or nonzero") from None
    generator = _generator(raw["generator"], f"{field_name}.generator") if "generator" in raw else None
    observables = _polynomials(raw.get("observables", []), f"{field_name}.observables")
    quantum_observables = _polynomials(raw.get("quantum_observables", []), f"{field_name}.quantum_observables")
    if kind is DiagnosticKind.CLASSICAL_EXPECTATIONS and not observables:
        raise ScenarioValidationError(f"{field_name}.observables", "needs at least one observable",
                                      "e.g. observables: [q, p, q^2 + p^2]")
    seed = raw.get("seed", 0)
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ScenarioValidationError(f"{field_name}.seed", f"expected an integer, got {seed!r}")
    return DiagnosticSpec(kind, tolerance, expectation, generator, observables, quantum_observables, seed)


# ==============================
# Cross-field invariants
# ==============================
def _check_consistency(scenario: Scenario) -> None:
    product = isinstance(scenario.initial, ProductSpec)
    for i, diagnostic in enumerate(scenario.diagnostics):
        if diagnostic.kind is DiagnosticKind.FIDELITY_VS_ORACLE:
            if not product:
                raise ScenarioValidationError(f"diagnostics[{i}]", "fidelity_vs_oracle needs a product initial state",
                                              "use initial.product")
            if (diagnostic.generator or scenario.generator) is not Generator.MOYAL:
                raise ScenarioValidationError(f"diagnostics[{i}].generator",
                                              "fidelity_vs_oracle compares Moyal evolution with Schroedinger",
                                              "set generator: moyal")

    needs_alignment = (scenario.generator is Generator.MOYAL or product
                       or any(d.kind.needs_bopp_grid or d.quantum_observables for d in scenario.diagnostics))
    if needs_alignment:
        try:
            scenario.grid.check_shear_alignment(scenario.hbar)
        except GridConfigurationError as e:
            nearest = scenario.grid.nearest_aligned(scenario.hbar)
            raise ScenarioValidationError(
                "grid", str(e),
                f"set 'aligned: true' or use p: [{nearest.p_min:.6g}, {nearest.p_max:.6g}]") from e
