"""Scenario mappings and files for loader and pipeline tests."""
from pathlib import Path
from typing import Any

import yaml

# Small enough for the default test run: 64 x 64 grid, a few dozen steps.
SMALL_GRID = {"n": 64, "q": [-6, 6], "aligned": True}


def harmonic_scenario(**overrides: Any) -> dict[str, Any]:
    raw = {
        "name": "small_harmonic",
        "hamiltonian": {"preset": "harmonic", "omega": 1.0},
        "grid": dict(SMALL_GRID),
        "generator": "moyal",
        "initial": {"gaussian": {"center": [0.5, 0.0], "widths": [0.5, 0.5]}},
        "dt": 0.01,
        "steps": 40,
        "sample_every": 10,
        "diagnostics": [
            {"kind": "norm"},
            {"kind": "generator_agreement", "tolerance": 1.0e-10},
        ],
    }
    raw.update(overrides)
    return raw


def quartic_product_scenario(**overrides: Any) -> dict[str, Any]:
    raw = {
        "name": "small_quartic",
        "hamiltonian": {"preset": "quartic", "coupling": 0.25},
        "grid": dict(SMALL_GRID),
        "generator": "moyal",
        "initial": {"product": {"psi": {"center": 0.5, "width": 0.7, "momentum": 0.4},
                                "chi": {"center": -0.3, "width": 1.0}}},
        "dt": 0.005,
        "steps": 40,
        "sample_every": 10,
        "diagnostics": [
            {"kind": "norm"},
            {"kind": "schmidt", "tolerance": 1.0e-6},
            {"kind": "fidelity_vs_oracle"},
            {"kind": "classical_expectations", "observables": ["q", "p", "q^2 + p^2"],
             "quantum_observables": ["p"], "seed": 3},
        ],
    }
    raw.update(overrides)
    return raw


def write_scenario(directory: Path, raw: dict[str, Any], filename: str = "scenario.yaml") -> Path:
    path = Path(directory) / filename
    path.write_text(yaml.safe_dump(raw, sort_keys=False), encoding="utf-8")
    return path
