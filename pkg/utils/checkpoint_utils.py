"""dill checkpoints for resumable scenario runs."""
from __future__ import annotations

import os
from pathlib import Path
from typing import Any

import dill

import app


def save_checkpoint(payload: dict[str, Any], fileName: str | Path) -> None:
    """
    Writes the checkpoint atomically: a partial file never replaces a good one.

    Args:
        payload: Picklable run state (scenario digest, step, state, traces)
        fileName: The checkpoint file
    """
    fileName = Path(fileName)
    temporary = fileName.with_suffix(fileName.suffix + ".tmp")
    with open(temporary, "wb") as file:
        dill.dump(payload, file)
    os.replace(temporary, fileName)
    app.logger.info(f"Checkpoint written to {fileName} at step {payload.get('step')}")


def load_checkpoint(fileName: str | Path) -> dict[str, Any] | None:
    """
    Loads a checkpoint.

    Args:
        fileName: The checkpoint file

    Returns:
        The stored payload, or None if there is no checkpoint
    """
    if not os.path.isfile(fileName):
        return None
    with open(fileName, "rb") as file:
        return dill.load(file)


def remove_checkpoint(fileName: str | Path) -> None:
    if os.path.exists(fileName):
        os.remove(fileName)
