from __future__ import annotations

import functools
import logging
import os

logger: logging.Logger

_LOG_FILENAME = "kvnlab.log"
_LOG_LEVEL_ENV = "KVNLAB_LOG_LEVEL"
_MAX_THREADS_ENV = "KVNLAB_MAX_THREADS"

logger = logging.getLogger("kvnlab")
logger.setLevel(os.environ.get(_LOG_LEVEL_ENV, "WARNING").upper())
handler = logging.FileHandler(filename=_LOG_FILENAME, encoding="utf-8", mode="w", delay=True)
handler.setFormatter(
    logging.Formatter("%(asctime)s:%(levelname)s:%(name)s: %(message)s")
)
logger.addHandler(handler)


def get_max_threads() -> int | None:
    """
    Thread cap for the FFT workers: KVNLAB_MAX_THREADS, else the saved run settings, else None (all cores).
    """
    raw = os.environ.get(_MAX_THREADS_ENV)
    if raw:
        try:
            value = int(raw)
            if value >= 1:
                return value
        except ValueError:
            pass
        logger.warning(f"Ignoring {_MAX_THREADS_ENV}={raw!r}: expected a positive integer")
    return _saved_max_threads()


@functools.cache
def _saved_max_threads() -> int | None:
    from model.settings import RunSettings
    return RunSettings.load().get_max_threads()


def forget_saved_settings() -> None:
    """Drop the cached settings so the next lookup rereads the settings file."""
    _saved_max_threads.cache_clear()
