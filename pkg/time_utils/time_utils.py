from __future__ import annotations

import time
from contextlib import contextmanager
from typing import Callable, Iterator


def format_duration(seconds: float) -> str:
    """
    Formats a duration for log lines: '850 ms', '12.3 s', '2m 05s'.
    :param seconds: The duration in seconds.
    :return: A short human-readable string.
    """
    if seconds < 0:
        raise ValueError(f"Duration cannot be negative: {seconds}")
    if seconds < 1:
        return f"{seconds * 1000:.0f} ms"
    if seconds < 60:
        return f"{seconds:.1f} s"
    minutes, rest = divmod(int(round(seconds)), 60)
    return f"{minutes}m {rest:02d}s"


class Stopwatch:
    """Accumulates wall-clock time per named stage, in first-use order."""

    def __init__(self, clock: Callable[[], float] = time.perf_counter) -> None:
        self._clock = clock
        self._timings: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = self._clock()
        try:
            yield
        finally:
            self._timings[name] = self._timings.get(name, 0.0) + (self._clock() - start)

    @property
    def timings(self) -> dict[str, float]:
        return dict(self._timings)

    @property
    def total(self) -> float:
        return sum(self._timings.values())
