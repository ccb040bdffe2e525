from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from model.settings._base_settings import _BaseSettings

_SETTINGS_FILENAME = 'kvnlab_settings.json'
_SETTINGS_ENV = 'KVNLAB_SETTINGS'
_SCOPE = 'run'


class SettingsValueError(ValueError):
    """Raised when a settings value cannot be stored for its key."""
    pass


def default_settings_path() -> str:
    return os.environ.get(_SETTINGS_ENV, _SETTINGS_FILENAME)


@dataclass
class RunSettings:
    """Machine-local preferences for the runner: FFT thread cap and default output root."""

    _settings: _BaseSettings

    KEYS = ('max_threads', 'output_root')

    def __init__(self, settings: _BaseSettings) -> None:
        """Private constructor. Use load() instead."""
        self._settings = settings

    # ==============================
    # Thread cap
    # ==============================
    def get_max_threads(self) -> int | None:
        value = self._settings.get_settings(_SCOPE, 'max_threads')
        return int(value) if value is not None else None

    def set_max_threads(self, max_threads: int) -> RunSettings:
        if max_threads < 1:
            raise SettingsValueError(f"max_threads must be a positive integer, got {max_threads}")
        self._settings.update_settings(_SCOPE, {'max_threads': int(max_threads)})
        return self

    def clear_max_threads(self) -> RunSettings:
        self._settings.clear_setting(_SCOPE, 'max_threads')
        return self

    # ==============================
    # Output root
    # ==============================
    def get_output_root(self) -> Path | None:
        value = self._settings.get_settings(_SCOPE, 'output_root')
        return Path(value) if value else None

    def set_output_root(self, output_root: str | Path) -> RunSettings:
        self._settings.update_settings(_SCOPE, {'output_root': str(output_root)})
        return self

    def clear_output_root(self) -> RunSettings:
        self._settings.clear_setting(_SCOPE, 'output_root')
        return self

    # ==============================
    # Generic access for the settings command
    # ==============================
    def as_dict(self) -> dict[str, object]:
        return {key: self._settings.get_settings(_SCOPE, key) for key in self.KEYS}

    def set_value(self, key: str, raw: str) -> RunSettings:
        """Set a key from its command-line text; an empty string clears it."""
        if key not in self.KEYS:
            raise SettingsValueError(f"Unknown setting {key!r}; known settings: {', '.join(self.KEYS)}")
        if raw == '':
            return getattr(self, f'clear_{key}')()
        if key == 'max_threads':
            try:
                return self.set_max_threads(int(raw))
            except ValueError as e:
                raise SettingsValueError(f"max_threads must be a positive integer, got {raw!r}") from e
        return self.set_output_root(raw)

    # ==============================
    # Serialization/Deserialization
    # ==============================
    @property
    def filename(self) -> str:
        return self._settings.filename

    def save(self) -> RunSettings:
        """Save settings to a JSON file."""
        self._settings.save()
        return self

    @classmethod
    def load(cls, filename: str | None = None) -> RunSettings:
        """Load settings from a JSON file; a missing file gives empty settings."""
        return cls(_BaseSettings.load(filename or default_settings_path()))
