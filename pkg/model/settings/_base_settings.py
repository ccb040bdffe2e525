"""JSON file of machine-local settings, grouped by scope.

The file maps scope names to flat key/value tables, e.g. {"run": {"max_threads": 4}}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import TypeAlias, Any

Scope: TypeAlias = str
ScopeSettings: TypeAlias = dict[str, Any]


@dataclass
class _BaseSettings:
    _filename: str
    _settings: dict[Scope, ScopeSettings]

    def __init__(self, filename: str | Path, settings: dict[Scope, ScopeSettings]) -> None:
        self._filename = str(filename)
        self._settings = settings

    @property
    def filename(self) -> str:
        return self._filename

    # ==============================
    # Scoped access
    # ==============================
    def get_settings(self, scope: Scope, setting_name: str) -> Any:
        return self._settings.get(scope, {}).get(setting_name)

    def update_settings(self, scope: Scope, dict_to_merge: ScopeSettings) -> None:
        self._settings.setdefault(scope, {}).update(dict_to_merge)

    def clear_setting(self, scope: Scope, setting_name: str) -> None:
        """Remove one key; a scope left empty is dropped from the file."""
        table = self._settings.get(scope)
        if table is None:
            return
        table.pop(setting_name, None)
        if not table:
            del self._settings[scope]

    # ==============================
    # File I/O
    # ==============================
    def save(self) -> None:
        path = Path(self._filename)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self._settings, indent=2, sort_keys=True) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, filename: str | Path) -> _BaseSettings:
        """A missing file gives empty settings; scopes that are not JSON objects are skipped."""
        try:
            raw = json.loads(Path(filename).read_text(encoding="utf-8"))
        except FileNotFoundError:
            raw = {}
        tables = {str(scope): dict(table) for scope, table in raw.items() if isinstance(table, dict)}
        return cls(filename, tables)
