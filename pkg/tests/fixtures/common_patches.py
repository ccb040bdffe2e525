"""Patches that keep tests away from real settings files and the working directory."""
import pytest

import app


@pytest.fixture
def isolated_settings(tmp_path, monkeypatch):
    """Point the settings file, the FFT thread cap and the working directory into tmp_path.

    Yields:
        The settings file path.
    """
    settings_path = tmp_path / "kvnlab_settings.json"
    monkeypatch.setenv("KVNLAB_SETTINGS", str(settings_path))
    monkeypatch.delenv("KVNLAB_MAX_THREADS", raising=False)
    monkeypatch.chdir(tmp_path)
    app.forget_saved_settings()
    yield settings_path
    app.forget_saved_settings()
