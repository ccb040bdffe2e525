from .run_settings import RunSettings, SettingsValueError, default_settings_path

__all__ = ['RunSettings', 'SettingsValueError', 'default_settings_path']
