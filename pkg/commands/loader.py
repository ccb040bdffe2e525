"""Imports the lab's command modules so that their @registry.command decorators run."""
import importlib
from types import ModuleType

COMMAND_MODULES = (
    "commands.help_commands",
    "commands.algebra_commands",
    "commands.simulation_commands",
    "commands.compare_commands",
    "commands.settings_commands",
)


def load_all_commands() -> list[ModuleType]:
    """Import every command module; importing twice is a no-op."""
    return [importlib.import_module(name) for name in COMMAND_MODULES]
