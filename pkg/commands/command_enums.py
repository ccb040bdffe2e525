"""Enums for command help system categorization and exit codes."""

from enum import Enum, IntEnum


class HelpSection(Enum):
    """Categories for help command organization."""
    ALGEBRA = "algebra"
    SIMULATION = "simulation"
    ANALYSIS = "analysis"
    CONFIGURE = "configure"
    MISC = "misc"


class ExitCode(IntEnum):
    """Process exit codes: 0 iff every check that must pass did pass."""
    OK = 0
    CHECKS_FAILED = 1
    USAGE = 2
