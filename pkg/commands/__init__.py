"""
Command system for the KvN lab CLI.

This module provides the command registry system with help integration
and command categorization.
"""

from .command_enums import ExitCode, HelpSection
from .help_commands import HelpGenerator
from .registry import registry, CommandRegistry, ValidationError

__all__ = [
    'registry',
    'CommandRegistry',
    'ValidationError',
    'ExitCode',
    'HelpSection',
    'HelpGenerator'
]
