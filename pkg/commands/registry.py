"""Command registry system for organizing CLI subcommands."""
import argparse
import sys
from functools import wraps
from typing import Any, Callable, NamedTuple

from commands.command_enums import ExitCode, HelpSection


# =============================================================================
# Type Definitions
# =============================================================================

class ValidationError(Exception):
    """Exception raised when command validation fails."""
    pass


class CommandArgument(NamedTuple):
    """Definition of a command argument.

    Args:
        name: Positional name, or an option when it starts with "--"
        optional: Whether a positional argument may be omitted (options are always optional)
        help: One-line help text
        type: Converter applied by argparse
        default: Value used when the argument is omitted
        choices: Allowed values, if restricted
        flag: Option without a value (store_true)

    Examples:
        CommandArgument("scenario")                          # Required positional
        CommandArgument("section", optional=True)            # Optional positional
        CommandArgument("--seed", type=int, default=0)       # Option with a value
        CommandArgument("--resume", flag=True)               # Switch
    """
    name: str
    optional: bool = False
    help: str = ""
    type: Callable[[str], Any] = str
    default: Any = None
    choices: tuple[str, ...] = ()
    flag: bool = False

    @property
    def is_option(self) -> bool:
        return self.name.startswith("--")

    def format(self) -> str:
        label = "|".join(self.choices) if self.choices else self.name.lstrip("-").upper()
        if self.flag:
            return f"[{self.name}]"
        if self.is_option:
            return f"[{self.name} {label}]"
        return f"[{self.name}]" if self.optional else f"<{self.name}>"

    def add_to(self, parser: argparse.ArgumentParser) -> None:
        kwargs: dict[str, Any] = {"help": self.help}
        if self.flag:
            parser.add_argument(self.name, action="store_true", **kwargs)
            return
        kwargs["type"] = self.type
        kwargs["default"] = self.default
        if self.choices:
            kwargs["choices"] = self.choices
        if not self.is_option and self.optional:
            kwargs["nargs"] = "?"
        parser.add_argument(self.name, **kwargs)


class CommandInfo(NamedTuple):
    """Information about a registered command."""
    name: str
    handler: Callable[[argparse.Namespace], int]
    description: str
    help_sections: tuple[HelpSection, ...]
    aliases: tuple[str, ...] = ()
    arguments: tuple[CommandArgument, ...] = ()

    def get_formatted_name(self) -> str:
        """Get the command name formatted with arguments (e.g., "compare <a> <b> [--tol TOL]")."""
        if not self.arguments:
            return self.name
        return f"{self.name} {' '.join(arg.format() for arg in self.arguments)}"


class CommandRegistry:
    """Registry for CLI commands with decorator-based registration."""

    def __init__(self):
        self.commands: dict[str, CommandInfo] = {}
        self.aliases: dict[str, str] = {}

    def command(self, name: str,
                aliases: list[str] | None = None,
                arguments: list[CommandArgument] | None = None,
                description: str = "",
                help_sections: list[HelpSection] | None = None):
        """Decorator to register a command handler along with help metadata.

        Args:
            name (str): The primary name of the command.
            aliases (list[str], optional): Alternative names for the command.
            arguments (list[CommandArgument], optional): Positional arguments and options.
            description (str): Help text for the command.
            help_sections (list[HelpSection]): Sections this command appears in.

        Examples:
            ```python
            @registry.command(
                name="compare",
                description="Compare two state snapshots",
                help_sections=[HelpSection.ANALYSIS],
                arguments=[CommandArgument("a"), CommandArgument("b"), CommandArgument("--tol", type=float)]
            )
            ```
        """
        if help_sections is None:
            help_sections = []
        if aliases is None:
            aliases = []
        if arguments is None:
            arguments = []

        def decorator(func: Callable[[argparse.Namespace], int]):
            command_info = CommandInfo(
                name=name,
                handler=func,
                description=description,
                help_sections=tuple(help_sections),
                aliases=tuple(aliases),
                arguments=tuple(arguments),
            )
            self.commands[name] = command_info

            for alias in aliases:
                self.aliases[alias] = name

            @wraps(func)
            def wrapper(*args, **kwargs):
                return func(*args, **kwargs)

            return wrapper

        return decorator

    def build_parser(self, prog: str = "kvn") -> argparse.ArgumentParser:
        """One argparse subparser per registered command, aliases included."""
        parser = argparse.ArgumentParser(prog=prog, description="KvN quantization lab")
        subparsers = parser.add_subparsers(dest="command", metavar="command")
        for command_info in sorted(self.commands.values(), key=lambda c: c.name):
            subparser = subparsers.add_parser(command_info.name, aliases=list(command_info.aliases),
                                              help=command_info.description,
                                              description=command_info.description)
            for argument in command_info.arguments:
                argument.add_to(subparser)
        return parser

    def handle_command(self, argv: list[str], prog: str = "kvn") -> int:
        """Parse argv, run the matching handler and return its exit code.

        Usage errors exit through argparse with code 2; a ValidationError raised by a handler
        is printed to stderr and also maps to 2.
        """
        parser = self.build_parser(prog)
        args = parser.parse_args(argv)
        if args.command is None:
            if "help" not in self.commands:
                parser.print_usage(sys.stderr)
                return ExitCode.USAGE
            args = parser.parse_args(["help"])
        actual_command = self.aliases.get(args.command, args.command)
        command_info = self.commands[actual_command]
        try:
            return int(command_info.handler(args))
        except ValidationError as e:
            print(f"{prog} {actual_command}: error: {e}", file=sys.stderr)
            return ExitCode.USAGE

    def get_all_commands(self) -> dict[str, CommandInfo]:
        """Get all registered commands."""
        return self.commands.copy()

    def get_commands_by_section(self, section: HelpSection) -> tuple[CommandInfo, ...]:
        """Get commands for a specific help section."""
        result = []
        for command_info in self.commands.values():
            if section in command_info.help_sections:
                result.append(command_info)
        return tuple(sorted(result, key=lambda x: x.name))

    def log_registered_commands(self, logger):
        """Log all registered commands at startup."""
        names = sorted(self.commands)
        logger.info(f"Command Registry: {len(names)} commands registered")
        if names:
            logger.info(f"Commands: {', '.join(names)}")
        if self.aliases:
            logger.info(f"Aliases: {', '.join(f'{a} -> {c}' for a, c in sorted(self.aliases.items()))}")

    def save_state(self) -> tuple[dict, dict]:
        """Save the current state of the registry for restoration later.

        Returns:
            Tuple of (commands_copy, aliases_copy) for restoration
        """
        return (self.commands.copy(), self.aliases.copy())

    def restore_state(self, state: tuple[dict, dict]) -> None:
        """Restore the registry to a previously saved state.

        Args:
            state: Tuple of (commands, aliases) from save_state()
        """
        commands, aliases = state
        self.commands = commands.copy()
        self.aliases = aliases.copy()

    def clear(self) -> None:
        """Clear all commands and aliases from the registry."""
        self.commands.clear()
        self.aliases.clear()


# Global registry instance
registry = CommandRegistry()
