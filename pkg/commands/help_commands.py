"""Help command that renders the registry as text."""
import argparse
from typing import NamedTuple

from commands.command_enums import ExitCode, HelpSection
from commands.registry import registry, CommandInfo, CommandArgument, ValidationError


# =============================================================================
# Data Structures
# =============================================================================

class CommandDisplay(NamedTuple):
    name: str
    description: str


class SectionInfo(NamedTuple):
    section_title: str  # Title for individual section help page
    section_description: str  # Description for individual section help page
    overview_description: str  # Line in the help overview


# =============================================================================
# Help Generator Class
# =============================================================================

class HelpGenerator:
    """Generates help text from the command registry."""

    SECTION_INFO: dict[HelpSection, SectionInfo] = {
        HelpSection.ALGEBRA: SectionInfo(
            section_title="Algebra",
            section_description="Exact symbolic checks of the KvN operator algebra.",
            overview_description="Prints commands that run the exact identity suite."
        ),
        HelpSection.SIMULATION: SectionInfo(
            section_title="Simulation",
            section_description="Scenario runs on a phase-space grid.",
            overview_description="Prints commands that evolve states and write run directories."
        ),
        HelpSection.ANALYSIS: SectionInfo(
            section_title="Analysis",
            section_description="Commands that inspect files written by earlier runs.",
            overview_description="Prints commands that compare snapshots."
        ),
        HelpSection.CONFIGURE: SectionInfo(
            section_title="Configuration",
            section_description="Machine-local run settings (thread cap, output root).",
            overview_description="Prints commands which configure how runs work."
        ),
        HelpSection.MISC: SectionInfo(
            section_title="Miscellaneous Commands",
            section_description="Everything else.",
            overview_description="Prints miscellaneous commands."
        ),
    }

    # Map of string names to help sections (automatically derived from SECTION_INFO)
    SECTION_MAP: dict[str, HelpSection] = {section.value: section for section in SECTION_INFO.keys()}

    @staticmethod
    def _get_and_sort_commands(registry_commands: tuple[CommandInfo, ...]) -> list[CommandDisplay]:
        all_commands: list[CommandDisplay] = []
        for cmd in registry_commands:
            cmd_name = cmd.get_formatted_name()
            if cmd.aliases:
                cmd_name += f" (aliases: {', '.join(cmd.aliases)})"
            all_commands.append(CommandDisplay(cmd_name, cmd.description))
        all_commands.sort(key=lambda x: x.name.lower())
        return all_commands

    @staticmethod
    def create_overview_help() -> str:
        """The top-level help page: one line per section."""
        lines = ["KvN lab help", ""]
        for section, info in HelpGenerator.SECTION_INFO.items():
            lines.append(f"  help {section.value:<12} {info.overview_description}")
        lines += ["", "Environment: KVNLAB_MAX_THREADS caps FFT threads; KVNLAB_LOG_LEVEL sets the log level."]
        return "\n".join(lines)

    @staticmethod
    def create_section_help(section: HelpSection) -> str:
        """Help text for a specific section with its registry commands."""
        info = HelpGenerator.SECTION_INFO[section]
        lines = [info.section_title, info.section_description, ""]
        commands = HelpGenerator._get_and_sort_commands(registry.get_commands_by_section(section))
        for cmd in commands:
            lines += [f"  {cmd.name}", f"      {cmd.description}"]
        if not commands:
            lines.append("  No commands are available for this section yet.")
        return "\n".join(lines)


# =============================================================================
# Command Registration
# =============================================================================

@registry.command(
    name="help",
    arguments=[CommandArgument("section", optional=True,
                               help=f"Section to show ({', '.join(s.value for s in HelpSection)}); omit for the overview")],
    description="Display help information for lab commands",
    help_sections=[HelpSection.MISC]
)
def help_command(args: argparse.Namespace) -> int:
    """Print the overview, or the commands of one section."""
    if not args.section:
        print(HelpGenerator.create_overview_help())
        return ExitCode.OK
    section = HelpGenerator.SECTION_MAP.get(args.section.strip().lower())
    if section is None:
        raise ValidationError(f"Unknown help topic: {args.section}. Use `help` to see available topics.")
    print(HelpGenerator.create_section_help(section))
    return ExitCode.OK
