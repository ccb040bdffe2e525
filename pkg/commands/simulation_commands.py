"""simulate: run one scenario file into its output directory."""
import argparse

import app
from commands.command_enums import ExitCode, HelpSection
from commands.registry import registry, CommandArgument, ValidationError
from model.embedding import EmbeddingError
from model.phase_space import PhaseSpaceError
from model.scenario import ScenarioError, ScenarioRunner, load_scenario


@registry.command(
    name="simulate",
    aliases=["sim"],
    arguments=[
        CommandArgument("scenario", help="Scenario YAML file"),
        CommandArgument("--out", help="Output directory (overrides the scenario file)"),
        CommandArgument("--resume", flag=True, help="Continue from checkpoint.pckl in the output directory"),
    ],
    description="Evolve a scenario, write snapshots, CSV traces and report.txt",
    help_sections=[HelpSection.SIMULATION]
)
def simulate_command(args: argparse.Namespace) -> int:
    """Exit code 0 iff every diagnostic passes; the report is written either way."""
    try:
        scenario = load_scenario(args.scenario, output=args.out)
    except FileNotFoundError:
        raise ValidationError(f"Scenario file not found: {args.scenario}")
    except ScenarioError as e:
        raise ValidationError(str(e))

    try:
        report = ScenarioRunner(scenario, resume=args.resume).run()
    except (ScenarioError, PhaseSpaceError, EmbeddingError) as e:
        raise ValidationError(str(e))
    except OSError as e:
        app.logger.error(f"I/O error while running {scenario.name}: {e}")
        raise ValidationError(f"I/O error: {e}")

    print(report.render(), end="")
    print(f"Outputs written to {scenario.output}")
    return ExitCode.OK if report.passed else ExitCode.CHECKS_FAILED
