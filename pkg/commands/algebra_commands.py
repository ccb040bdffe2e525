"""verify-algebra: the exact identity suite."""
import argparse
from pathlib import Path

from commands.command_enums import HelpSection
from commands.registry import registry, CommandArgument, ValidationError
from model.algebra.operators import DEFAULT_DEGREE_CAP
from model.algebra.verification import DEFAULT_SAMPLES, verify_algebra
from model.scenario import RunReport, digest_of


@registry.command(
    name="verify-algebra",
    aliases=["va"],
    arguments=[
        CommandArgument("--ndof", type=int, default=3, help="Degrees of freedom of the random checks"),
        CommandArgument("--max-degree", type=int, default=6, help="Total degree of the random Hamiltonians"),
        CommandArgument("--seed", type=int, default=0, help="Seed of the random polynomial set"),
        CommandArgument("--samples", type=int, default=DEFAULT_SAMPLES, help="Number of random Hamiltonians"),
        CommandArgument("--out", help="Also write the report to this file"),
    ],
    description="Run the exact operator-algebra identities and print each residual",
    help_sections=[HelpSection.ALGEBRA]
)
def verify_algebra_command(args: argparse.Namespace) -> int:
    if args.ndof < 1:
        raise ValidationError(f"--ndof must be >= 1, got {args.ndof}")
    if args.samples < 1:
        raise ValidationError(f"--samples must be >= 1, got {args.samples}")
    if not 1 <= args.max_degree or 2 * args.max_degree > DEFAULT_DEGREE_CAP:
        raise ValidationError(f"--max-degree must be between 1 and {DEFAULT_DEGREE_CAP // 2} "
                              f"(products reach twice the degree; cap {DEFAULT_DEGREE_CAP}), got {args.max_degree}")

    parameters = {"command": "verify-algebra", "ndof": args.ndof, "max_degree": args.max_degree,
                  "seed": args.seed, "samples": args.samples}
    sections = verify_algebra(args.ndof, args.max_degree, args.seed, args.samples)
    report = RunReport("verify-algebra", digest_of(parameters), sections)
    text = report.render()
    print(text, end="")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    return report.exit_code
