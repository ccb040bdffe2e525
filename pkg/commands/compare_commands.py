"""compare: difference of two state snapshots."""
import argparse

import numpy as np

from commands.command_enums import HelpSection
from commands.registry import registry, CommandArgument, ValidationError
from model.reports import CheckLine, CheckReport, Expectation
from model.scenario import RunReport, digest_of
from utils.snapshot_utils import SnapshotError, headers_match, read_header, read_snapshot

DEFAULT_TOLERANCE = 1e-12


@registry.command(
    name="compare",
    arguments=[
        CommandArgument("a", help="First snapshot (.kvn)"),
        CommandArgument("b", help="Second snapshot (.kvn)"),
        CommandArgument("--tol", type=float, default=DEFAULT_TOLERANCE, help="Max-norm tolerance"),
        CommandArgument("--expect-different", flag=True,
                        help="Pass only if the snapshots differ by more than the tolerance"),
    ],
    description="Max-norm and L2 difference of two snapshots with identical headers",
    help_sections=[HelpSection.ANALYSIS]
)
def compare_command(args: argparse.Namespace) -> int:
    if not args.tol > 0:
        raise ValidationError(f"--tol must be positive, got {args.tol}")
    try:
        mismatched = headers_match(read_header(args.a), read_header(args.b))
        if mismatched:
            raise ValidationError(f"Snapshot headers differ in: {', '.join(mismatched)}")
        a, b = read_snapshot(args.a), read_snapshot(args.b)
    except (OSError, SnapshotError) as e:
        raise ValidationError(str(e))

    difference = np.asarray(a.amplitudes) - np.asarray(b.amplitudes)
    max_norm = float(np.max(np.abs(difference)))
    l2 = float(np.sqrt(np.sum(np.abs(difference) ** 2) * a.cell_area))
    expectation = Expectation.NONZERO if args.expect_different else Expectation.PASS
    section = CheckReport(f"{args.a} vs {args.b}", (
        CheckLine.compare("max |a - b|", max_norm, args.tol, expectation),
        CheckLine("L2 |a - b|", True, f"{l2:.6e}", detail="informational"),
    ))
    report = RunReport("compare", digest_of({"command": "compare", "tol": args.tol,
                                             "expect_different": args.expect_different}), (section,))
    print(report.render(), end="")
    return report.exit_code
