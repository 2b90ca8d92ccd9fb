"""Command-line entry point for the PM space toolkit."""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from loguru import logger

from .config import get_settings
from .ddf import TNormKind
from .handlers import CHECKS, COMMANDS, EXIT_FAILED, EXIT_USAGE
from .space import TotalBoundednessMode
from .storage import dump_csv, dump_document
from .utils.logging import configure_logging
from .utils.validation import FileFormatError, PMSpaceError, SpaceAxiomError

TNORM_CHOICES = [kind.value for kind in TNormKind]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="Tolerance (default: PMSPACE_LEVY_TOL, 1e-6)")
    common.add_argument("--grid", type=str, default=None, help='Grid spec "start:stop:step"')
    common.add_argument("--no-validate", action="store_true", help="Load spaces even if the axioms fail")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized checks")
    common.add_argument("--log", type=str, default=None, help="Optional log file path")
    common.add_argument(
        "--log-level",
        type=str,
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level (default: PMSPACE_LOG_LEVEL or INFO)",
    )
    return common


def _seq_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seq", required=True, help="Comma-separated point labels p_1,...,p_n")
    parser.add_argument("--eps", type=float, required=True)
    parser.add_argument("--lam", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per library operation."""
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="pmspace", description="Probabilistic metric space toolkit")
    commands = parser.add_subparsers(dest="command", metavar="command")

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, help=help_text, parents=[common])

    levy = command("levy", "Modified Levy distance between two d.d.f. files")
    levy.add_argument("first")
    levy.add_argument("second")

    dist_h0 = command("dist-h0", "Closed-form d_L(F, H_0)")
    dist_h0.add_argument("ddf")

    tau = command("tau", "Sup-T convolution of two d.d.f. files")
    tau.add_argument("first")
    tau.add_argument("second")
    tau.add_argument("--tnorm", choices=TNORM_CHOICES, default="T_M")

    conv = command("conv", "Probabilistic convolution of two d.d.f. files")
    conv.add_argument("first")
    conv.add_argument("second")

    tnorm = command("tnorm", "Evaluate a t-norm (or its t-conorm)")
    tnorm.add_argument("kind", choices=TNORM_CHOICES)
    tnorm.add_argument("x", type=float)
    tnorm.add_argument("y", type=float)
    tnorm.add_argument("--conorm", action="store_true", help="Evaluate the dual t-conorm")

    validate = command("validate", "Check the PM space axioms of a space file")
    validate.add_argument("space")

    metric = command("from-metric", "Embed a finite metric as a Menger (or Wald) space")
    metric.add_argument("metric")
    metric.add_argument("--out", type=str, default=None, help="Optional path to write the space file")

    nbhd = command("neighborhood", "Strong neighbourhood N_p(t)")
    nbhd.add_argument("space")
    nbhd.add_argument("--point", required=True)
    nbhd.add_argument("--t", type=float, required=True)

    for name, help_text in (("diameter", "Probabilistic diameter D_A"), ("classify", "Boundedness class of A")):
        sub = command(name, help_text)
        sub.add_argument("space")
        sub.add_argument("--subset", required=True, help="Comma-separated labels")

    tb = command("totally-bounded", "Total boundedness of A at radius eps")
    tb.add_argument("space")
    tb.add_argument("--subset", required=True)
    tb.add_argument("--eps", type=float, required=True)
    tb.add_argument("--mode", choices=[mode.value for mode in TotalBoundednessMode], default="cover")

    separate = command("separate", "Find disjoint neighbourhoods of two points")
    separate.add_argument("space")
    separate.add_argument("p")
    separate.add_argument("q")

    cauchy = command("cauchy", "Cauchy condition on a finite sequence")
    cauchy.add_argument("space")
    _seq_args(cauchy)
    cauchy.add_argument("--min-tail", type=int, default=None)

    conv_seq = command("converges", "Convergence of a finite sequence to a point")
    conv_seq.add_argument("space")
    _seq_args(conv_seq)
    conv_seq.add_argument("--to", required=True, help="Limit point label")
    conv_seq.add_argument("--min-tail", type=int, default=None)

    weak = command("weak", "Weak convergence versus d_L convergence of d.d.f. files")
    weak.add_argument("target")
    weak.add_argument("sequence", nargs="+")

    trace = command("trace", "CSV of x, F(x) on a grid")
    trace.add_argument("ddf")

    check = commands.add_parser("check", help="Theorem and axiom checks")
    checks = check.add_subparsers(dest="check", metavar="check")
    for name, (_, description) in CHECKS.items():
        sub = checks.add_parser(name, help=description, parents=[common])
        if name not in ("triangle-axioms", "tnorm-axioms"):
            sub.add_argument("space")
        if name == "diameter":
            sub.add_argument("--max-size", type=int, default=3)
        elif name in ("tb", "heine-borel"):
            sub.add_argument("--subset", required=name == "tb", default=None)
        if name == "subsequence":
            _seq_args(sub)
            sub.add_argument("--sub", required=True, help="Comma-separated 1-based positions")
            sub.add_argument("--to", required=True)
        elif name in ("cantor", "baire"):
            sub.add_argument("--set", action="append", required=True, help="Comma-separated labels; repeat")
        elif name == "heine-borel":
            sub.add_argument("--seq", action="append", default=None, help="Comma-separated labels; repeat")
            sub.add_argument("--cover", action="append", default=None, help='Sets separated by ";"; repeat')
        elif name == "triangle-axioms":
            sub.add_argument("--tnorm", choices=TNORM_CHOICES, default="T_M")
            sub.add_argument("--convolution", action="store_true")
            sub.add_argument("--samples", type=int, default=200)
        elif name == "tnorm-axioms":
            sub.add_argument("kind", choices=TNORM_CHOICES)
            sub.add_argument("--samples", type=int, default=1000)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, dispatch, print the result document and return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if not args.command or (args.command == "check" and not args.check):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE

    configure_logging(level=args.log_level or get_settings().log_level, log_file=args.log)
    logger.debug(f"Running {args.command}")
    try:
        document, code = COMMANDS[args.command](args)
    except SpaceAxiomError as e:
        logger.error(str(e))
        print(dump_document(e.report))
        return EXIT_FAILED
    except (FileFormatError, PMSpaceError, ValueError) as e:
        logger.error(str(e))
        return EXIT_USAGE

    if args.command == "trace":
        header, rows = document
        sys.stdout.write(dump_csv(header, rows))
    else:
        print(dump_document(document))
    return code


def cli() -> None:
    sys.exit(run())


if __name__ == "__main__":
    cli()
