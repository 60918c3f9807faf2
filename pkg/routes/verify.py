import argparse
import logging

from models import SUITES, CheckStatus
from services.errors import IdentityViolationError
from services.verify_service import Verifier

from .output import EXIT_OK, EXIT_VIOLATION, CommandResult, add_format, run_config, to_json, to_lines

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="run the verification suites")
    parser.add_argument(
        "--suite",
        action="append",
        default=None,
        help=f"one of {', '.join(SUITES)} or all; repeat or comma-separate for several",
    )
    parser.add_argument("--max-weight", type=int, required=True)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--strict", action="store_true", help="stop with the failed checks as the only output")
    add_format(parser, ("json", "lines"))
    parser.set_defaults(handler=handle)


def selected_suites(values) -> list:
    names = []
    for value in values or ["all"]:
        names.extend(part.strip() for part in value.split(",") if part.strip())
    if "all" in names:
        return list(SUITES)
    return names


def handle(args: argparse.Namespace) -> CommandResult:
    settings = run_config(
        args,
        args.max_weight,
        suites=selected_suites(args.suite),
        seed=args.config["default_seed"] if args.seed is None else args.seed,
        sample_count=args.config["sample_count"] if args.samples is None else args.samples,
    )
    verifier = Verifier(settings.max_weight, seed=settings.seed, samples=settings.sample_count)
    report = verifier.run(settings.suites)
    status = EXIT_OK if report.passed else EXIT_VIOLATION
    if not report.passed:
        logger.error("❌ verification failed at max weight %d", settings.max_weight)
        if args.strict:
            failed = [c for c in report.checks if c.status == CheckStatus.FAIL]
            raise IdentityViolationError(f"verification failed at max weight {settings.max_weight}", checks=failed)
    if settings.format.value == "lines" and report.passed:
        lines = [
            f"{c.status.value} {c.weight} {c.check}" + (f" :: {c.witness}" if c.witness else "")
            for c in report.checks
        ]
        return CommandResult(to_lines(lines), status)
    return CommandResult(to_json(report), status)
