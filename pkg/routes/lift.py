import argparse
import logging

from models import CheckStatus
from services.errors import LieBarError
from services.lift_service import METHODS, VARIANTS, lift_LB, lift_report
from services.words_service import validate_lyndon

from .output import (
    EXIT_USAGE,
    EXIT_VIOLATION,
    CommandError,
    CommandResult,
    add_format,
    format_slots,
    run_config,
    to_json,
    to_lines,
)

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("lift", parents=parents, help="closed bar lift of a cycle generator")
    parser.add_argument("word", help="Lyndon word of length >= 2")
    parser.add_argument("--variant", choices=sorted(VARIANTS), default="plain")
    parser.add_argument("--method", choices=METHODS, default="oracle")
    parser.add_argument("--check", action="store_true", help="verify the lift properties")
    add_format(parser, ("json", "lines"))
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> CommandResult:
    try:
        validate_lyndon(args.word)
        run_config(args, len(args.word))
        result = lift_LB(args.word, args.variant, method=args.method, check=args.check)
    except LieBarError as e:
        raise CommandError(EXIT_USAGE, str(e))
    report = lift_report(result, args.word, args.variant, args.method)
    failed = [c for c in report.checks if c.status == CheckStatus.FAIL]
    if failed:
        logger.error("❌ %d lift checks failed for %s", len(failed), report.generator)
        return CommandResult(to_json(report), EXIT_VIOLATION)
    if args.format == "lines":
        return CommandResult(to_lines(f"{t.coeff} {format_slots(t.slots)}" for t in report.terms))
    return CommandResult(to_json(report))
