import argparse
import logging
import sys
import traceback
from pathlib import Path
from typing import List, Optional

from config import load_config, setup_logging
from routes import ROUTES
from routes.output import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, CommandError, common_flags, to_json
from services.errors import ConfigError, IdentityViolationError, LieBarError

logger = logging.getLogger("liebar")


class UsageExit(Exception):
    def __init__(self, status: int):
        super().__init__(status)
        self.status = status


class LieBarParser(argparse.ArgumentParser):
    """argparse parser that reports usage errors as status 2 without exiting the process."""

    def exit(self, status: int = 0, message: Optional[str] = None):
        if message:
            sys.stderr.write(message)
        raise UsageExit(status)


def build_parser() -> argparse.ArgumentParser:
    parser = LieBarParser(
        prog="liebar",
        description="Exact computations with Lyndon words, the Ihara bracket, cobar models and bar lifts",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="override LIEBAR_LOG_LEVEL",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=LieBarParser)
    parents = [common_flags()]
    for route in ROUTES:
        route.register(subparsers, parents)
    return parser


def write_output(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("✅ output written to %s", out)
    else:
        sys.stdout.write(text)


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageExit as e:
        return e.status
    try:
        args.config = load_config()
    except ConfigError as e:
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE
    setup_logging(args.config, args.log_level)

    try:
        result = args.handler(args)
    except IdentityViolationError as e:
        sys.stderr.write(f"❌ {e}\n")
        try:
            write_output(to_json(e.checks), getattr(args, "out", None))
        except OSError:
            pass
        return EXIT_VIOLATION
    except CommandError as e:
        sys.stderr.write(f"❌ {e.detail}\n")
        return e.status
    except LieBarError as e:
        sys.stderr.write(f"❌ {e}\n")
        return EXIT_USAGE
    except Exception as e:
        logger.error("❌ unexpected error: %s", e)
        traceback.print_exc()
        return EXIT_USAGE

    try:
        write_output(result.text, getattr(args, "out", None))
    except OSError as e:
        sys.stderr.write(f"❌ cannot write {args.out}: {e}\n")
        return EXIT_USAGE
    return result.status if result.status is not None else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
