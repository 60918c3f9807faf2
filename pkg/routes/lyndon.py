import argparse

from services.errors import LieBarError
from services.words_service import lyndon_words

from .output import EXIT_USAGE, CommandError, CommandResult, add_format, run_config, to_json, to_lines


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("lyndon", parents=parents, help="list Lyndon words in lexicographic order")
    parser.add_argument("--max-length", type=int, required=True)
    add_format(parser, ("json", "lines"))
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> CommandResult:
    settings = run_config(args, args.max_length)
    try:
        words = list(lyndon_words(settings.max_weight))
    except LieBarError as e:
        raise CommandError(EXIT_USAGE, str(e))
    if settings.format.value == "lines":
        return CommandResult(to_lines(words))
    return CommandResult(to_json(words))
