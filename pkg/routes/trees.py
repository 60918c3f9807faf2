import argparse

from models import TreeInfo
from services.errors import LieBarError
from services.trees_service import enumerate_trees, leaf_count, tree_to_string

from .output import EXIT_USAGE, CommandError, CommandResult, add_format, run_config, to_json, to_lines


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("trees", parents=parents, help="planar binary trees with N leaves")
    parser.add_argument("--leaves", type=int, required=True)
    add_format(parser, ("json", "lines"))
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> CommandResult:
    settings = run_config(args, args.leaves)
    try:
        trees = enumerate_trees(settings.max_weight)
    except LieBarError as e:
        raise CommandError(EXIT_USAGE, str(e))
    infos = [TreeInfo(index=i, leaves=leaf_count(t), bracket=tree_to_string(t)) for i, t in enumerate(trees)]
    if settings.format.value == "lines":
        return CommandResult(to_lines(info.bracket for info in infos))
    return CommandResult(to_json(infos))
