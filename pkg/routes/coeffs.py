import argparse

from models import CoefficientEntry
from services.colie_service import ab_tables
from services.errors import LieBarError
from services.ihara_service import structure_tables
from services.linear import CoefficientTable, format_fraction

from .output import EXIT_USAGE, CommandError, CommandResult, add_format, run_config, to_csv, to_json, to_lines

FAMILIES = ("alpha", "beta", "gamma", "a", "b", "ap", "bp")


def coefficient_table(family: str, max_weight: int) -> CoefficientTable:
    if family in ("alpha", "beta", "gamma"):
        return getattr(structure_tables(max_weight), family)
    return ab_tables(max_weight).family(family)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("coeffs", parents=parents, help="structure constant tables")
    parser.add_argument("--family", choices=FAMILIES, required=True)
    parser.add_argument("--max-weight", type=int, required=True)
    add_format(parser, ("json", "csv", "lines"))
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> CommandResult:
    settings = run_config(args, args.max_weight)
    try:
        table = coefficient_table(args.family, settings.max_weight)
    except LieBarError as e:
        raise CommandError(EXIT_USAGE, str(e))
    entries = [CoefficientEntry(W=w, U=u, V=v, value=format_fraction(c)) for w, u, v, c in table.entries()]
    if settings.format.value == "csv":
        return CommandResult(to_csv(entries, ("W", "U", "V", "value")))
    if settings.format.value == "lines":
        return CommandResult(to_lines(f"{e.W} {e.U} {e.V} {e.value}" for e in entries))
    return CommandResult(to_json(entries))
