import argparse

from models import CobracketResult, WedgeTerm
from services.colie_service import BASES, BASIS_OF_KIND, colie_basis, d_cy, format_tag, parse_tag
from services.errors import LieBarError
from services.linear import format_fraction

from .output import EXIT_USAGE, CommandError, CommandResult, add_format, run_config, to_json, to_lines


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("cobracket", parents=parents, help="d_cy of one basis tag")
    parser.add_argument("tag", help="T0:W, T1:W, Tx:W or T@1:W")
    parser.add_argument("--basis", choices=BASES, default=None, help="output basis (default: the tag's own)")
    add_format(parser, ("json", "lines"))
    parser.set_defaults(handler=handle)


def cobracket_result(text: str, basis: str = None) -> CobracketResult:
    tag = parse_tag(text)
    wedges = d_cy(colie_basis(tag), basis=basis)
    terms = [
        WedgeTerm(left=format_tag(u), right=format_tag(v), coeff=format_fraction(c))
        for (u, v), c in wedges.sorted_items()
    ]
    used = basis or BASIS_OF_KIND[tag[0]]
    return CobracketResult(tag=format_tag(tag), basis=used, terms=terms)


def handle(args: argparse.Namespace) -> CommandResult:
    try:
        tag = parse_tag(args.tag)
        run_config(args, len(tag[1]))
        result = cobracket_result(args.tag, args.basis)
    except LieBarError as e:
        raise CommandError(EXIT_USAGE, str(e))
    if args.format == "lines":
        return CommandResult(to_lines(f"{t.coeff} {t.left}^{t.right}" for t in result.terms))
    return CommandResult(to_json(result))
