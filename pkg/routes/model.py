import argparse

from models import GeneratorInfo, MonomialTerm, PresentationDump
from services.cycle_models_service import SPACES, build_model
from services.errors import LieBarError
from services.linear import format_fraction

from .output import EXIT_USAGE, CommandError, CommandResult, add_format, run_config, to_json, to_lines


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("model", parents=parents, help="dump a cycle model presentation")
    parser.add_argument("--space", choices=SPACES, required=True)
    parser.add_argument("--max-weight", type=int, required=True)
    add_format(parser, ("json", "lines"))
    parser.set_defaults(handler=handle)


def presentation_dump(space: str, max_weight: int) -> PresentationDump:
    p = build_model(space, max_weight).presentation
    return PresentationDump(
        space=space,
        max_weight=max_weight,
        generators=[GeneratorInfo(name=g.name, degree=g.degree, weight=g.weight) for g in p.generators],
        differential={
            g.name: [
                MonomialTerm(monomial=list(mono), coeff=format_fraction(c))
                for mono, c in p.generator_differential(g.name).sorted_items()
            ]
            for g in p.generators
        },
    )


def handle(args: argparse.Namespace) -> CommandResult:
    settings = run_config(args, args.max_weight)
    try:
        dump = presentation_dump(args.space, settings.max_weight)
    except LieBarError as e:
        raise CommandError(EXIT_USAGE, str(e))
    if settings.format.value == "lines":
        lines = []
        for g in dump.generators:
            terms = dump.differential[g.name]
            rhs = " + ".join(f"{t.coeff} {' '.join(t.monomial)}" for t in terms) or "0"
            lines.append(f"d {g.name} = {rhs}")
        return CommandResult(to_lines(lines))
    return CommandResult(to_json(dump))
