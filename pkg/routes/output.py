"""Shared plumbing for the subcommand handlers: common flags, run settings, rendering."""

import argparse
import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Union

from pydantic import BaseModel, ValidationError

from models import OutputFormat, RunConfig

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class CommandError(Exception):
    """Raised by a handler to stop with ``status`` and a message on stderr."""

    def __init__(self, status: int, detail: str):
        super().__init__(detail)
        self.status = status
        self.detail = detail


@dataclass
class CommandResult:
    text: str
    status: int = EXIT_OK


def common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    parent.add_argument("--allow-large", action="store_true", help="allow weights above the configured cap")
    return parent


def add_format(parser: argparse.ArgumentParser, choices: Sequence[str], default: str = "json") -> None:
    parser.add_argument("--format", choices=list(choices), default=default)


def run_config(args: argparse.Namespace, max_weight: int, **extra) -> RunConfig:
    try:
        return RunConfig(
            max_weight=max_weight,
            format=getattr(args, "format", OutputFormat.JSON.value),
            max_weight_cap=args.config["max_weight_cap"],
            allow_large=args.allow_large,
            **extra,
        )
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise CommandError(EXIT_USAGE, messages) from None


Payload = Union[BaseModel, List[BaseModel], list]


def to_json(payload: Payload) -> str:
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") if isinstance(item, BaseModel) else item for item in payload]
    return json.dumps(data, indent=2) + "\n"


def to_csv(rows: Iterable[BaseModel], fields: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        data = row.model_dump(mode="json")
        writer.writerow([data[f] for f in fields])
    return buffer.getvalue()


def to_lines(lines: Iterable[str]) -> str:
    return "".join(f"{line}\n" for line in lines)


def format_slots(slots: Sequence[Sequence[str]]) -> str:
    return "[" + "|".join(" ".join(slot) for slot in slots) + "]"
