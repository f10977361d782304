"""
Shared helpers for the command groups: exit codes, graph input, artifact output.
"""
import argparse
import sys
from enum import IntEnum
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel

from workbench.services.bridge_gadgets import validate_bits
from workbench.services.errors import GraphParseError, ParameterError
from workbench.services.graph_core import Graph
from workbench.services.serialization import GraphFormat, parse


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    FAILED = 2
    NOT_FOUND = 3


def bits_arg(value: str) -> str:
    try:
        return validate_bits(value)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def levels_arg(value: str) -> Optional[int]:
    """Tower height: a non-negative integer, or 'auto'."""
    if value == "auto":
        return None
    return int(value)


def need(value, flag: str):
    if value is None:
        raise ParameterError(f"{flag} is required here")
    return value


def read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise GraphParseError(f"{path} is not valid UTF-8 (byte {exc.start}: {exc.reason})") from exc


def read_graph(path: str, fmt: Optional[str] = None) -> Graph:
    """Read a graph; the format defaults by suffix (.json, otherwise edge list)."""
    if fmt is None:
        fmt = GraphFormat.JSON if path.endswith(".json") else GraphFormat.EDGELIST
    return parse(read_text(path), GraphFormat(fmt))


def write_text(text: str, path: Optional[str] = None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8")


def dump_model(model: BaseModel) -> str:
    return model.model_dump_json(indent=2) + "\n"


def _is_id(token: str) -> bool:
    return token.isascii() and token.isdigit()


def parse_pins(items: Optional[List[str]]) -> Dict[int, int]:
    """Pins given as PATTERN=HOST pairs."""
    pins: Dict[int, int] = {}
    for item in items or []:
        left, sep, right = item.partition("=")
        if not sep or not _is_id(left.strip()) or not _is_id(right.strip()):
            raise ParameterError(f"pin {item!r} is not of the form PATTERN=HOST")
        pins[int(left)] = int(right)
    return pins


def parse_ids(value: Optional[str]) -> List[int]:
    if not value:
        return []
    parts = [part.strip() for part in value.split(",") if part.strip()]
    if not all(_is_id(part) for part in parts):
        raise ParameterError(f"invalid id list {value!r}")
    return [int(part) for part in parts]
