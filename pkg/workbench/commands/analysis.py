"""
Search and decoding verbs: find, girth, highways, decode, fingerprint.
"""
import argparse
from typing import List

from pydantic import TypeAdapter

from workbench.commands.common import (
    ExitCode,
    dump_model,
    need,
    parse_pins,
    read_graph,
    read_text,
    write_text,
)
from workbench.models.schemas import EmbeddingRecord, HighwayRecord, TowerLayout
from workbench.services import bridge_gadgets, girth_gadgets
from workbench.services.codec import decode_bridge_bits, decode_girth_bits, fingerprint
from workbench.services.graph_core import Graph
from workbench.services.search import enumerate_embeddings, find_embedding, girth, highways, short_cycle
from workbench.services.serialization import GraphFormat
from workbench.services.settings import get_settings

PATTERNS = ("bridge", "complete", "path", "cycle", "pentagon", "file")

_embeddings = TypeAdapter(List[EmbeddingRecord])
_highways = TypeAdapter(List[HighwayRecord])


def _add_host(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--host", required=True, help="graph file, or - for standard input")
    parser.add_argument("--input-format", choices=[GraphFormat.JSON.value, GraphFormat.EDGELIST.value])


def register(subparsers) -> None:
    find = subparsers.add_parser("find", help="search for a pattern inside a host graph")
    find.add_argument("--pattern", required=True, choices=PATTERNS)
    find.add_argument("--pattern-file", help="pattern graph when --pattern file")
    find.add_argument("--n", type=int)
    find.add_argument("--m", type=int)
    find.add_argument("--k", type=int)
    _add_host(find)
    find.add_argument("--induced", action="store_true", help="require an induced copy")
    find.add_argument("--pin", action="append", metavar="P=H", help="pin pattern vertex P to host vertex H")
    find.add_argument("--all", action="store_true", help="enumerate embeddings instead of the first")
    find.add_argument("--limit", type=int, help="cap for --all")
    find.set_defaults(handler=run_find)

    girth_cmd = subparsers.add_parser("girth", help="shortest cycle length")
    _add_host(girth_cmd)
    girth_cmd.add_argument("--max-length", type=int, help="also print a cycle of at most this length")
    girth_cmd.set_defaults(handler=run_girth)

    hw = subparsers.add_parser("highways", help="maximal degree-2 chains")
    _add_host(hw)
    hw.set_defaults(handler=run_highways)

    decode = subparsers.add_parser("decode", help="recover the bit string of a chain")
    decode.add_argument("--family", choices=["bridge", "girth"], default="bridge")
    decode.add_argument("--n", type=int)
    decode.add_argument("--layout", help="tower layout sidecar (girth family)")
    _add_host(decode)
    decode.set_defaults(handler=run_decode)

    fp = subparsers.add_parser("fingerprint", help="isomorphism fingerprint of a bridge chain")
    fp.add_argument("--n", type=int, required=True)
    _add_host(fp)
    fp.set_defaults(handler=run_fingerprint)


def build_pattern(args: argparse.Namespace) -> Graph:
    if args.pattern == "bridge":
        return bridge_gadgets.bridge(need(args.n, "--n"))
    if args.pattern == "complete":
        return bridge_gadgets.complete_graph(need(args.m, "--m"))
    if args.pattern == "path":
        return bridge_gadgets.path_graph(need(args.m, "--m"))
    if args.pattern == "cycle":
        return bridge_gadgets.cycle_graph(need(args.m, "--m"))
    if args.pattern == "pentagon":
        return girth_gadgets.pentagon(need(args.k, "--k"))
    return read_graph(need(args.pattern_file, "--pattern-file"))


def run_find(args: argparse.Namespace) -> int:
    pattern = build_pattern(args)
    host = read_graph(args.host, args.input_format)
    pins = parse_pins(args.pin)
    if args.all:
        limit = args.limit or get_settings().workbench_embedding_limit
        found = enumerate_embeddings(pattern, host, args.induced, pins, limit)
        records = [EmbeddingRecord(images=list(e.values())) for e in found]
        if not records:
            write_text("free\n")
            return ExitCode.NOT_FOUND
        write_text(_embeddings.dump_json(records, indent=2).decode() + "\n")
        return ExitCode.OK
    embedding = find_embedding(pattern, host, args.induced, pins)
    if embedding is None:
        write_text("free\n")
        return ExitCode.NOT_FOUND
    write_text(dump_model(EmbeddingRecord(images=list(embedding.values()))))
    return ExitCode.OK


def run_girth(args: argparse.Namespace) -> int:
    host = read_graph(args.host, args.input_format)
    measured = girth(host)
    lines = [f"girth: {'inf' if measured is None else measured}"]
    if args.max_length is not None:
        cycle = short_cycle(host, args.max_length)
        lines.append("cycle: " + ("none" if cycle is None else " ".join(str(v) for v in cycle)))
    write_text("\n".join(lines) + "\n")
    return ExitCode.OK


def run_highways(args: argparse.Namespace) -> int:
    host = read_graph(args.host, args.input_format)
    records = [
        HighwayRecord(vertices=list(hw.vertices), length=hw.length, end_degrees=hw.end_degrees, cyclic=hw.cyclic)
        for hw in highways(host)
    ]
    write_text(_highways.dump_json(records, indent=2).decode() + "\n")
    return ExitCode.OK


def run_decode(args: argparse.Namespace) -> int:
    host = read_graph(args.host, args.input_format)
    if args.family == "bridge":
        bits = decode_bridge_bits(host, need(args.n, "--n"))
    else:
        layout = TowerLayout.model_validate_json(read_text(need(args.layout, "--layout")))
        bits = decode_girth_bits(host, layout)
    write_text(bits + "\n")
    return ExitCode.OK


def run_fingerprint(args: argparse.Namespace) -> int:
    host = read_graph(args.host, args.input_format)
    write_text(dump_model(fingerprint(host, args.n)))
    return ExitCode.OK
