"""
Builder verbs: `gadget` emits one graph, `family` emits every member of a chain family.
"""
import argparse
import logging
from pathlib import Path
from typing import Optional, Tuple

from pydantic import BaseModel

from workbench.commands.common import ExitCode, bits_arg, dump_model, levels_arg, need, write_text
from workbench.services import bridge_gadgets, girth_gadgets
from workbench.services.errors import ParameterError
from workbench.services.graph_core import Graph, relabel
from workbench.services.serialization import GraphFormat, serialize
from workbench.services.settings import get_settings

logger = logging.getLogger(__name__)

GADGET_KINDS = (
    "complete", "path", "cycle", "bridge", "dead-end", "drive-through", "chain",
    "pentagon", "tower", "girth-chain",
)

_SUFFIX = {GraphFormat.JSON: ".json", GraphFormat.EDGELIST: ".edges", GraphFormat.DOT: ".dot"}


def register(subparsers) -> None:
    gadget = subparsers.add_parser("gadget", help="build one gadget")
    gadget.add_argument("--kind", required=True, choices=GADGET_KINDS)
    gadget.add_argument("--m", type=int, help="size of complete/path/cycle graphs")
    gadget.add_argument("--n", type=int, help="bridge parameter")
    gadget.add_argument("--k", type=int, help="pentagon side length")
    gadget.add_argument("--levels", type=levels_arg, default=0, help="tower height, or 'auto'")
    gadget.add_argument("--bits", type=bits_arg, default="")
    gadget.add_argument("--format", choices=[f.value for f in GraphFormat], default="json")
    gadget.add_argument("--output", help="output file (default: standard output)")
    gadget.add_argument("--layout", help="write the layout sidecar (chain and tower kinds)")
    gadget.add_argument("--relabel-seed", type=int, help="emit a role-free copy under this seed")
    gadget.set_defaults(handler=run_gadget)

    family = subparsers.add_parser("family", help="build every member of a chain family")
    family.add_argument("--type", required=True, choices=["bridge", "girth"])
    family.add_argument("--n", type=int)
    family.add_argument("--k", type=int)
    family.add_argument("--levels", type=levels_arg, default=None, help="tower height, or 'auto'")
    family.add_argument("--length", type=int, required=True)
    family.add_argument("--format", choices=[f.value for f in GraphFormat], default="json")
    family.add_argument("--output-dir", help="directory receiving one file per member")
    family.set_defaults(handler=run_family)


def _tower_levels(k: int, levels: Optional[int], count: int) -> int:
    if levels is not None:
        return levels
    return girth_gadgets.tower_height_for(k, count, get_settings().workbench_max_tower_levels)


def build_gadget(args: argparse.Namespace) -> Tuple[Graph, Optional[BaseModel]]:
    kind = args.kind
    if kind == "complete":
        return bridge_gadgets.complete_graph(need(args.m, "--m")), None
    if kind == "path":
        return bridge_gadgets.path_graph(need(args.m, "--m")), None
    if kind == "cycle":
        return bridge_gadgets.cycle_graph(need(args.m, "--m")), None
    if kind == "bridge":
        return bridge_gadgets.bridge(need(args.n, "--n")), None
    if kind == "dead-end":
        return bridge_gadgets.dead_end(need(args.n, "--n")), None
    if kind == "drive-through":
        return bridge_gadgets.drive_through_layout(need(args.n, "--n"))
    if kind == "chain":
        return bridge_gadgets.bridge_chain(need(args.n, "--n"), args.bits)
    k = need(args.k, "--k")
    if kind == "pentagon":
        return girth_gadgets.pentagon(k), None
    if kind == "tower":
        return girth_gadgets.pentagon_tower(k, _tower_levels(k, args.levels, 1))
    return girth_gadgets.girth_chain(k, _tower_levels(k, args.levels, len(args.bits) + 1), args.bits)


def run_gadget(args: argparse.Namespace) -> int:
    graph, layout = build_gadget(args)
    if args.relabel_seed is not None:
        graph = relabel(graph, args.relabel_seed)
    logger.info("Built %s: %d vertices, %d edges", args.kind, graph.vertex_count, graph.edge_count)
    write_text(serialize(graph, GraphFormat(args.format)), args.output)
    if args.layout:
        if layout is None:
            raise ParameterError(f"kind {args.kind} has no layout")
        write_text(dump_model(layout), args.layout)
    return ExitCode.OK


def run_family(args: argparse.Namespace) -> int:
    fmt = GraphFormat(args.format)
    out_dir = Path(args.output_dir) if args.output_dir else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    if args.type == "bridge":
        n = need(args.n, "--n")
        build = lambda bits: bridge_gadgets.bridge_chain(n, bits)[0]
    else:
        k = need(args.k, "--k")
        levels = _tower_levels(k, args.levels, args.length + 1)
        build = lambda bits: girth_gadgets.girth_chain(k, levels, bits)[0]

    lines = []
    for bits in bridge_gadgets.all_bitstrings(args.length):
        graph = build(bits)
        line = f"{bits or '-'} {graph.vertex_count} {graph.edge_count}"
        if out_dir is not None:
            target = out_dir / f"{args.type}_{bits or 'empty'}{_SUFFIX[fmt]}"
            target.write_text(serialize(graph, fmt), encoding="utf-8")
            line = f"{line} {target}"
        lines.append(line)
    write_text("\n".join(lines) + "\n")
    return ExitCode.OK
