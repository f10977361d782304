"""
Verification verbs: rigidity sweeps, the triangle merge demo, and full family reports.
"""
import argparse
from typing import Set, Tuple

from workbench.commands.common import ExitCode, bits_arg, dump_model, levels_arg, need, parse_ids, read_graph, write_text
from workbench.models.schemas import Verdict
from workbench.services import bridge_gadgets
from workbench.services.errors import ParameterError
from workbench.services.girth_gadgets import tower_height_for
from workbench.services.graph_core import Graph
from workbench.services.rigidity import augmentation_sweep
from workbench.services.search import girth
from workbench.services.settings import get_settings
from workbench.services.theorems import bridge_theorem_report, girth_theorem_report, merge_chains, triangle_merge


def register(subparsers) -> None:
    rigidity = subparsers.add_parser("rigidity", help="single-augmentation rigidity sweep")
    rigidity.add_argument("--kind", choices=["dead-end", "drive-through", "chain"])
    rigidity.add_argument("--host", help="sweep this graph instead of a built gadget")
    rigidity.add_argument("--input-format", choices=["json", "edgelist"])
    rigidity.add_argument("--exempt", help="comma-separated exempt ids (with --host)")
    rigidity.add_argument("--n", type=int, required=True)
    rigidity.add_argument("--bits", type=bits_arg, default="")
    rigidity.add_argument("--jobs", type=int)
    rigidity.add_argument("--output", help="report file (default: standard output)")
    rigidity.set_defaults(handler=run_rigidity)

    merge = subparsers.add_parser("merge-demo", help="merge two girth chains over one tower")
    merge.add_argument("--k", type=int, required=True)
    merge.add_argument("--levels", type=levels_arg, default=None, help="tower height, or 'auto'")
    merge.add_argument("--a", type=bits_arg, required=True)
    merge.add_argument("--b", type=bits_arg, required=True)
    merge.set_defaults(handler=run_merge_demo)

    demo = subparsers.add_parser("demo", help="end-to-end family report")
    demo.add_argument("--type", required=True, choices=["bridge", "girth"])
    demo.add_argument("--n", type=int)
    demo.add_argument("--k", type=int)
    demo.add_argument("--levels", type=levels_arg, default=None, help="tower height, or 'auto'")
    demo.add_argument("--length", type=int, required=True)
    demo.add_argument("--jobs", type=int)
    demo.add_argument("--stretch", action="store_true", help="also run the non-gating stretch check")
    demo.add_argument("--output", help="report file (default: standard output)")
    demo.set_defaults(handler=run_demo)


def designated_gadget(kind: str, n: int, bits: str) -> Tuple[Graph, Set[int]]:
    """Build a gadget together with the vertices whose degree may grow."""
    if kind == "dead-end":
        return bridge_gadgets.dead_end(n), bridge_gadgets.dead_end_exempt(n)
    if kind == "drive-through":
        return bridge_gadgets.drive_through(n), bridge_gadgets.drive_through_exempt(n)
    g, layout = bridge_gadgets.bridge_chain(n, bits)
    return g, bridge_gadgets.chain_exempt(layout)


def run_rigidity(args: argparse.Namespace) -> int:
    if (args.kind is None) == (args.host is None):
        raise ParameterError("give exactly one of --kind or --host")
    if args.host is not None:
        graph = read_graph(args.host, args.input_format)
        exempt = set(parse_ids(args.exempt))
        name = args.host
    else:
        graph, exempt = designated_gadget(args.kind, args.n, args.bits)
        name = args.kind if args.kind != "chain" else f"chain {args.bits or '-'}"
    report = augmentation_sweep(graph, args.n, exempt, gadget=name, jobs=args.jobs or get_settings().workbench_jobs)
    write_text(dump_model(report), args.output)
    return ExitCode.OK if report.verdict == Verdict.PASS else ExitCode.FAILED


def run_merge_demo(args: argparse.Namespace) -> int:
    levels = args.levels
    if levels is None:
        levels = tower_height_for(args.k, len(args.a) + 1, get_settings().workbench_max_tower_levels)
    witness = triangle_merge(args.k, levels, args.a, args.b)
    union, _, _ = merge_chains(args.k, levels, args.a, args.b)
    measured = girth(union)
    lines = [
        f"levels: {levels}",
        f"union girth: {'inf' if measured is None else measured}",
        "triangle: " + ("none" if witness is None else f"position {witness.position} cycle "
                        + " ".join(str(v) for v in witness.cycle)),
    ]
    write_text("\n".join(lines) + "\n")
    if args.a != args.b:
        return ExitCode.OK if witness is not None else ExitCode.FAILED
    return ExitCode.OK if measured is None or measured > 2 * args.k else ExitCode.FAILED


def run_demo(args: argparse.Namespace) -> int:
    if args.type == "bridge":
        report = bridge_theorem_report(need(args.n, "--n"), args.length, jobs=args.jobs, stretch=args.stretch)
    else:
        report = girth_theorem_report(need(args.k, "--k"), args.levels, args.length, jobs=args.jobs)
    write_text(dump_model(report), args.output)
    return ExitCode.OK if report.verdict == Verdict.PASS else ExitCode.FAILED
