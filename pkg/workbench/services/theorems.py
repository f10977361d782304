"""
End-to-end family reports for the two non-universality arguments.

The bridge report builds all 2^L chains and checks freeness, decoding,
fingerprint distinctness and a full rigidity sweep of the first members.
The girth report builds all 2^L chains over one tower and checks girth,
decoding, corner rigidity and that every pair of distinct members merges
into a triangle.
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

from workbench.models.schemas import (
    CheckResult,
    FamilyKind,
    FamilyReport,
    MemberResult,
    MergeWitness,
    TowerLayout,
    Verdict,
)
from workbench.services.bridge_gadgets import all_bitstrings, bridge_chain, chain_exempt, validate_bits
from workbench.services.codec import decode_bridge_bits, decode_girth_bits, fingerprint
from workbench.services.errors import ParameterError, WorkbenchError
from workbench.services.girth_gadgets import girth_chain, pentagon_tower, spread_vertices, tower_height_for
from workbench.services.graph_core import Graph, GraphBuilder, Role, RoleKind, relabel
from workbench.services.rigidity import augmentation_sweep, corner_rigidity
from workbench.services.search import find_bridge, find_embedding, girth
from workbench.services.settings import get_settings

logger = logging.getLogger(__name__)


def _verdict(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _bridge_member(task: Tuple[int, int, str]) -> MemberResult:
    n, seed, bits = task
    g, _ = bridge_chain(n, bits)
    result = MemberResult(
        bits=bits,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        forbidden_free=find_bridge(g, n) is None,
    )
    try:
        result.decoded = decode_bridge_bits(relabel(g, seed), n)
        result.fingerprint = fingerprint(g, n)
    except WorkbenchError as exc:
        result.error = str(exc)
    result.round_trip = result.decoded == bits
    logger.debug("Member %r: free=%s decoded=%r", bits, result.forbidden_free, result.decoded)
    return result


def stretch_checks(n: int, length: int) -> List[CheckResult]:
    """
    For distinct members with equal vertex and edge counts, no member embeds
    into another (any such embedding would be an isomorphism).
    """
    members = [(bits, bridge_chain(n, bits)[0]) for bits in all_bitstrings(length)]
    checks = []
    for (a, ga), (b, gb) in itertools.permutations(members, 2):
        if (ga.vertex_count, ga.edge_count) != (gb.vertex_count, gb.edge_count):
            continue
        found = find_embedding(ga, gb)
        checks.append(CheckResult(
            name=f"stretch {a or '-'} -> {b or '-'}",
            verdict=_verdict(found is None),
            gating=False,
        ))
    return checks


def bridge_theorem_report(n: int, length: int, jobs: Optional[int] = None,
                          rigidity_members: Optional[int] = None, stretch: bool = False) -> FamilyReport:
    """
    Args:
        rigidity_members: How many family members, in lexicographic order, get a
            full rigidity sweep (default from settings)
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    settings = get_settings()
    jobs = jobs or settings.workbench_jobs
    swept = settings.workbench_rigidity_members if rigidity_members is None else rigidity_members
    strings = all_bitstrings(length)

    members = _map(_bridge_member, [(n, seed, bits) for seed, bits in enumerate(strings)], jobs)
    keys = {m.fingerprint.key() for m in members if m.fingerprint is not None}

    checks: List[CheckResult] = []
    for bits in strings[:swept]:
        g, layout = bridge_chain(n, bits)
        report = augmentation_sweep(g, n, chain_exempt(layout), gadget=f"chain({n},{bits!r})", jobs=jobs)
        checks.append(CheckResult(
            name=f"rigidity chain {bits or '-'}",
            verdict=report.verdict,
            detail=f"{report.witnessed}/{report.checked} augmentations witnessed",
        ))
    if stretch:
        checks.extend(stretch_checks(n, length))

    ok = (
        all(m.forbidden_free and m.round_trip for m in members)
        and len(keys) == 2 ** length
        and all(c.verdict == Verdict.PASS for c in checks if c.gating)
    )
    report = FamilyReport(
        family=FamilyKind.BRIDGE,
        n=n,
        length=length,
        members=members,
        distinct_count=len(keys),
        expected_distinct=2 ** length,
        checks=checks,
        verdict=_verdict(ok),
    )
    logger.info("Bridge family n=%d L=%d: %d distinct of %d, verdict %s",
                n, length, len(keys), 2 ** length, report.verdict.value)
    return report


def merge_chains(k: int, levels: int, bits_a: str, bits_b: str) -> Tuple[Graph, TowerLayout, dict]:
    """
    Union of girth_chain(k, levels, bits_a) and girth_chain(k, levels, bits_b)
    over one shared tower. Where both strings have a 0 they share the helper.

    Returns:
        Tuple of (union graph, tower layout with spread, {m: helper id})
    """
    validate_bits(bits_a)
    validate_bits(bits_b)
    if len(bits_a) != len(bits_b):
        raise ParameterError(f"bit strings differ in length: {len(bits_a)} vs {len(bits_b)}")
    tower, layout = pentagon_tower(k, levels)
    spread = spread_vertices(tower, k, len(bits_a) + 1)
    builder = GraphBuilder.from_graph(tower)
    helpers = {}
    for m, (a, b) in enumerate(zip(bits_a, bits_b)):
        v, w = spread[m], spread[m + 1]
        if "1" in (a, b):
            builder.add_edge(v, w)
        if "0" in (a, b):
            u = builder.add_vertex(Role(RoleKind.HELPER, (m,)))
            builder.add_path([v, u, w])
            helpers[m] = u
    layout = layout.model_copy(update={"spread": spread, "helpers": helpers})
    return builder.finalize(), layout, helpers


def triangle_merge(k: int, levels: int, bits_a: str, bits_b: str) -> Optional[MergeWitness]:
    """The triangle (v_m, u(m), v_{m+1}) at the first position where the strings differ."""
    union, layout, helpers = merge_chains(k, levels, bits_a, bits_b)
    for m, (a, b) in enumerate(zip(bits_a, bits_b)):
        if a == b:
            continue
        cycle = [layout.spread[m], helpers[m], layout.spread[m + 1]]
        if not all(union.has_edge(x, y) for x, y in zip(cycle, cycle[1:] + cycle[:1])):
            raise WorkbenchError(f"merge at position {m} did not close a triangle")
        return MergeWitness(position=m, cycle=cycle)
    return None


def _girth_exceeds(g: Graph, k: int) -> bool:
    measured = girth(g)
    return measured is None or measured > 2 * k


def _girth_member(task: Tuple[int, int, str]) -> MemberResult:
    k, levels, bits = task
    g, layout = girth_chain(k, levels, bits)
    result = MemberResult(
        bits=bits,
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        forbidden_free=_girth_exceeds(g, k),
        girth=girth(g),
    )
    try:
        result.decoded = decode_girth_bits(g, layout)
        if result.forbidden_free:
            result.corner_counts = [corner_rigidity(k, g, pins) for pins in layout.corners]
        else:
            logger.warning("Member %r has girth %s <= %d; skipping corner rigidity", bits, result.girth, 2 * k)
    except WorkbenchError as exc:
        result.error = str(exc)
    result.round_trip = result.decoded == bits
    return result


def girth_theorem_report(k: int, levels: Optional[int], length: int,
                         jobs: Optional[int] = None) -> FamilyReport:
    """
    Raises:
        CapacityError: If the tower cannot carry 2^length members
    """
    settings = get_settings()
    jobs = jobs or settings.workbench_jobs
    if levels is None:
        levels = tower_height_for(k, length + 1, settings.workbench_max_tower_levels)
    tower, _ = pentagon_tower(k, levels)
    spread_vertices(tower, k, length + 1)
    strings = all_bitstrings(length)

    members = _map(_girth_member, [(k, levels, bits) for bits in strings], jobs)
    distinct = {m.decoded for m in members if m.decoded is not None}

    pairs = list(itertools.combinations(strings, 2))
    merged = sum(1 for a, b in pairs if triangle_merge(k, levels, a, b) is not None)
    equal_ok = all(
        triangle_merge(k, levels, a, a) is None and _girth_exceeds(merge_chains(k, levels, a, a)[0], k)
        for a in strings
    )
    rigid = all(count <= 1 for m in members for count in m.corner_counts)
    checks = [
        CheckResult(name="triangle-merge", verdict=_verdict(merged == len(pairs)),
                    detail=f"{merged}/{len(pairs)} differing pairs close a triangle"),
        CheckResult(name="equal-merge", verdict=_verdict(equal_ok),
                    detail="equal strings merge without a triangle"),
        CheckResult(name="corner-rigidity", verdict=_verdict(rigid),
                    detail="at most one pentagon per corner pin set"),
    ]
    ok = (
        all(m.forbidden_free and m.round_trip for m in members)
        and len(distinct) == 2 ** length
        and all(c.verdict == Verdict.PASS for c in checks)
    )
    report = FamilyReport(
        family=FamilyKind.GIRTH,
        k=k,
        length=length,
        levels=levels,
        members=members,
        distinct_count=len(distinct),
        expected_distinct=2 ** length,
        checks=checks,
        verdict=_verdict(ok),
    )
    logger.info("Girth family k=%d M=%d L=%d: verdict %s", k, levels, length, report.verdict.value)
    return report
