"""
Degree-rigidity sweeps and pentagon corner rigidity.

A sweep adds every missing edge and one fresh pendant per vertex, one at a
time, and asks whether the augmented graph now contains bridge(n). Since the
input is bridge-free, any new copy must use the added edge, so each check
only searches embeddings through that edge.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence, Tuple

from workbench.models.schemas import AugmentationKind, AugmentationOutcome, RigidityReport, Verdict
from workbench.services.errors import GirthPreconditionError, NotBridgeFreeError, ParameterError, PinError
from workbench.services.girth_gadgets import pentagon
from workbench.services.graph_core import Graph
from workbench.services.search import enumerate_embeddings, find_bridge, find_bridge_through_edge, girth

logger = logging.getLogger(__name__)

Augmentation = Tuple[AugmentationKind, int, int]


def augmentations(g: Graph) -> List[Augmentation]:
    """All non-edges (u < v, lexicographic), then one pendant per vertex."""
    result: List[Augmentation] = []
    for u in g.vertices():
        for v in range(u + 1, g.vertex_count):
            if not g.has_edge(u, v):
                result.append((AugmentationKind.EDGE, u, v))
    fresh = g.vertex_count
    for v in g.vertices():
        result.append((AugmentationKind.PENDANT, v, fresh))
    return result


def _witness(task: Tuple[Graph, int, Augmentation]) -> Optional[List[int]]:
    g, n, (kind, u, v) = task
    augmented = g.with_edge(u, v) if kind == AugmentationKind.EDGE else g.with_pendant(u)
    found = find_bridge_through_edge(augmented, n, u, v)
    return None if found is None else [found[p] for p in sorted(found)]


def augmentation_sweep(g: Graph, n: int, exempt: Iterable[int], gadget: str = "graph",
                       jobs: int = 1) -> RigidityReport:
    """
    Check that every augmentation touching a non-exempt vertex creates a bridge(n).

    Raises:
        NotBridgeFreeError: If g already contains bridge(n)
    """
    exempt_set = set(exempt)
    for v in exempt_set:
        g.neighbors(v)
    existing = find_bridge(g, n)
    if existing is not None:
        raise NotBridgeFreeError(n, [existing[p] for p in sorted(existing)])

    pending = augmentations(g)
    tasks = [(g, n, aug) for aug in pending]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            witnesses = list(pool.map(_witness, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        witnesses = [_witness(task) for task in tasks]

    outcomes: List[AugmentationOutcome] = []
    unwitnessed: List[Tuple[int, int]] = []
    for (kind, u, v), witness in zip(pending, witnesses):
        touched = {u} if kind == AugmentationKind.PENDANT else {u, v}
        protected = bool(touched - exempt_set)
        outcomes.append(AugmentationOutcome(kind=kind, endpoints=(u, v), protected=protected, witness=witness))
        if protected and witness is None:
            unwitnessed.append((u, v))
        logger.debug("Augmentation %s (%d,%d): %s", kind.value, u, v, "witness" if witness else "safe")

    verdict = Verdict.PASS if not unwitnessed else Verdict.FAIL
    report = RigidityReport(
        gadget=gadget,
        n=n,
        exempt=sorted(exempt_set),
        checked=len(outcomes),
        witnessed=sum(1 for o in outcomes if o.witness is not None),
        outcomes=outcomes,
        unwitnessed_protected=unwitnessed,
        verdict=verdict,
    )
    logger.info("Rigidity sweep of %s (n=%d): %d augmentations, %d witnessed, verdict %s",
                gadget, n, report.checked, report.witnessed, verdict.value)
    return report


def safe_pendant(g: Graph, n: int, v: int) -> bool:
    """True iff g plus a fresh pendant at v still contains no bridge(n)."""
    g.neighbors(v)
    return find_bridge(g.with_pendant(v), n) is None


def corner_rigidity(k: int, host: Graph, pins: Sequence[int], limit: int = 2,
                    require_girth: bool = True) -> int:
    """
    Number of embeddings of pentagon(k) sending corner x_i to pins[i], capped at limit.

    Raises:
        GirthPreconditionError: If require_girth and the host has a cycle of length <= 2k
    """
    if len(pins) != 5:
        raise ParameterError(f"expected 5 corner pins, got {len(pins)}")
    if len(set(pins)) != 5:
        raise PinError("corner pins must be distinct")
    if require_girth:
        measured = girth(host)
        if measured is not None and measured <= 2 * k:
            raise GirthPreconditionError(measured, 2 * k)
    pattern = pentagon(k)
    count = len(enumerate_embeddings(pattern, host, pins=dict(enumerate(pins)), limit=limit))
    logger.debug("Corner rigidity k=%d pins=%s: %d embedding(s)", k, list(pins), count)
    return count
