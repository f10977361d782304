"""
Builders for the short-cycle-free gadgets: pentagons, towers, spread vertices, chains.

Tower ids: level 0 is pentagon(k) (corners 0..4, then the midpoints of side
i at 5 + i(k-1) + j - 1). Each further level adds only its 5(k-1)
midpoints, since its corners are glued onto midpoints of the level below.
"""
import logging
from collections import deque
from typing import Dict, List, Optional, Set, Tuple

from workbench.models.schemas import TowerLayout
from workbench.services.bridge_gadgets import validate_bits
from workbench.services.errors import CapacityError, ParameterError
from workbench.services.graph_core import Graph, GraphBuilder, Role, RoleKind

logger = logging.getLogger(__name__)


def _require_k(k: int) -> None:
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")


def glue_index(k: int) -> int:
    """Midpoint position j used for gluing the next level: floor((k+1)/2)."""
    return (k + 1) // 2


def _add_pentagon(builder: GraphBuilder, k: int, level: int,
                  corners: Optional[List[int]] = None) -> Tuple[List[int], List[List[int]]]:
    if corners is None:
        corners = [builder.add_vertex(Role(RoleKind.CORNER, (level, i))) for i in range(5)]
    sides = [
        [builder.add_vertex(Role(RoleKind.MIDPOINT, (level, i, j))) for j in range(1, k)]
        for i in range(5)
    ]
    for i in range(5):
        builder.add_path([corners[i]] + sides[i] + [corners[(i + 1) % 5]])
    return corners, sides


def pentagon(k: int) -> Graph:
    """S_k: a 5k-cycle with corners x_0..x_4 spaced k apart."""
    _require_k(k)
    builder = GraphBuilder()
    _add_pentagon(builder, k, 0)
    return builder.finalize()


def _build_tower(k: int, levels: int) -> Tuple[GraphBuilder, TowerLayout]:
    _require_k(k)
    if levels < 0:
        raise ParameterError(f"levels must be >= 0, got {levels}")
    builder = GraphBuilder()
    corners, sides = _add_pentagon(builder, k, 0)
    all_corners = [corners]
    all_sides = [sides]
    j = glue_index(k)
    for level in range(1, levels + 1):
        below = all_sides[-1]
        glued = [below[(2 * i) % 5][j - 1] for i in range(5)]
        corners, sides = _add_pentagon(builder, k, level, corners=glued)
        all_corners.append(corners)
        all_sides.append(sides)
    layout = TowerLayout(
        k=k,
        levels=levels,
        tower_size=builder.vertex_count,
        corners=all_corners,
        midpoints=all_sides,
    )
    return builder, layout


def pentagon_tower(k: int, levels: int) -> Tuple[Graph, TowerLayout]:
    builder, layout = _build_tower(k, levels)
    graph = builder.finalize()
    logger.debug("Built pentagon tower k=%d levels=%d: %d vertices", k, levels, graph.vertex_count)
    return graph, layout


def _bfs(adjacency: List[Set[int]], source: int) -> Dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in sorted(adjacency[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def spread_vertices(tower: Graph, k: int, count: int) -> List[int]:
    """
    Greedy spread selection starting at x^0_0 (id 0).

    v_{m+1} is the first vertex in BFS order from v_m that is not yet chosen
    and lies at distance >= 2k+1 from v_m in the tower plus the links
    v_0v_1, ..., v_{m-1}v_m. Any chain over these vertices therefore keeps
    girth > 2k.
    """
    _require_k(k)
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    if tower.vertex_count == 0:
        raise CapacityError(count, 0, "empty tower")
    need = 2 * k + 1
    plain = [set(nbrs) for nbrs in tower.adjacency]
    augmented = [set(nbrs) for nbrs in tower.adjacency]
    chosen = [0]
    while len(chosen) < count:
        current = chosen[-1]
        dist = _bfs(augmented, current)
        order = _bfs(plain, current)
        pick = next((w for w in order if w not in chosen and dist[w] >= need), None)
        if pick is None:
            raise CapacityError(count, len(chosen), f"no vertex at distance >= {need} from {current}")
        augmented[current].add(pick)
        augmented[pick].add(current)
        chosen.append(pick)
    return chosen


def tower_height_for(k: int, count: int, max_levels: int = 64) -> int:
    """Least tower height whose spread selection supplies `count` vertices."""
    best = 0
    for levels in range(max_levels + 1):
        tower, _ = pentagon_tower(k, levels)
        try:
            spread_vertices(tower, k, count)
        except CapacityError as exc:
            best = max(best, exc.achieved)
            continue
        logger.info("Tower height %d supplies %d spread vertices for k=%d", levels, count, k)
        return levels
    raise CapacityError(count, best, f"no tower up to {max_levels} levels suffices")


def girth_chain(k: int, levels: int, bits: str) -> Tuple[Graph, TowerLayout]:
    """
    Tower plus one link per bit between consecutive spread vertices:
    bit 1 is a direct edge, bit 0 a fresh helper u(m) adjacent to both.
    """
    validate_bits(bits)
    tower, layout = pentagon_tower(k, levels)
    spread = spread_vertices(tower, k, len(bits) + 1)
    builder = GraphBuilder.from_graph(tower)
    helpers: Dict[int, int] = {}
    for m, bit in enumerate(bits):
        a, b = spread[m], spread[m + 1]
        if bit == "1":
            builder.add_edge(a, b)
        else:
            u = builder.add_vertex(Role(RoleKind.HELPER, (m,)))
            builder.add_path([a, u, b])
            helpers[m] = u
    for m, v in enumerate(spread):
        builder.set_role(v, Role(RoleKind.SPREAD, (m,)))
    graph = builder.finalize()
    layout = layout.model_copy(update={"spread": spread, "helpers": helpers, "bits": bits})
    return graph, layout
