"""
Builders for the bridge-free gadgets: bridges, dead ends, drive-throughs and chains.

Conventions:
- bridge(n) has leaves a, b on branch vertex c, the chain x_1..x_n, and leaves d, e on x_n.
- dead_end(n) is K_{n+3} with a path p_0..p_{n+1} hanging from its hub p_0.
- drive_through(n) is K_{n+2} with a dead end glued at each interior clique
  vertex and pendant exits l (on k_1) and r (on k_{n+2}).
- bridge_chain(n, bits) links a dead end and |bits|+1 drive-throughs; the
  m-th connecting highway has length n + 1 + bits[m].
"""
import itertools
import logging
from typing import List, Optional, Set, Tuple

from workbench.models.schemas import ChainLayout, DriveThroughLayout
from workbench.services.errors import ParameterError
from workbench.services.graph_core import Graph, GraphBuilder, Role, RoleKind

logger = logging.getLogger(__name__)


def validate_bits(bits: str) -> str:
    if any(ch not in "01" for ch in bits):
        raise ParameterError(f"bits must be a string over {{0,1}}, got {bits!r}")
    return bits


def _require(name: str, value: int, minimum: int) -> None:
    if value < minimum:
        raise ParameterError(f"{name} must be >= {minimum}, got {value}")


def all_bitstrings(length: int) -> List[str]:
    """All 2**length bit strings, lexicographic."""
    _require("length", length, 0)
    return ["".join(p) for p in itertools.product("01", repeat=length)]


def complete_graph(m: int) -> Graph:
    _require("m", m, 1)
    builder = GraphBuilder()
    ids = [builder.add_vertex(Role(RoleKind.CLIQUE, (i,))) for i in range(1, m + 1)]
    for u, v in itertools.combinations(ids, 2):
        builder.add_edge(u, v)
    return builder.finalize()


def path_graph(m: int) -> Graph:
    """P_m: the path p_0..p_m of length m."""
    _require("m", m, 1)
    builder = GraphBuilder()
    ids = [builder.add_vertex(Role(RoleKind.PATH, (j,))) for j in range(m + 1)]
    builder.add_path(ids)
    return builder.finalize()


def cycle_graph(m: int) -> Graph:
    _require("m", m, 3)
    builder = GraphBuilder()
    ids = [builder.add_vertex() for _ in range(m)]
    builder.add_path(ids + ids[:1])
    return builder.finalize()


def bridge(n: int) -> Graph:
    _require("n", n, 1)
    builder = GraphBuilder()
    a = builder.add_vertex(Role(RoleKind.BRIDGE_A))
    b = builder.add_vertex(Role(RoleKind.BRIDGE_B))
    c = builder.add_vertex(Role(RoleKind.BRIDGE_C))
    xs = [builder.add_vertex(Role(RoleKind.BRIDGE_X, (i,))) for i in range(1, n + 1)]
    d = builder.add_vertex(Role(RoleKind.BRIDGE_D))
    e = builder.add_vertex(Role(RoleKind.BRIDGE_E))
    builder.add_edge(a, c)
    builder.add_edge(b, c)
    builder.add_path([c] + xs)
    builder.add_edge(xs[-1], d)
    builder.add_edge(xs[-1], e)
    return builder.finalize()


def _attach_dead_end(builder: GraphBuilder, n: int, tag: Tuple[int, ...],
                     tip: Optional[int] = None, tip_role: Optional[Role] = None) -> List[int]:
    """
    Add a dead end to the builder and return its path p_0..p_{n+1}.

    When `tip` is given the dead end is freely adjoined to that existing
    vertex by identifying it with p_{n+1}.
    """
    template = GraphBuilder()
    clique = [template.add_vertex(Role(RoleKind.CLIQUE, tag + (i,))) for i in range(1, n + 3)]
    hub = template.add_vertex(Role(RoleKind.PATH, tag + (0,)))
    clique.append(hub)
    for u, v in itertools.combinations(clique, 2):
        template.add_edge(u, v)
    path = [hub] + [template.add_vertex(Role(RoleKind.PATH, tag + (j,))) for j in range(1, n + 1)]
    path.append(template.add_vertex(tip_role or Role(RoleKind.PATH, tag + (n + 1,))))
    template.add_path(path)

    glue = {} if tip is None else {path[-1]: tip}
    mapping = builder.embed(template.finalize(), glue)
    return [mapping[v] for v in path]


def _attach_drive_through(builder: GraphBuilder, n: int, m: int,
                          left: Optional[int] = None) -> DriveThroughLayout:
    clique = [builder.add_vertex(Role(RoleKind.CLIQUE, (m, i))) for i in range(1, n + 3)]
    for u, v in itertools.combinations(clique, 2):
        builder.add_edge(u, v)
    hubs = [_attach_dead_end(builder, n, (m, i), tip=clique[i - 1])[0] for i in range(2, n + 2)]
    if left is None:
        left = builder.add_vertex(Role(RoleKind.EXIT_LEFT, (m,)))
    right = builder.add_vertex(Role(RoleKind.EXIT_RIGHT, (m,)))
    builder.add_edge(left, clique[0])
    builder.add_edge(clique[-1], right)
    return DriveThroughLayout(n=n, clique=clique, dead_end_hubs=hubs, left_exit=left, right_exit=right)


def dead_end(n: int) -> Graph:
    _require("n", n, 1)
    builder = GraphBuilder()
    _attach_dead_end(builder, n, ())
    return builder.finalize()


def dead_end_tip(g: Graph, n: int) -> int:
    """The only vertex of a standalone dead end whose degree may grow."""
    return g.vertices_with(RoleKind.PATH, (n + 1,))[0]


def dead_end_exempt(n: int) -> Set[int]:
    return {dead_end_tip(dead_end(n), n)}


def drive_through_layout(n: int) -> Tuple[Graph, DriveThroughLayout]:
    _require("n", n, 1)
    builder = GraphBuilder()
    layout = _attach_drive_through(builder, n, 0)
    return builder.finalize(), layout


def drive_through(n: int) -> Graph:
    return drive_through_layout(n)[0]


def drive_through_exempt(n: int) -> Set[int]:
    """The exits l and r."""
    _, layout = drive_through_layout(n)
    return {layout.left_exit, layout.right_exit}


def bridge_chain(n: int, bits: str) -> Tuple[Graph, ChainLayout]:
    _require("n", n, 1)
    validate_bits(bits)
    builder = GraphBuilder()

    special = _attach_dead_end(builder, n, (), tip_role=Role(RoleKind.EXIT_LEFT, (0,)))
    left = special[-1]
    cliques: List[List[int]] = []
    lefts: List[int] = []
    rights: List[int] = []
    connectors: List[List[int]] = []

    for m in range(len(bits) + 1):
        block = _attach_drive_through(builder, n, m, left=left)
        cliques.append(block.clique)
        lefts.append(block.left_exit)
        rights.append(block.right_exit)
        if m == len(bits):
            break
        gap = n - 1 + int(bits[m])
        if gap == 0:
            # n = 1 with bit 0: r(m) doubles as l(m+1)
            left = block.right_exit
            connectors.append([block.right_exit])
            continue
        interior = [builder.add_vertex(Role(RoleKind.HIGHWAY, (m, j))) for j in range(1, gap)]
        left = builder.add_vertex(Role(RoleKind.EXIT_LEFT, (m + 1,)))
        hops = [block.right_exit] + interior + [left]
        builder.add_path(hops)
        connectors.append(hops)

    graph = builder.finalize()
    layout = ChainLayout(
        n=n,
        bits=bits,
        hub=special[0],
        special_highway=special + [cliques[0][0]],
        cliques=cliques,
        left_exits=lefts,
        right_exits=rights,
        connectors=connectors,
        terminal=rights[-1],
    )
    logger.debug("Built bridge chain n=%d bits=%r: %d vertices, %d edges",
                 n, bits, graph.vertex_count, graph.edge_count)
    return graph, layout


def chain_exempt(layout: ChainLayout) -> Set[int]:
    """The truncation frontier r(L) is the only vertex allowed to grow."""
    return {layout.terminal}
