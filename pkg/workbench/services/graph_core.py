"""
Simple undirected graphs with role-tagged vertices.

Graphs are built through a GraphBuilder and are immutable once finalized.
Vertex ids are dense (0..V-1) and every neighbor sequence is sorted, so two
builds with the same parameters serialize to identical bytes.
"""
import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from workbench.services.errors import GraphError


class RoleKind(str, Enum):
    """Which gadget symbol a vertex instantiates."""
    CLIQUE = "clique-k"
    PATH = "path-p"
    BRIDGE_A = "bridge-a"
    BRIDGE_B = "bridge-b"
    BRIDGE_C = "bridge-c"
    BRIDGE_X = "bridge-x"
    BRIDGE_D = "bridge-d"
    BRIDGE_E = "bridge-e"
    EXIT_LEFT = "exit-left"
    EXIT_RIGHT = "exit-right"
    HIGHWAY = "highway-h"
    CORNER = "corner-x"
    MIDPOINT = "midpoint-y"
    SPREAD = "spread-v"
    HELPER = "helper-u"
    PLAIN = "plain"


@dataclass(frozen=True)
class Role:
    """Role tag: a kind plus up to three indices (instance m, position i, position j)."""
    kind: RoleKind = RoleKind.PLAIN
    ix: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.ix) > 3:
            raise GraphError(f"role {self.kind.value} carries {len(self.ix)} indices (max 3)")

    def __str__(self) -> str:
        if not self.ix:
            return self.kind.value
        return f"{self.kind.value}({','.join(str(i) for i in self.ix)})"


PLAIN = Role()


@dataclass(frozen=True)
class Graph:
    """Finalized simple graph. Build instances with GraphBuilder."""
    adjacency: Tuple[Tuple[int, ...], ...]
    roles: Tuple[Role, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @cached_property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.neighbor_sets[u]

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def vertices_with(self, kind: RoleKind, ix: Optional[Tuple[int, ...]] = None) -> List[int]:
        """Ids whose role has the given kind (and indices, when given)."""
        return [
            v for v, role in enumerate(self.roles)
            if role.kind == kind and (ix is None or role.ix == ix)
        ]

    def with_edge(self, u: int, v: int) -> "Graph":
        builder = GraphBuilder.from_graph(self)
        builder.add_edge(u, v)
        return builder.finalize()

    def with_pendant(self, v: int) -> "Graph":
        builder = GraphBuilder.from_graph(self)
        fresh = builder.add_vertex()
        builder.add_edge(v, fresh)
        return builder.finalize()

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        for v, role in enumerate(self.roles):
            g.add_node(v, role=str(role))
        g.add_edges_from(self.edges())
        return g

    def _check(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"unknown vertex id {v} (graph has {self.vertex_count} vertices)")


class GraphBuilder:
    """Single-owner mutable construction state for a Graph."""

    def __init__(self):
        self._adj: List[set] = []
        self._roles: List[Role] = []
        self._finalized = False

    @classmethod
    def from_graph(cls, graph: Graph) -> "GraphBuilder":
        builder = cls()
        builder._adj = [set(nbrs) for nbrs in graph.adjacency]
        builder._roles = list(graph.roles)
        return builder

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    def add_vertex(self, role: Role = PLAIN) -> int:
        self._check_open()
        self._adj.append(set())
        self._roles.append(role)
        return len(self._adj) - 1

    def add_edge(self, u: int, v: int) -> None:
        self._check_open()
        self._check(u)
        self._check(v)
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def add_path(self, ids: Sequence[int]) -> None:
        for u, v in zip(ids, ids[1:]):
            self.add_edge(u, v)

    def role(self, v: int) -> Role:
        self._check(v)
        return self._roles[v]

    def set_role(self, v: int, role: Role) -> None:
        self._check_open()
        self._check(v)
        self._roles[v] = role

    def embed(self, graph: Graph, glue: Optional[Mapping[int, int]] = None) -> List[int]:
        """
        Copy `graph` into the builder, gluing selected copy vertices onto
        existing builder vertices.

        Glued vertices keep the role they already have in the builder.

        Returns:
            List mapping each vertex of `graph` to its builder id
        """
        glue = dict(glue or {})
        if len(set(glue.values())) != len(glue):
            raise GraphError("glue map must be injective")
        for target in glue.values():
            self._check(target)
        mapping: List[int] = []
        for v in graph.vertices():
            mapping.append(glue[v] if v in glue else self.add_vertex(graph.roles[v]))
        for u, v in graph.edges():
            self.add_edge(mapping[u], mapping[v])
        return mapping

    def finalize(self) -> Graph:
        self._check_open()
        self._finalized = True
        return Graph(
            adjacency=tuple(tuple(sorted(nbrs)) for nbrs in self._adj),
            roles=tuple(self._roles),
        )

    def _check(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise GraphError(f"unknown vertex id {v} (builder has {len(self._adj)} vertices)")

    def _check_open(self) -> None:
        if self._finalized:
            raise GraphError("builder already finalized")


def graph_from_edges(vertex_count: int, edges: Iterable[Tuple[int, int]],
                     roles: Optional[Sequence[Role]] = None) -> Graph:
    builder = GraphBuilder()
    for v in range(vertex_count):
        builder.add_vertex(roles[v] if roles is not None else PLAIN)
    for u, v in edges:
        builder.add_edge(u, v)
    return builder.finalize()


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g followed by h; h's ids are shifted by g.vertex_count."""
    builder = GraphBuilder.from_graph(g)
    builder.embed(h)
    return builder.finalize()


def identify(g: Graph, keep: int, drop: int) -> Graph:
    """
    Merge `drop` into `keep`.

    drop's neighbors become keep's, duplicate edges collapse, ids above drop
    shift down by one and keep's role is retained.
    """
    g._check(keep)
    g._check(drop)
    if keep == drop:
        raise GraphError(f"cannot identify vertex {keep} with itself")
    if g.has_edge(keep, drop):
        raise GraphError(f"cannot identify adjacent vertices {keep} and {drop}")

    def new_id(v: int) -> int:
        v = keep if v == drop else v
        return v - 1 if v > drop else v

    roles = [role for v, role in enumerate(g.roles) if v != drop]
    edges = {tuple(sorted((new_id(u), new_id(v)))) for u, v in g.edges()}
    return graph_from_edges(g.vertex_count - 1, sorted(edges), roles)


def relabel(g: Graph, seed: int) -> Graph:
    """Isomorphic copy under a seeded permutation; every role becomes plain."""
    permutation = list(g.vertices())
    random.Random(seed).shuffle(permutation)
    edges = [(permutation[u], permutation[v]) for u, v in g.edges()]
    return graph_from_edges(g.vertex_count, edges)


def degree_multiset(g: Graph) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for d in g.degrees():
        counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))
