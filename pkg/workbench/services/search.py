"""
Verification kernels: subgraph search with pinning, girth and short cycles,
and the highway decomposition.

The subgraph matcher is a plain backtracking search. Pattern vertices are
placed pins first, then connectivity-first (most already-placed neighbors,
ties by higher degree, then lower id); host candidates are tried in
ascending id order, so the first embedding found is reproducible.
"""
import logging
from collections import deque
from dataclasses import dataclass
from itertools import islice
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from workbench.services.bridge_gadgets import bridge
from workbench.services.errors import GraphError, ParameterError, PinError
from workbench.services.graph_core import Graph

logger = logging.getLogger(__name__)

Embedding = Dict[int, int]


class SubgraphMatcher:
    """
    Enumerates embeddings of `pattern` into `host`.

    Non-induced by default: pattern edges must map to host edges. With
    induced=True, pattern non-edges must also map to host non-edges.
    """

    def __init__(self, pattern: Graph, host: Graph, induced: bool = False,
                 pins: Optional[Mapping[int, int]] = None):
        self.pattern = pattern
        self.host = host
        self.induced = induced
        self.pins = dict(pins or {})
        self._validate_pins()
        self._order = self._plan()
        self._position = {v: i for i, v in enumerate(self._order)}
        self._anchor = self._anchors()

    def _validate_pins(self) -> None:
        for p, h in self.pins.items():
            if not 0 <= p < self.pattern.vertex_count:
                raise PinError(f"pinned pattern vertex {p} does not exist")
            if not 0 <= h < self.host.vertex_count:
                raise PinError(f"pin target {h} does not exist in host")
        if len(set(self.pins.values())) != len(self.pins):
            raise PinError("pins are not injective")
        for p, q in self.pattern.edges():
            if p in self.pins and q in self.pins and not self.host.has_edge(self.pins[p], self.pins[q]):
                raise PinError(f"pattern edge ({p},{q}) pinned onto host non-edge "
                               f"({self.pins[p]},{self.pins[q]})")
        if self.induced:
            for p in self.pins:
                for q in self.pins:
                    if p < q and not self.pattern.has_edge(p, q) and self.host.has_edge(self.pins[p], self.pins[q]):
                        raise PinError(f"pattern non-edge ({p},{q}) pinned onto a host edge")

    def _plan(self) -> List[int]:
        degrees = self.pattern.degrees()
        order = sorted(self.pins)
        placed = set(order)
        linked = {v: 0 for v in self.pattern.vertices()}
        for v in order:
            for w in self.pattern.neighbors(v):
                linked[w] += 1
        while len(order) < self.pattern.vertex_count:
            v = min(
                (w for w in self.pattern.vertices() if w not in placed),
                key=lambda w: (-linked[w], -degrees[w], w),
            )
            order.append(v)
            placed.add(v)
            for w in self.pattern.neighbors(v):
                linked[w] += 1
        return order

    def _anchors(self) -> Dict[int, Optional[int]]:
        anchors: Dict[int, Optional[int]] = {}
        for v in self._order:
            earlier = [w for w in self.pattern.neighbors(v) if self._position[w] < self._position[v]]
            anchors[v] = min(earlier, key=self._position.__getitem__) if earlier else None
        return anchors

    def __iter__(self) -> Iterator[Embedding]:
        if self.pattern.vertex_count > self.host.vertex_count:
            return iter(())
        if self.pattern.edge_count > self.host.edge_count:
            return iter(())
        return self._extend(0, {}, set())

    def _candidates(self, v: int, mapping: Embedding):
        if v in self.pins:
            return (self.pins[v],)
        anchor = self._anchor[v]
        if anchor is None:
            return self.host.vertices()
        return self.host.adjacency[mapping[anchor]]

    def _feasible(self, v: int, h: int, depth: int, mapping: Embedding, used: set) -> bool:
        if h in used:
            return False
        host_nbrs = self.host.neighbor_sets[h]
        pattern_nbrs = self.pattern.adjacency[v]
        if len(host_nbrs) < len(pattern_nbrs):
            return False
        later = 0
        for w in pattern_nbrs:
            if w in mapping:
                if mapping[w] not in host_nbrs:
                    return False
            else:
                later += 1
        if self.induced:
            pattern_set = self.pattern.neighbor_sets[v]
            for w, image in mapping.items():
                if w not in pattern_set and image in host_nbrs:
                    return False
        # look-ahead: every placed vertex keeps room for its unplaced neighbors
        if later > len(host_nbrs - used):
            return False
        for w in pattern_nbrs:
            if w in mapping:
                remaining = sum(1 for x in self.pattern.adjacency[w] if self._position[x] > depth)
                if remaining and remaining > len(self.host.neighbor_sets[mapping[w]] - used - {h}):
                    return False
        return True

    def _extend(self, depth: int, mapping: Embedding, used: set) -> Iterator[Embedding]:
        if depth == len(self._order):
            yield dict(sorted(mapping.items()))
            return
        v = self._order[depth]
        for h in self._candidates(v, mapping):
            if not self._feasible(v, h, depth, mapping, used):
                continue
            mapping[v] = h
            used.add(h)
            yield from self._extend(depth + 1, mapping, used)
            del mapping[v]
            used.discard(h)


def find_embedding(pattern: Graph, host: Graph, induced: bool = False,
                   pins: Optional[Mapping[int, int]] = None) -> Optional[Embedding]:
    return next(iter(SubgraphMatcher(pattern, host, induced, pins)), None)


def enumerate_embeddings(pattern: Graph, host: Graph, induced: bool = False,
                         pins: Optional[Mapping[int, int]] = None, limit: int = 1000) -> List[Embedding]:
    if limit < 1:
        raise ParameterError(f"limit must be >= 1, got {limit}")
    return list(islice(SubgraphMatcher(pattern, host, induced, pins), limit))


def find_embedding_through_edge(pattern: Graph, host: Graph, u: int, v: int,
                                induced: bool = False) -> Optional[Embedding]:
    """
    An embedding whose image uses host edge uv, found by pinning each pattern
    edge onto uv in both orientations.
    """
    if not host.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge of the host")
    for p, q in pattern.edges():
        for a, b in ((u, v), (v, u)):
            try:
                found = find_embedding(pattern, host, induced, {p: a, q: b})
            except PinError:
                continue
            if found is not None:
                return found
    return None


def find_bridge(host: Graph, n: int) -> Optional[Embedding]:
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return find_embedding(bridge(n), host)


def find_bridge_through_edge(host: Graph, n: int, u: int, v: int) -> Optional[Embedding]:
    return find_embedding_through_edge(bridge(n), host, u, v)


def bfs_distances(host: Graph, source: int) -> Dict[int, int]:
    """Distances from source, keyed in BFS order (neighbors ascending)."""
    host.neighbors(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in host.adjacency[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def _shortest_cycle(host: Graph, bound: Optional[int] = None) -> Optional[List[int]]:
    """
    Shortest cycle by BFS from every vertex. At the minimum, the two tree
    paths closing a non-tree edge meet only at the root, so they form a cycle.
    """
    best: Optional[Tuple[int, int, int, int]] = None
    best_parent: Dict[int, int] = {}
    for root in host.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] >= best[0]:
                break
            for w in host.adjacency[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    parent[w] = x
                    queue.append(w)
                elif parent[x] != w and parent[w] != x:
                    length = dist[x] + dist[w] + 1
                    if best is None or length < best[0]:
                        best = (length, root, x, w)
                        best_parent = dict(parent)
    if best is None or (bound is not None and best[0] > bound):
        return None
    _, root, x, w = best

    def climb(v: int) -> List[int]:
        path = []
        while v != -1:
            path.append(v)
            v = best_parent[v]
        return path

    left = climb(x)[::-1]
    right = climb(w)
    return left + right[:-1]


def girth(host: Graph) -> Optional[int]:
    """Length of the shortest cycle, or None for a forest."""
    cycle = _shortest_cycle(host)
    return None if cycle is None else len(cycle)


def short_cycle(host: Graph, max_length: int) -> Optional[List[int]]:
    """A shortest cycle if its length is at most max_length."""
    if max_length < 3:
        raise ParameterError(f"cycle bound must be >= 3, got {max_length}")
    return _shortest_cycle(host, max_length)


@dataclass(frozen=True)
class Highway:
    """Maximal path whose interior vertices all have degree 2."""
    vertices: Tuple[int, ...]
    end_degrees: Tuple[int, int]
    cyclic: bool = False

    @property
    def length(self) -> int:
        return len(self.vertices) if self.cyclic else len(self.vertices) - 1

    @property
    def pendant(self) -> bool:
        return not self.cyclic and 1 in self.end_degrees


def walk_highway(host: Graph, start: int, first: int) -> Highway:
    """Follow degree-2 vertices from start through first until the walk ends."""
    if not host.has_edge(start, first):
        raise GraphError(f"({start},{first}) is not an edge of the host")
    path = [start, first]
    prev, cur = start, first
    while len(host.adjacency[cur]) == 2 and cur != start:
        a, b = host.adjacency[cur]
        prev, cur = cur, (b if a == prev else a)
        path.append(cur)
    return Highway(tuple(path), (len(host.adjacency[start]), len(host.adjacency[cur])))


def highways(host: Graph) -> List[Highway]:
    """
    Highway decomposition: every maximal degree-2 chain with its two ends,
    pendant edges as length-1 highways, and cycles made only of degree-2
    vertices as cyclic highways.
    """
    found: Dict[Tuple[int, ...], Highway] = {}
    covered = set()
    for v in host.vertices():
        deg = len(host.adjacency[v])
        if deg == 2 or deg == 0:
            continue
        for w in host.adjacency[v]:
            hw = walk_highway(host, v, w)
            if len(hw.vertices) == 2 and 1 not in hw.end_degrees:
                continue
            covered.update(hw.vertices)
            key = min(hw.vertices, hw.vertices[::-1])
            if key not in found:
                if key != hw.vertices:
                    hw = Highway(key, hw.end_degrees[::-1])
                found[key] = hw

    for v in host.vertices():
        if len(host.adjacency[v]) != 2 or v in covered:
            continue
        cycle = [v]
        prev, cur = v, host.adjacency[v][0]
        while cur != v:
            cycle.append(cur)
            a, b = host.adjacency[cur]
            prev, cur = cur, (b if a == prev else a)
        covered.update(cycle)
        found[tuple(cycle)] = Highway(tuple(cycle), (2, 2), cyclic=True)

    return [found[key] for key in sorted(found)]


def highway_census(host: Graph, include_pendant: bool = True) -> Dict[Tuple[int, int, int], int]:
    """Count of highways by (length, low end degree, high end degree)."""
    census: Dict[Tuple[int, int, int], int] = {}
    for hw in highways(host):
        if hw.pendant and not include_pendant:
            continue
        lo, hi = sorted(hw.end_degrees)
        key = (hw.length, lo, hi)
        census[key] = census.get(key, 0) + 1
    return dict(sorted(census.items()))
