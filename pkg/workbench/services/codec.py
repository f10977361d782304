"""
Structural decoders and fingerprints.

decode_bridge_bits reads a bridge chain from structure alone, so it works on
relabeled copies. decode_girth_bits needs the tower layout.
"""
import logging
from typing import Iterable, List, Set

from workbench.models.schemas import Fingerprint, TowerLayout
from workbench.services.errors import DecodeError, ParameterError
from workbench.services.graph_core import Graph, degree_multiset
from workbench.services.search import Highway, highway_census, highways, walk_highway

logger = logging.getLogger(__name__)


def _special_highway(host: Graph, n: int) -> Highway:
    hub_degree = n + 3
    candidates = [
        hw for hw in highways(host)
        if not hw.cyclic and hw.length == n + 2 and hub_degree in hw.end_degrees
    ]
    if len(candidates) != 1:
        raise DecodeError(
            "special-highway",
            f"expected exactly one highway of length {n + 2} ending at degree {hub_degree}, "
            f"found {len(candidates)}",
        )
    hw = candidates[0]
    if hw.end_degrees[0] != hub_degree:
        hw = Highway(hw.vertices[::-1], hw.end_degrees[::-1])
    if hw.end_degrees[1] != n + 2:
        raise DecodeError("special-highway", f"far end has degree {hw.end_degrees[1]}, expected {n + 2}")
    return hw


def _clique(host: Graph, n: int, entry: int, incoming: int) -> List[int]:
    members = [entry] + [w for w in host.adjacency[entry] if w != incoming]
    if len(members) != n + 2:
        raise DecodeError("clique", f"clique at {entry} has {len(members)} vertices, expected {n + 2}")
    member_set = set(members)
    for v in members:
        if len(host.adjacency[v]) != n + 2:
            raise DecodeError("clique", f"clique vertex {v} has degree {len(host.adjacency[v])}")
        if len(member_set - host.neighbor_sets[v] - {v}) != 0:
            raise DecodeError("clique", f"vertices around {entry} do not form a clique")
    return members


def _hub_clique(host: Graph, n: int, hub: int, path_neighbor: int) -> List[int]:
    """The K_{n+3} of a dead end: the hub plus every hub neighbor off its path."""
    members = [hub] + [w for w in host.adjacency[hub] if w != path_neighbor]
    if len(members) != n + 3:
        raise DecodeError("hub", f"hub {hub} carries {len(members)} clique vertices, expected {n + 3}")
    member_set = set(members)
    for v in members[1:]:
        if len(host.adjacency[v]) != n + 2:
            raise DecodeError("hub", f"hub clique vertex {v} has degree {len(host.adjacency[v])}")
        if member_set - host.neighbor_sets[v] - {v}:
            raise DecodeError("hub", f"vertices around hub {hub} do not form a clique")
    return members


def _visit(visited: Set[int], vertices: Iterable[int]) -> None:
    for v in vertices:
        if v in visited:
            raise DecodeError("walk", f"vertex {v} reached twice")
        visited.add(v)


def decode_bridge_bits(host: Graph, n: int) -> str:
    """
    Recover bits from an unlabeled bridge_chain(n, bits).

    Walks from the special highway into the first clique, then from clique to
    clique along the connecting highways, reading one bit per connector from
    its length. A clique whose exit highway ends at a degree-1 vertex is the last.
    Every vertex of the host must be reached by the walk.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    special = _special_highway(host, n)
    visited: Set[int] = set()
    _visit(visited, _hub_clique(host, n, special.vertices[0], special.vertices[1]))
    _visit(visited, special.vertices[1:-1])
    entry, incoming = special.vertices[-1], special.vertices[-2]
    bits: List[str] = []

    while True:
        if entry in visited:
            raise DecodeError("walk", f"clique at {entry} visited twice")
        members = _clique(host, n, entry, incoming)
        _visit(visited, members)
        member_set = set(members)
        dead_ends = 0
        outgoing = None
        terminal = False
        for v in members:
            if v == entry:
                continue
            exits = [w for w in host.adjacency[v] if w not in member_set]
            if len(exits) != 1:
                raise DecodeError("classify", f"clique vertex {v} has {len(exits)} external neighbors")
            hw = walk_highway(host, v, exits[0])
            far = hw.end_degrees[1]
            if far == n + 3:
                if hw.length != n + 1:
                    raise DecodeError("classify", f"dead-end highway from {v} has length {hw.length}")
                _visit(visited, hw.vertices[1:-1])
                _visit(visited, _hub_clique(host, n, hw.vertices[-1], hw.vertices[-2]))
                dead_ends += 1
            elif far == 1:
                if terminal or outgoing is not None:
                    raise DecodeError("classify", f"second exit at clique of {entry}")
                _visit(visited, hw.vertices[1:])
                terminal = True
            elif far == n + 2:
                if terminal or outgoing is not None:
                    raise DecodeError("classify", f"second exit at clique of {entry}")
                outgoing = hw
            else:
                raise DecodeError("classify", f"highway from {v} ends at degree {far}")
        if dead_ends != n:
            raise DecodeError("classify", f"clique at {entry} carries {dead_ends} dead ends, expected {n}")
        if terminal:
            break
        if outgoing is None:
            raise DecodeError("classify", f"clique at {entry} has no exit")
        bit = outgoing.length - (n + 1)
        if bit not in (0, 1):
            raise DecodeError("connector", f"connector of length {outgoing.length} outside {{{n + 1}, {n + 2}}}")
        bits.append(str(bit))
        _visit(visited, outgoing.vertices[1:-1])
        entry, incoming = outgoing.vertices[-1], outgoing.vertices[-2]

    if len(visited) != host.vertex_count:
        raise DecodeError(
            "coverage",
            f"walk reached {len(visited)} of {host.vertex_count} vertices",
        )
    decoded = "".join(bits)
    logger.debug("Decoded %d bit(s) from a %d-vertex chain", len(decoded), host.vertex_count)
    return decoded


def fingerprint(host: Graph, n: int) -> Fingerprint:
    """Decoded bits, the degree census and the census of non-pendant highways."""
    bits = decode_bridge_bits(host, n)
    census = [
        (length, lo, hi, count)
        for (length, lo, hi), count in highway_census(host, include_pendant=False).items()
    ]
    degrees = list(degree_multiset(host).items())
    return Fingerprint(n=n, bits=bits, degrees=degrees, census=census)


def decode_girth_bits(chain: Graph, layout: TowerLayout) -> str:
    """
    Read bits back from a girth chain: v_m adjacent to v_{m+1} is a 1, a
    shared neighbor outside the tower is a 0. Exactly one must hold.
    """
    spread = layout.spread
    if len(spread) < 1:
        raise DecodeError("layout", "layout carries no spread vertices")
    bits: List[str] = []
    for m in range(len(spread) - 1):
        a, b = spread[m], spread[m + 1]
        direct = chain.has_edge(a, b)
        shared = [
            w for w in chain.neighbor_sets[a] & chain.neighbor_sets[b]
            if w >= layout.tower_size
        ]
        if direct == bool(shared):
            state = "both" if direct else "neither"
            raise DecodeError(f"position {m}", f"{state} of edge and helper present between {a} and {b}")
        bits.append("1" if direct else "0")
    return "".join(bits)
