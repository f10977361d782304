"""Tests for the graph model, builder and the union/identify/relabel operations."""

import networkx as nx
import pytest

from workbench.services.bridge_gadgets import bridge, complete_graph, dead_end, path_graph
from workbench.services.errors import GraphError
from workbench.services.graph_core import (
    PLAIN,
    GraphBuilder,
    Role,
    RoleKind,
    degree,
    degree_multiset,
    disjoint_union,
    graph_from_edges,
    identify,
    relabel,
)


class TestGraphBuilder:
    def test_ids_are_dense_and_monotone(self):
        builder = GraphBuilder()
        assert builder.add_vertex() == 0
        for _ in range(4):
            builder.add_vertex()
        assert builder.add_vertex() == 5
        assert builder.add_vertex() == 6
        assert builder.add_vertex() == 7

    def test_add_edge_is_idempotent(self):
        builder = GraphBuilder()
        builder.add_vertex()
        builder.add_vertex()
        builder.add_edge(0, 1)
        builder.add_edge(1, 0)
        assert builder.finalize().edge_count == 1

    def test_self_loop_rejected(self):
        builder = GraphBuilder()
        builder.add_vertex()
        with pytest.raises(GraphError, match="self-loop"):
            builder.add_edge(0, 0)

    def test_unknown_vertex_rejected(self):
        builder = GraphBuilder()
        builder.add_vertex()
        with pytest.raises(GraphError, match="unknown vertex"):
            builder.add_edge(0, 3)

    def test_finalize_freezes_builder(self):
        builder = GraphBuilder()
        builder.add_vertex()
        builder.finalize()
        with pytest.raises(GraphError, match="finalized"):
            builder.add_vertex()
        with pytest.raises(GraphError):
            builder.finalize()

    def test_embed_glues_and_keeps_existing_role(self):
        builder = GraphBuilder()
        anchor = builder.add_vertex(Role(RoleKind.EXIT_LEFT, (0,)))
        mapping = builder.embed(path_graph(2), glue={0: anchor})
        g = builder.finalize()
        assert mapping[0] == anchor
        assert g.vertex_count == 3
        assert g.roles[anchor] == Role(RoleKind.EXIT_LEFT, (0,))
        assert g.roles[mapping[2]] == Role(RoleKind.PATH, (2,))

    def test_embed_rejects_non_injective_glue(self):
        builder = GraphBuilder()
        builder.add_vertex()
        with pytest.raises(GraphError, match="injective"):
            builder.embed(path_graph(1), glue={0: 0, 1: 0})


class TestGraph:
    def test_edges_sorted_with_low_endpoint_first(self):
        g = graph_from_edges(3, [(2, 1), (1, 0), (2, 0)])
        assert list(g.edges()) == [(0, 1), (0, 2), (1, 2)]

    def test_degree_of_bridge_branch_vertex(self):
        g = bridge(2)
        c = g.vertices_with(RoleKind.BRIDGE_C)[0]
        assert degree(g, c) == 3

    def test_isolated_vertex_has_degree_zero(self):
        assert degree(graph_from_edges(1, []), 0) == 0

    def test_hub_degree_in_dead_end(self):
        g = dead_end(2)
        hub = g.vertices_with(RoleKind.PATH, (0,))[0]
        assert degree(g, hub) == 5

    def test_neighbors_of_unknown_vertex(self):
        with pytest.raises(GraphError):
            complete_graph(3).neighbors(3)

    def test_role_rendering(self):
        assert str(Role(RoleKind.CORNER, (0, 1))) == "corner-x(0,1)"
        assert str(PLAIN) == "plain"

    def test_role_rejects_four_indices(self):
        with pytest.raises(GraphError):
            Role(RoleKind.MIDPOINT, (0, 1, 2, 3))

    def test_to_networkx_carries_roles(self):
        nxg = complete_graph(4).to_networkx()
        assert nxg.number_of_edges() == 6
        assert nxg.nodes[0]["role"] == "clique-k(1)"

    def test_with_pendant_appends_fresh_vertex(self):
        g = complete_graph(3).with_pendant(1)
        assert g.vertex_count == 4
        assert g.neighbors(3) == (1,)

    def test_degree_multiset(self):
        assert degree_multiset(bridge(1)) == {1: 4, 3: 2}


class TestUnionAndIdentify:
    def test_disjoint_union_shifts_second_operand(self):
        g = disjoint_union(complete_graph(3), path_graph(1))
        assert g.vertex_count == 5
        assert g.has_edge(3, 4)
        assert not g.has_edge(2, 3)

    def test_identify_builds_dead_end(self):
        union = disjoint_union(complete_graph(4), path_graph(2))
        g = identify(union, 4, 3)
        assert (g.vertex_count, g.edge_count) == (6, 8)
        assert nx.is_isomorphic(g.to_networkx(), dead_end(1).to_networkx())
        assert g.roles[3] == Role(RoleKind.PATH, (0,))

    def test_identify_endpoints_of_two_edges(self):
        g = identify(graph_from_edges(4, [(0, 1), (2, 3)]), 1, 2)
        assert nx.is_isomorphic(g.to_networkx(), path_graph(2).to_networkx())

    def test_identify_adjacent_pair_rejected(self):
        with pytest.raises(GraphError, match="adjacent"):
            identify(complete_graph(3), 0, 1)

    def test_identify_with_itself_rejected(self):
        with pytest.raises(GraphError):
            identify(path_graph(2), 1, 1)


class TestRelabel:
    def test_single_vertex_unchanged(self):
        g = graph_from_edges(1, [])
        assert relabel(g, 0) == g

    def test_same_seed_same_output(self):
        g = dead_end(2)
        assert relabel(g, 7) == relabel(g, 7)

    def test_isomorphic_and_role_free(self):
        g = dead_end(2)
        h = relabel(g, 3)
        assert nx.is_isomorphic(g.to_networkx(), h.to_networkx())
        assert all(role == PLAIN for role in h.roles)
