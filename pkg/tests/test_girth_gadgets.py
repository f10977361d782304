"""Tests for pentagons, towers, spread selection and girth chains."""

import networkx as nx
import pytest

from workbench.services.bridge_gadgets import all_bitstrings
from workbench.services.errors import CapacityError, ParameterError
from workbench.services.girth_gadgets import (
    girth_chain,
    glue_index,
    pentagon,
    pentagon_tower,
    spread_vertices,
    tower_height_for,
)
from workbench.services.graph_core import RoleKind
from workbench.services.search import bfs_distances, girth, short_cycle


class TestPentagon:
    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_single_cycle_of_length_5k(self, k):
        g = pentagon(k)
        assert (g.vertex_count, g.edge_count) == (5 * k, 5 * k)
        assert girth(g) == 5 * k

    def test_corners_spaced_k_apart(self):
        g = pentagon(3)
        corners = g.vertices_with(RoleKind.CORNER)
        assert corners == [0, 1, 2, 3, 4]
        assert bfs_distances(g, 0)[1] == 3

    def test_k_must_be_at_least_two(self):
        with pytest.raises(ParameterError):
            pentagon(1)


class TestTower:
    def test_glue_index(self):
        assert glue_index(2) == 1
        assert glue_index(3) == 2

    def test_one_level_counts(self):
        g, layout = pentagon_tower(2, 1)
        assert (g.vertex_count, g.edge_count) == (15, 20)
        assert layout.tower_size == 15

    @pytest.mark.parametrize("k,levels", [(2, 0), (2, 3), (3, 2)])
    def test_count_formulas(self, k, levels):
        g, _ = pentagon_tower(k, levels)
        assert g.vertex_count == 5 * k + levels * (5 * k - 5)
        assert g.edge_count == 5 * k * (levels + 1)

    def test_degree_profile(self):
        g, _ = pentagon_tower(2, 3)
        degrees = g.degrees()
        assert max(degrees) == 4
        assert degrees.count(4) == 15
        assert min(degrees) == 2

    @pytest.mark.parametrize("k,levels,expected", [
        (2, 1, 6), (2, 2, 6), (2, 3, 6), (2, 4, 6),
        (3, 1, 9), (3, 2, 8), (3, 3, 8), (3, 4, 8),
    ])
    def test_girth_exceeds_2k(self, k, levels, expected):
        g, _ = pentagon_tower(k, levels)
        assert girth(g) == expected
        assert nx.girth(g.to_networkx()) == expected

    def test_no_short_cycle_at_bound(self):
        g, _ = pentagon_tower(2, 2)
        assert short_cycle(g, 4) is None

    def test_upper_corners_glued_onto_midpoints(self):
        g, layout = pentagon_tower(3, 1)
        j = glue_index(3)
        for i, corner in enumerate(layout.corners[1]):
            assert corner == layout.midpoints[0][(2 * i) % 5][j - 1]

    def test_negative_levels_rejected(self):
        with pytest.raises(ParameterError):
            pentagon_tower(2, -1)


class TestSpreadVertices:
    def test_pentagon_supplies_two(self):
        g = pentagon(2)
        assert spread_vertices(g, 2, 2) == [0, 7]

    def test_pentagon_runs_out_at_three(self):
        with pytest.raises(CapacityError) as exc_info:
            spread_vertices(pentagon(2), 2, 3)
        assert exc_info.value.achieved == 2
        assert exc_info.value.requested == 3

    def test_tall_tower_supplies_four(self):
        g, _ = pentagon_tower(2, 4)
        spread = spread_vertices(g, 2, 4)
        assert spread == [0, 25, 2, 27]
        assert len(set(spread)) == 4

    def test_consecutive_spread_vertices_far_apart(self):
        g, _ = pentagon_tower(2, 4)
        spread = spread_vertices(g, 2, 4)
        for a, b in zip(spread, spread[1:]):
            assert bfs_distances(g, a)[b] >= 5

    def test_height_for_small_counts(self):
        assert tower_height_for(2, 2) == 0
        assert tower_height_for(3, 2) == 0

    def test_height_search_gives_up(self):
        with pytest.raises(CapacityError):
            tower_height_for(2, 3, max_levels=0)


class TestGirthChain:
    def test_bit_one_adds_edge(self):
        g, layout = girth_chain(2, 0, "1")
        v0, v1 = layout.spread
        assert g.has_edge(v0, v1)
        assert layout.helpers == {}
        assert g.vertex_count == 10

    def test_bit_zero_adds_helper(self):
        g, layout = girth_chain(2, 0, "0")
        v0, v1 = layout.spread
        u = layout.helpers[0]
        assert not g.has_edge(v0, v1)
        assert g.neighbors(u) == tuple(sorted((v0, v1)))
        assert str(g.roles[u]) == "helper-u(0)"

    def test_spread_roles_and_bits_recorded(self):
        g, layout = girth_chain(2, 4, "101")
        assert layout.bits == "101"
        assert [str(g.roles[v]) for v in layout.spread] == [f"spread-v({m})" for m in range(4)]

    @pytest.mark.parametrize("bits", [bits for length in range(4) for bits in all_bitstrings(length)])
    def test_girth_stays_above_2k(self, bits):
        g, _ = girth_chain(2, 4, bits)
        assert nx.girth(g.to_networkx()) > 4

    @pytest.mark.parametrize("bits", [bits for length in range(3) for bits in all_bitstrings(length)])
    def test_k3_girth_stays_above_2k(self, bits):
        g, _ = girth_chain(3, tower_height_for(3, 3), bits)
        assert girth(g) > 6

    def test_capacity_error_propagates(self):
        with pytest.raises(CapacityError):
            girth_chain(2, 0, "00")
