"""Tests for the JSON, edge-list and DOT graph formats."""

import pytest

from workbench.services.bridge_gadgets import complete_graph, dead_end
from workbench.services.errors import GraphParseError
from workbench.services.graph_core import graph_from_edges
from workbench.services.serialization import GraphFormat, from_document, parse, serialize, to_document


class TestJsonFormat:
    def test_round_trip_keeps_roles(self):
        g = dead_end(1)
        assert parse(serialize(g, GraphFormat.JSON), GraphFormat.JSON) == g

    def test_serialization_is_deterministic(self):
        assert serialize(dead_end(2)) == serialize(dead_end(2))

    def test_malformed_json_reports_position(self):
        with pytest.raises(GraphParseError) as exc_info:
            parse('{"vertices": [', GraphFormat.JSON)
        assert exc_info.value.line == 1
        assert exc_info.value.column is not None

    def test_schema_violation_names_location(self):
        with pytest.raises(GraphParseError, match="vertices"):
            parse('{"vertices": "nope", "edges": []}', GraphFormat.JSON)

    def test_schema_violation_reports_position(self):
        text = '{"vertices": [{"id": 0}],\n "edges": [[0, "x"]]}'
        with pytest.raises(GraphParseError, match="edges.0.1") as exc_info:
            parse(text, GraphFormat.JSON)
        assert (exc_info.value.line, exc_info.value.column) == (2, 16)

    def test_missing_field_points_at_enclosing_object(self):
        with pytest.raises(GraphParseError) as exc_info:
            parse('  {"vertices": []}', GraphFormat.JSON)
        assert (exc_info.value.line, exc_info.value.column) == (1, 3)

    def test_sparse_id_in_text_reports_position(self):
        text = '{"vertices": [{"id": 0},\n{"id": 5}], "edges": []}'
        with pytest.raises(GraphParseError, match="dense") as exc_info:
            parse(text, GraphFormat.JSON)
        assert (exc_info.value.line, exc_info.value.column) == (2, 8)

    def test_unknown_vertex_in_text_reports_position(self):
        text = '{"vertices": [{"id": 0}, {"id": 1}],\n "edges": [[0, 1],\n   [1, 7]]}'
        with pytest.raises(GraphParseError, match="edge 1") as exc_info:
            parse(text, GraphFormat.JSON)
        assert (exc_info.value.line, exc_info.value.column) == (3, 4)

    def test_sparse_ids_rejected(self):
        doc = to_document(complete_graph(2))
        doc.vertices[1].id = 5
        with pytest.raises(GraphParseError, match="dense"):
            from_document(doc)

    def test_edge_to_unknown_vertex_rejected(self):
        text = '{"vertices": [{"id": 0}], "edges": [[0, 1]]}'
        with pytest.raises(GraphParseError, match="edge 0"):
            parse(text, GraphFormat.JSON)


class TestEdgeListFormat:
    def test_triangle_is_three_sorted_lines(self):
        assert serialize(complete_graph(3), GraphFormat.EDGELIST) == "0 1\n0 2\n1 2\n"

    def test_parse_skips_comments_and_blanks(self):
        g = parse("# triangle\n\n0 1\n1 2  # closing soon\n0 2\n", GraphFormat.EDGELIST)
        assert (g.vertex_count, g.edge_count) == (3, 3)

    def test_loop_rejected_with_line(self):
        with pytest.raises(GraphParseError) as exc_info:
            parse("0 1\n0 0\n", GraphFormat.EDGELIST)
        assert exc_info.value.line == 2

    def test_bad_token_reports_column(self):
        with pytest.raises(GraphParseError) as exc_info:
            parse("0 x\n", GraphFormat.EDGELIST)
        assert (exc_info.value.line, exc_info.value.column) == (1, 3)

    def test_unicode_digit_rejected_with_position(self):
        with pytest.raises(GraphParseError) as exc_info:
            parse("0 ²\n", GraphFormat.EDGELIST)
        assert (exc_info.value.line, exc_info.value.column) == (1, 3)

    def test_wrong_token_count(self):
        with pytest.raises(GraphParseError, match="expected 2 ids"):
            parse("0 1 2\n", GraphFormat.EDGELIST)

    def test_empty_text_is_empty_graph(self):
        assert parse("", GraphFormat.EDGELIST).vertex_count == 0

    def test_roles_are_not_carried(self):
        g = parse(serialize(dead_end(1), GraphFormat.EDGELIST), GraphFormat.EDGELIST)
        assert list(g.edges()) == list(dead_end(1).edges())
        assert g != dead_end(1)


class TestDotFormat:
    def test_dot_lists_labels_and_edges(self):
        text = serialize(graph_from_edges(2, [(0, 1)]), GraphFormat.DOT)
        assert text.startswith("graph workbench {\n")
        assert '  0 [label="plain"];' in text
        assert "  0 -- 1;" in text

    def test_dot_is_export_only(self):
        with pytest.raises(GraphParseError, match="export-only"):
            parse("graph {}", GraphFormat.DOT)
