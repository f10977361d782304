"""Tests for augmentation sweeps, safe pendants and corner rigidity."""

import pytest

from workbench.models.schemas import AugmentationKind, Verdict
from workbench.services.bridge_gadgets import (
    all_bitstrings,
    bridge,
    bridge_chain,
    chain_exempt,
    complete_graph,
    dead_end,
    dead_end_exempt,
    dead_end_tip,
    drive_through,
    drive_through_exempt,
    drive_through_layout,
)
from workbench.services.errors import GirthPreconditionError, GraphError, NotBridgeFreeError, ParameterError, PinError
from workbench.services.girth_gadgets import pentagon, pentagon_tower
from workbench.services.graph_core import RoleKind
from workbench.services.rigidity import augmentation_sweep, augmentations, corner_rigidity, safe_pendant


def _safe_outcomes_are_exempt(report):
    exempt = set(report.exempt)
    for outcome in report.outcomes:
        if outcome.safe:
            u, v = outcome.endpoints
            touched = {u} if outcome.kind == AugmentationKind.PENDANT else {u, v}
            assert touched <= exempt, f"safe augmentation {outcome.endpoints} touches a protected vertex"


class TestAugmentations:
    def test_complete_graph_only_has_pendants(self):
        result = augmentations(complete_graph(3))
        assert result == [(AugmentationKind.PENDANT, v, 3) for v in range(3)]

    def test_non_edges_come_first(self):
        result = augmentations(bridge(1))
        edge_count = 15 - bridge(1).edge_count
        assert [kind for kind, _, _ in result[:edge_count]] == [AugmentationKind.EDGE] * edge_count
        assert len(result) == edge_count + 6


class TestAugmentationSweep:
    def test_dead_end_passes_with_tip_exempt(self):
        g = dead_end(1)
        tip = dead_end_tip(g, 1)
        report = augmentation_sweep(g, 1, {tip}, gadget="dead-end")
        assert report.verdict == Verdict.PASS
        assert report.unwitnessed_protected == []
        pendant = next(o for o in report.outcomes
                       if o.kind == AugmentationKind.PENDANT and o.endpoints[0] == tip)
        assert pendant.safe
        _safe_outcomes_are_exempt(report)

    def test_dead_end_fails_without_exemption(self):
        report = augmentation_sweep(dead_end(1), 1, set())
        assert report.verdict == Verdict.FAIL
        assert report.unwitnessed_protected

    def test_drive_through_passes_with_exits_exempt(self):
        g, layout = drive_through_layout(2)
        exempt = {layout.left_exit, layout.right_exit}
        report = augmentation_sweep(g, 2, exempt)
        assert report.verdict == Verdict.PASS
        safe_pendants = {o.endpoints[0] for o in report.outcomes
                         if o.kind == AugmentationKind.PENDANT and o.safe}
        assert safe_pendants == exempt
        _safe_outcomes_are_exempt(report)

    def test_chain_passes_with_frontier_exempt(self):
        g, layout = bridge_chain(1, "1")
        report = augmentation_sweep(g, 1, chain_exempt(layout))
        assert report.verdict == Verdict.PASS
        assert report.checked == len(augmentations(g))
        _safe_outcomes_are_exempt(report)

    def test_parallel_sweep_matches_serial(self):
        g = dead_end(1)
        exempt = {dead_end_tip(g, 1)}
        serial = augmentation_sweep(g, 1, exempt, jobs=1)
        parallel = augmentation_sweep(g, 1, exempt, jobs=2)
        assert serial == parallel

    def test_input_containing_bridge_rejected(self):
        with pytest.raises(NotBridgeFreeError) as exc_info:
            augmentation_sweep(bridge(1), 1, set())
        assert len(exc_info.value.witness) == 6

    def test_unknown_exempt_vertex_rejected(self):
        with pytest.raises(GraphError):
            augmentation_sweep(dead_end(1), 1, {99})


def _designated(kind, n, bits):
    if kind == "dead-end":
        return dead_end(n), dead_end_exempt(n)
    if kind == "drive-through":
        return drive_through(n), drive_through_exempt(n)
    g, layout = bridge_chain(n, bits)
    return g, chain_exempt(layout)


SWEEP_CASES = (
    [(kind, n, "") for kind in ("dead-end", "drive-through") for n in (1, 2)]
    + [("chain", n, bits) for n in (1, 2) for length in range(3) for bits in all_bitstrings(length)]
)


class TestSweepSuite:
    """Every gadget is rigid, and only its exempt vertices take a pendant safely."""

    @pytest.mark.parametrize("kind,n,bits", SWEEP_CASES)
    def test_sweep_passes_and_safe_pendants_are_exempt(self, kind, n, bits):
        g, exempt = _designated(kind, n, bits)
        report = augmentation_sweep(g, n, exempt, gadget=kind)
        assert report.verdict == Verdict.PASS
        safe_pendants = {o.endpoints[0] for o in report.outcomes
                         if o.kind == AugmentationKind.PENDANT and o.safe}
        assert safe_pendants == exempt
        _safe_outcomes_are_exempt(report)


class TestSafePendant:
    def test_tip_is_safe(self):
        g = dead_end(2)
        assert safe_pendant(g, 2, dead_end_tip(g, 2))

    def test_path_vertex_is_not_safe(self):
        g = dead_end(2)
        p1 = g.vertices_with(RoleKind.PATH, (1,))[0]
        assert not safe_pendant(g, 2, p1)

    def test_interior_clique_vertex_is_not_safe(self):
        g, layout = drive_through_layout(1)
        assert not safe_pendant(g, 1, layout.clique[1])


class TestCornerRigidity:
    def test_pentagon_identity(self):
        assert corner_rigidity(2, pentagon(2), [0, 1, 2, 3, 4]) == 1

    @pytest.mark.parametrize("k,levels", [(2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3)])
    def test_every_tower_level_is_rigid(self, k, levels):
        g, layout = pentagon_tower(k, levels)
        for pins in layout.corners:
            assert corner_rigidity(k, g, pins) == 1

    def test_short_cycles_break_the_hypothesis(self):
        with pytest.raises(GirthPreconditionError) as exc_info:
            corner_rigidity(2, complete_graph(5), [0, 1, 2, 3, 4])
        assert exc_info.value.girth == 3

    def test_many_copies_without_girth_hypothesis(self):
        count = corner_rigidity(2, complete_graph(10), [0, 1, 2, 3, 4], require_girth=False)
        assert count == 2

    def test_needs_five_pins(self):
        with pytest.raises(ParameterError):
            corner_rigidity(2, pentagon(2), [0, 1, 2])

    def test_pins_must_be_distinct(self):
        with pytest.raises(PinError):
            corner_rigidity(2, pentagon(2), [0, 1, 2, 3, 3])
