"""Vertex verdicts and whole-curve reports."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from tropbalance import (alpha_map, check_curve, check_vertex, parse_curve,
                         reverse_edge, sigma, subdivide_edge)
from tropbalance.errors import MissingCycleData
from tropbalance.fixtures import fixture

from conftest import make_curve, star_on_face, vec

K3_NAMES = ("D0", "D1", "D2", "D3")


def corner_star(k3):
    """Trivalent vertex at the corner <D0>, one unit leg along each edge.

    The away weights sum to (-3, 1, 1, 1), the intersection column of the
    corner stratum, so the corner is balanced with witness 1.
    """
    half = Fraction(1, 2)
    return make_curve(
        K3_NAMES,
        [("c", {"D0": 1}, False),
         ("b1", {"D0": half, "D1": half}, True),
         ("b2", {"D0": half, "D2": half}, True),
         ("b3", {"D0": half, "D3": half}, True)],
        [("e1", "c", "b1", {"D0": -1, "D1": 1}),
         ("e2", "c", "b2", {"D0": -1, "D2": 1}),
         ("e3", "c", "b3", {"D0": -1, "D3": 1})])


def edge_point_star(k3):
    """Vertex inside the edge {D0, D1} with sigma = (-6, 2, 2, 2)."""
    half, quarter = Fraction(1, 2), Fraction(1, 4)
    three_quarter = Fraction(3, 4)
    return make_curve(
        K3_NAMES,
        [("v", {"D0": half, "D1": half}, False),
         ("b1", {"D0": quarter, "D1": three_quarter}, True),
         ("b2", {"D0": quarter, "D1": half, "D2": quarter}, True),
         ("b3", {"D0": quarter, "D1": half, "D3": quarter}, True)],
        [("e1", "v", "b1", {"D0": -2, "D1": 2}),
         ("e2", "v", "b2", {"D0": -2, "D2": 2}),
         ("e3", "v", "b3", {"D0": -2, "D3": 2})])


class TestSigma:
    def test_cancelling_trivalent_vertex(self, k3):
        t = star_on_face(k3, ("D0", "D1", "D2"),
                         [{"D0": -1, "D1": 1}, {"D0": -1, "D2": 1},
                          {"D0": 2, "D1": -1, "D2": -1}])
        assert sigma(t, "c").is_zero()

    def test_subdivision_vertex_is_zero(self, k3):
        t = corner_star(k3)
        t2 = subdivide_edge(t, "e1", Fraction(1, 3), vertex_id="m")
        assert sigma(t2, "m").is_zero()

    def test_univalent_vertex(self, k3):
        t = corner_star(k3)
        assert sigma(t, "b1") == vec(K3_NAMES, {"D0": 1, "D1": -1})

    def test_corner_sum(self, k3):
        t = corner_star(k3)
        assert sigma(t, "c") == vec(K3_NAMES, {"D0": -3, "D1": 1, "D2": 1, "D3": 1})


class TestCheckVertex:
    def test_corner_balanced_with_witness_one(self, k3):
        t = corner_star(k3)
        verdict = check_vertex(k3.complex, k3.cycle_data, t, "c")
        assert verdict.status == "balanced"
        assert verdict.face == ("D0",)
        assert verdict.witness == vec(("H",), {"H": 1})
        alpha = alpha_map(k3.data_for(["D0"]))
        assert alpha.matvec(verdict.witness) == verdict.sigma

    def test_edge_point_balanced_with_witness_two(self, k3):
        t = edge_point_star(k3)
        verdict = check_vertex(k3.complex, k3.cycle_data, t, "v")
        assert verdict.status == "balanced"
        assert verdict.face == ("D0", "D1")
        assert verdict.sigma == vec(K3_NAMES, {"D0": -6, "D1": 2, "D2": 2, "D3": 2})
        assert verdict.witness == vec(("pt-class",), {"pt-class": 2})

    def test_top_face_zero_map(self, k3):
        balanced = star_on_face(k3, ("D0", "D1", "D2"),
                                [{"D0": 1, "D1": -1}, {"D0": -1, "D1": 1}])
        verdict = check_vertex(k3.complex, k3.cycle_data, balanced, "c")
        assert verdict.status == "balanced" and verdict.sigma.is_zero()

        lopsided = star_on_face(k3, ("D0", "D1", "D2"),
                                [{"D0": 1, "D1": -1}, {"D0": -1, "D2": 1}])
        verdict = check_vertex(k3.complex, k3.cycle_data, lopsided, "c")
        assert verdict.status == "violated"
        assert verdict.certificate is not None
        assert verdict.certificate.dot(verdict.sigma) != 0

    def test_boundary_vertex_skipped(self, k3):
        t = corner_star(k3)
        verdict = check_vertex(k3.complex, k3.cycle_data, t, "b1")
        assert verdict.status == "skipped_boundary"
        assert verdict.witness is None and verdict.certificate is None

    def test_missing_cycle_data(self, k3):
        t = corner_star(k3)
        pruned = {k: v for k, v in k3.cycle_data.items() if k != frozenset({"D0"})}
        with pytest.raises(MissingCycleData):
            check_vertex(k3.complex, pruned, t, "c")

    def test_integral_witness_note(self, k3):
        t = corner_star(k3)
        verdict = check_vertex(k3.complex, k3.cycle_data, t, "c")
        assert any("integral" in note for note in verdict.notes)


class TestCheckCurve:
    def test_star_all_balanced(self, k3):
        _, curve_json = fixture("k3-quartic")
        t = parse_curve(k3.complex.components, curve_json)
        report = check_curve(k3.complex, k3.cycle_data, t, strict=True)
        assert report.overall == "all_balanced"
        assert [v.vertex for v in report.verdicts] == ["b0", "b1", "b2", "c"]

    def test_perturbed_star_has_violation(self, k3):
        t = star_on_face(k3, ("D0", "D1", "D2"),
                         [{"D0": 2, "D1": -1, "D2": -1},
                          {"D0": -1, "D1": 2, "D2": -1},
                          {"D0": -1, "D1": -1, "D2": 2}])
        # double one leg's weight: the perturbation (2,-1,-1,0) is a kernel
        # vector outside the zero image of the top-face alpha
        doubled = [e if e.id != "e0" else
                   e.__class__(e.id, e.src, e.dst, e.weight.scale(2))
                   for e in t.edges]
        perturbed = t.with_edges(doubled)
        report = check_curve(k3.complex, k3.cycle_data, perturbed, strict=True)
        assert report.overall == "has_violation"
        violated = [v for v in report.verdicts if v.status == "violated"]
        assert [v.vertex for v in violated] == ["c"]
        y = violated[0].certificate
        assert y.dot(violated[0].sigma) != 0

    def test_boundary_only_curve_vacuously_balanced(self, k3):
        t = make_curve(K3_NAMES,
                       [("u", {"D0": 1}, True),
                        ("v", {"D1": 1}, True)], [])
        report = check_curve(k3.complex, k3.cycle_data, t)
        assert report.overall == "all_balanced"
        assert all(v.status == "skipped_boundary" for v in report.verdicts)

    def test_isolated_vertex_balanced(self, k3):
        t = make_curve(K3_NAMES, [("v", {"D0": 1}, False)], [])
        report = check_curve(k3.complex, k3.cycle_data, t)
        assert report.overall == "all_balanced"
        assert report.verdicts[0].sigma.is_zero()

    def test_validation_errors_reported(self, k3):
        t = make_curve(K3_NAMES, [("v", {"D0": Fraction(1, 2)}, False)], [])
        report = check_curve(k3.complex, k3.cycle_data, t)
        assert report.overall == "has_errors"
        assert any(f.code == "E_OFF_SKELETON" for f in report.errors)

    def test_missing_data_aggregated(self, k3):
        t = corner_star(k3)
        pruned = {k: v for k, v in k3.cycle_data.items() if k != frozenset({"D0"})}
        report = check_curve(k3.complex, pruned, t, strict=True)
        assert report.overall == "has_errors"
        assert any(f.code == "E_MISSING_CYCLE_DATA" for f in report.errors)


class TestInvariances:
    def test_orientation_invariance(self, k3):
        t = corner_star(k3)
        base = check_curve(k3.complex, k3.cycle_data, t, strict=True)
        for k in range(len(t.edges)):
            edges = [reverse_edge(e) if i == k else e for i, e in enumerate(t.edges)]
            flipped = check_curve(k3.complex, k3.cycle_data, t.with_edges(edges), strict=True)
            assert [(v.vertex, v.status) for v in flipped.verdicts] \
                == [(v.vertex, v.status) for v in base.verdicts]

    def test_subdivision_invariance(self, k3):
        rng = random.Random(77)
        t = corner_star(k3)
        base = check_curve(k3.complex, k3.cycle_data, t, strict=True)
        baseline = {v.vertex: v.status for v in base.verdicts}
        for _ in range(5):
            split = t
            for n in range(rng.randint(1, 3)):
                edge = rng.choice([e.id for e in split.edges])
                s = Fraction(rng.randint(1, 9), 10)
                split = subdivide_edge(split, edge, s, vertex_id=f"m{n}_{edge}")
            report = check_curve(k3.complex, k3.cycle_data, split, strict=True)
            assert report.overall == "all_balanced"
            outcome = {v.vertex: v.status for v in report.verdicts}
            for vertex, status in baseline.items():
                assert outcome[vertex] == status
            for vertex, status in outcome.items():
                if vertex not in baseline:
                    assert status == "balanced"
