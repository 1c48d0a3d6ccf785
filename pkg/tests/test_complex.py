"""Intersection complex validation, point location, and the embedding."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from tropbalance import (IntersectionComplex, embed_faces, j_set, locate,
                         validate_complex)
from tropbalance.errors import (IndexMismatch, NotInSkeleton, ParseError,
                                UnknownStratum, ValidationFailed)

from conftest import vec


def codes(findings):
    return {f.code for f in findings}


class TestValidation:
    def test_k3_fixture_is_clean(self, k3):
        assert validate_complex(k3.complex) == []

    def test_toric_fixture_is_clean(self, toric):
        assert validate_complex(toric.complex) == []

    def test_missing_singleton_breaks_downward_closure(self):
        c = IntersectionComplex(["A", "B"], [("A",), ("A", "B")], [(("A", "B"), 1)])
        assert "E_NOT_DOWNWARD_CLOSED" in codes(validate_complex(c))

    def test_glue_violation(self):
        c = IntersectionComplex(
            ["A", "B", "C"],
            [("A",), ("B",), ("C",), ("A", "B"), ("A", "C")],
            [(("A", "B"), 1), (("A", "C"), 2)])
        assert "E_GLUE" in codes(validate_complex(c))

    def test_nonpositive_scale(self):
        c = IntersectionComplex(["A"], [("A",)], [(("A",), Fraction(0))])
        assert "E_VAL_A_NONPOSITIVE" in codes(validate_complex(c))

    def test_non_maximal_face(self):
        c = IntersectionComplex(
            ["A", "B"], [("A",), ("B",), ("A", "B")],
            [(("A",), 1), (("A", "B"), 1)])
        assert "E_NOT_MAXIMAL" in codes(validate_complex(c))

    def test_orphan_stratum(self):
        c = IntersectionComplex(
            ["A", "B", "C"],
            [("A",), ("B",), ("C",), ("A", "B"), ("B", "C")],
            [(("A", "B"), 1)])
        assert "E_ORPHAN_STRATUM" in codes(validate_complex(c))

    def test_duplicate_stratum_rejected_at_construction(self):
        with pytest.raises(ParseError):
            IntersectionComplex(["A"], [("A",), ("A",)], [(("A",), 1)])

    def test_unknown_component_rejected(self):
        with pytest.raises(ParseError):
            IntersectionComplex(["A"], [("Z",)], [(("A",), 1)])


class TestLocate:
    def test_edge_barycenter(self, k3):
        p = vec(k3.complex.components, {"D0": Fraction(1, 2), "D1": Fraction(1, 2)})
        assert locate(k3.complex, p) == ("D0", "D1")

    def test_vertex(self, k3):
        p = vec(k3.complex.components, {"D0": 1})
        assert locate(k3.complex, p) == ("D0",)

    def test_hollow_center_is_off_skeleton(self, k3):
        # the solid tetrahedron is hollow: all four planes never meet
        quarter = Fraction(1, 4)
        p = vec(k3.complex.components, {n: quarter for n in k3.complex.components})
        with pytest.raises(NotInSkeleton):
            locate(k3.complex, p)

    def test_negative_coordinate(self, k3):
        p = vec(k3.complex.components, {"D0": Fraction(3, 2), "D1": Fraction(-1, 2)})
        with pytest.raises(NotInSkeleton):
            locate(k3.complex, p)

    def test_wrong_sum(self, k3):
        p = vec(k3.complex.components, {"D0": Fraction(1, 3), "D1": Fraction(1, 3)})
        with pytest.raises(NotInSkeleton):
            locate(k3.complex, p)

    def test_zero_vector(self, k3):
        with pytest.raises(NotInSkeleton):
            locate(k3.complex, vec(k3.complex.components))

    def test_label_mismatch(self, k3):
        with pytest.raises(IndexMismatch):
            locate(k3.complex, vec(["X", "Y"], {"X": 1}))


class TestJSet:
    def test_edge_extends_to_everything(self, k3):
        assert j_set(k3.complex, ("D0", "D1")) == ("D0", "D1", "D2", "D3")

    def test_vertex_extends_to_everything(self, k3):
        assert j_set(k3.complex, ("D0",)) == ("D0", "D1", "D2", "D3")

    def test_top_face_extends_to_itself(self, k3):
        assert j_set(k3.complex, ("D0", "D1", "D2")) == ("D0", "D1", "D2")

    def test_unknown_stratum(self, k3):
        with pytest.raises(UnknownStratum):
            j_set(k3.complex, ("D0", "D1", "D2", "D3"))

    def test_monotone(self, k3):
        strata = list(k3.complex.strata)
        for small in strata:
            for large in strata:
                if small < large:
                    assert set(j_set(k3.complex, large)) <= set(j_set(k3.complex, small))

    def test_contains_the_stratum(self, k3):
        for s in k3.complex.strata:
            assert s <= set(j_set(k3.complex, s))


class TestEmbedding:
    def test_k3_four_unit_triangles(self, k3):
        faces = embed_faces(k3.complex)
        assert len(faces) == 4
        for labels, vertices in faces:
            assert len(labels) == 3 and len(vertices) == 3
            for pivot, vertex in zip(labels, vertices):
                for name in k3.complex.components:
                    assert vertex[name] == (1 if name == pivot else 0)

    def test_single_scaled_segment(self):
        c = IntersectionComplex(
            ["A", "B"], [("A",), ("B",), ("A", "B")], [(("A", "B"), Fraction(2))])
        [(labels, vertices)] = embed_faces(c)
        assert labels == ("A", "B")
        assert vertices[0] == vec(["A", "B"], {"A": 2})
        assert vertices[1] == vec(["A", "B"], {"B": 2})

    def test_two_segments_share_a_vertex(self):
        c = IntersectionComplex(
            ["A", "B", "C"],
            [("A",), ("B",), ("C",), ("A", "B"), ("B", "C")],
            [(("A", "B"), 1), (("B", "C"), 1)])
        faces = dict(embed_faces(c))
        shared_ab = faces[("A", "B")][1]   # vertex of B in face {A,B}
        shared_bc = faces[("B", "C")][0]   # vertex of B in face {B,C}
        assert shared_ab == shared_bc

    def test_invalid_complex_propagates(self):
        c = IntersectionComplex(["A"], [("A",)], [(("A",), Fraction(-1))])
        with pytest.raises(ValidationFailed) as err:
            embed_faces(c)
        assert err.value.code == "E_VAL_A_NONPOSITIVE"

    def test_locate_of_embedded_points(self, k3):
        # simplex corners locate to singletons, barycenters to the full face
        third = Fraction(1, 3)
        for labels, vertices in embed_faces(k3.complex):
            for pivot, vertex in zip(labels, vertices):
                assert locate(k3.complex, vertex) == (pivot,)
            barycenter = vertices[0].scale(third) + vertices[1].scale(third) + vertices[2].scale(third)
            assert locate(k3.complex, barycenter) == labels

    def test_all_proper_subsets_are_k3_strata(self, k3):
        names = k3.complex.components
        for size in (1, 2, 3):
            for subset in combinations(names, size):
                assert k3.complex.is_stratum(subset)
        assert not k3.complex.is_stratum(names)
