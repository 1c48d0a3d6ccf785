"""Shared fixtures and small builders for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from tropbalance import (Degeneration, RatVector, TropicalCurve, TropicalEdge,
                         TropicalVertex, k3_quartic, toric_simplex)


@pytest.fixture(scope="session")
def k3() -> Degeneration:
    return k3_quartic()


@pytest.fixture(scope="session")
def toric() -> Degeneration:
    return toric_simplex()


def vec(components, entries=None) -> RatVector:
    """Full vector over ``components`` with the given nonzero entries."""
    entries = entries or {}
    return RatVector((name, Fraction(entries.get(name, 0))) for name in components)


def make_curve(components, vertices, edges) -> TropicalCurve:
    """Curve from compact tuples.

    vertices: (id, {component: value}, boundary)
    edges:    (id, src, dst, {component: int})
    """
    vs = [TropicalVertex(vid, vec(components, coords), boundary)
          for vid, coords, boundary in vertices]
    es = [TropicalEdge(eid, src, dst, vec(components, weight))
          for eid, src, dst, weight in edges]
    return TropicalCurve(components, vs, es)


def star_on_face(degeneration: Degeneration, face, weights,
                 boundary_leaves: bool = True) -> TropicalCurve:
    """Star at the barycenter of a face, one leg per weight vector.

    Each weight must be an integer kernel vector supported on the face; the
    leaf of a leg sits at center + weight/(6 max|entry|), which keeps it in
    the relative interior and makes the weight a positive multiple of the
    displacement, so the curve passes strict validation whenever the
    weights are nonzero.
    """
    c = degeneration.complex
    face = tuple(face)
    val_a = c.covering_face(face).val_a
    center = {name: val_a / len(face) for name in face}
    maxw = max((abs(v) for w in weights for v in w.values()), default=1) or 1
    eps = val_a / (6 * maxw)
    vertices = [("c", center, False)]
    edges = []
    for k, w in enumerate(weights):
        leaf = {name: center.get(name, Fraction(0)) + eps * w.get(name, 0)
                for name in set(face) | set(w)}
        vertices.append((f"b{k}", leaf, boundary_leaves))
        edges.append((f"e{k}", "c", f"b{k}", w))
    return make_curve(c.components, vertices, edges)
