"""Tropical curves: weighted oriented graphs embedded in a skeleton.

Vertices carry exact rational skeleton coordinates plus a boundary flag
(boundary vertices are exempt from the balancing test). An edge is the
straight segment between its endpoints and stores one integer weight vector
for its declared orientation; reversing the orientation negates the weight.

A valid edge weight is supported on the face containing the open segment,
has coordinate sum zero, and is a positive rational multiple of the
displacement vector to.coords - from.coords. The "points away from the
vertex" convention needed by the weight sum is applied at query time by
:func:`incident_weights`, never baked into storage.

Geometry is exact throughout: no floats, no epsilons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from .complex import IntersectionComplex, locate
from .errors import (ERROR, WARNING, Finding, IndexMismatch, NotInSkeleton,
                     ParseError, SegmentLeavesSkeleton, UnknownVertex)
from .ratlinalg import RatVector, rat_from_json, rat_to_json


@dataclass(frozen=True)
class TropicalVertex:
    id: str
    coords: RatVector
    boundary: bool = False


@dataclass(frozen=True)
class TropicalEdge:
    id: str
    src: str  # "from" in the wire format
    dst: str  # "to"
    weight: RatVector

    def displacement(self, curve: "TropicalCurve") -> RatVector:
        return curve.vertex(self.dst).coords - curve.vertex(self.src).coords


class TropicalCurve:
    """An immutable vertex/edge list over a fixed component universe."""

    __slots__ = ("components", "vertices", "edges", "_by_id")

    def __init__(self, components: Sequence[str],
                 vertices: Iterable[TropicalVertex],
                 edges: Iterable[TropicalEdge]):
        self.components = tuple(components)
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self._by_id = {}
        for v in self.vertices:
            if v.id in self._by_id:
                raise ParseError(f"duplicate vertex id {v.id!r}")
            if set(v.coords.labels) != set(self.components):
                raise IndexMismatch(f"vertex {v.id!r} coords not indexed by components")
            self._by_id[v.id] = v
        edge_ids = set()
        for e in self.edges:
            if e.id in edge_ids:
                raise ParseError(f"duplicate edge id {e.id!r}")
            edge_ids.add(e.id)
            if e.src not in self._by_id or e.dst not in self._by_id:
                raise ParseError(f"edge {e.id!r} has unresolved endpoint")
            if e.src == e.dst:
                raise ParseError(f"edge {e.id!r} is a loop")
            if set(e.weight.labels) != set(self.components):
                raise IndexMismatch(f"edge {e.id!r} weight not indexed by components")

    def vertex(self, vertex_id: str) -> TropicalVertex:
        try:
            return self._by_id[vertex_id]
        except KeyError:
            raise UnknownVertex(f"no vertex {vertex_id!r}") from None

    def has_vertex(self, vertex_id: str) -> bool:
        return vertex_id in self._by_id

    def edge(self, edge_id: str) -> Optional[TropicalEdge]:
        for e in self.edges:
            if e.id == edge_id:
                return e
        return None

    def edges_at(self, vertex_id: str) -> List[TropicalEdge]:
        return [e for e in self.edges if vertex_id in (e.src, e.dst)]

    def with_edges(self, edges: Iterable[TropicalEdge]) -> "TropicalCurve":
        return TropicalCurve(self.components, self.vertices, edges)


def reverse_edge(e: TropicalEdge) -> TropicalEdge:
    """Swap endpoints and negate the weight; an involution."""
    return TropicalEdge(id=e.id, src=e.dst, dst=e.src, weight=-e.weight)


def edge_face(curve: TropicalCurve, e: TropicalEdge) -> frozenset:
    """Support of the open segment: the union of the endpoint supports.

    Coordinates vary affinely along the segment and are nonnegative at both
    ends, so a coordinate is positive somewhere inside if and only if it is
    positive at an endpoint; the interior support is constant.
    """
    return curve.vertex(e.src).coords.support() | curve.vertex(e.dst).coords.support()


def _parallel_factor(weight: RatVector, disp: RatVector) -> Optional[Fraction]:
    """The rational lambda with weight = lambda * disp, or None."""
    factor = None
    for label in weight.labels:
        d = disp[label]
        if d != 0:
            factor = weight[label] / d
            break
    if factor is None:
        # disp = 0: only the zero weight is parallel
        return Fraction(0) if weight.is_zero() else None
    for label in weight.labels:
        if weight[label] != factor * disp[label]:
            return None
    return factor


def validate_curve(c: IntersectionComplex, t: TropicalCurve,
                   strict: bool = False) -> List[Finding]:
    """Every violation of the vertex and edge invariants.

    Zero weights and wrong-sign weights are degeneracies: errors in strict
    mode, warnings otherwise. Everything else is an error in both modes.
    """
    if tuple(t.components) != tuple(c.components):
        raise IndexMismatch("curve components do not match the complex")
    findings: List[Finding] = []
    located = {}
    for v in t.vertices:
        try:
            located[v.id] = locate(c, v.coords)
        except NotInSkeleton as exc:
            findings.append(Finding("E_OFF_SKELETON", f"vertex {v.id!r}: {exc.detail}"))
    soft = ERROR if strict else WARNING
    for e in t.edges:
        if e.src not in located or e.dst not in located:
            continue  # endpoint already reported
        face = frozenset(edge_face(t, e))
        if not c.is_stratum(face):
            findings.append(Finding(
                "E_EDGE_SPANS_FACES",
                f"edge {e.id!r}: endpoint supports union to {sorted(face)}, not a stratum"))
        if not e.weight.support() <= face:
            findings.append(Finding(
                "E_WEIGHT_SUPPORT",
                f"edge {e.id!r}: weight support {sorted(e.weight.support())} is not "
                f"contained in the edge face {sorted(face)}"))
        if e.weight.total() != 0:
            findings.append(Finding(
                "E_WEIGHT_SUM", f"edge {e.id!r}: weight coordinates sum to {e.weight.total()}"))
        disp = e.displacement(t)
        factor = _parallel_factor(e.weight, disp)
        if factor is None:
            findings.append(Finding(
                "E_NOT_PARALLEL",
                f"edge {e.id!r}: weight is not a rational multiple of the displacement"))
        elif factor == 0:
            findings.append(Finding(
                "E_ZERO_WEIGHT", f"edge {e.id!r}: weight is zero", soft))
        elif factor < 0:
            findings.append(Finding(
                "E_ORIENTATION",
                f"edge {e.id!r}: weight points against the edge orientation "
                f"(factor {factor})", soft))
    return findings


def normalize(c: IntersectionComplex, t: TropicalCurve) -> TropicalCurve:
    """Check that every open edge segment stays on the skeleton.

    Along a straight segment between skeleton points every coordinate is
    affine and nonnegative at both ends, so the interior support is constant
    (the union of the endpoint supports): a segment can never cross from the
    relative interior of one face into another. Normalization therefore
    inserts no vertices; it verifies each interior outright and returns the
    curve unchanged, which also makes it trivially idempotent. Explicit
    subdivision is available via :func:`subdivide_edge`.
    """
    half = Fraction(1, 2)
    for e in t.edges:
        a = t.vertex(e.src).coords
        b = t.vertex(e.dst).coords
        try:
            locate(c, a)
            locate(c, b)
        except NotInSkeleton:
            continue  # endpoint defects belong to validate_curve
        midpoint = a.scale(half) + b.scale(half)
        try:
            locate(c, midpoint)
        except NotInSkeleton as exc:
            raise SegmentLeavesSkeleton(
                f"edge {e.id!r}: interior point leaves the skeleton ({exc.detail})") from None
    return t


def subdivide_edge(t: TropicalCurve, edge_id: str, s: Fraction,
                   vertex_id: Optional[str] = None) -> TropicalCurve:
    """Split one edge at parameter ``s`` in (0, 1) of its segment.

    Both halves keep the original orientation and inherit the weight
    unchanged, so the inserted vertex sees the weight once outgoing and once
    incoming and is always balanced.
    """
    s = Fraction(s)
    if not 0 < s < 1:
        raise ParseError(f"subdivision parameter must lie strictly inside (0,1), got {s}")
    e = t.edge(edge_id)
    if e is None:
        raise ParseError(f"no edge {edge_id!r}")
    a = t.vertex(e.src).coords
    b = t.vertex(e.dst).coords
    point = a.scale(1 - s) + b.scale(s)
    new_id = vertex_id or f"{edge_id}@{s.numerator}_{s.denominator}"
    if t.has_vertex(new_id):
        raise ParseError(f"vertex id {new_id!r} already taken")
    mid = TropicalVertex(id=new_id, coords=point, boundary=False)
    first = TropicalEdge(id=f"{edge_id}@L", src=e.src, dst=new_id, weight=e.weight)
    second = TropicalEdge(id=f"{edge_id}@R", src=new_id, dst=e.dst, weight=e.weight)
    edges = [first if x.id == edge_id else x for x in t.edges]
    edges.insert(edges.index(first) + 1, second)
    return TropicalCurve(t.components, t.vertices + (mid,), edges)


def incident_weights(t: TropicalCurve, vertex_id: str) -> List[RatVector]:
    """Weights of all edges at a vertex, each oriented away from it.

    An incoming edge contributes its negated weight; parallel edges each
    contribute separately. Order follows the declared edge order.
    """
    t.vertex(vertex_id)  # raises UnknownVertex
    out: List[RatVector] = []
    for e in t.edges:
        if e.src == vertex_id:
            out.append(e.weight)
        elif e.dst == vertex_id:
            out.append(-e.weight)
    return out


def parse_curve(components: Sequence[str], obj: object) -> TropicalCurve:
    """Decode the curve JSON schema; omitted coordinates and weights are 0."""
    if not isinstance(obj, dict):
        raise ParseError("curve file must be a JSON object")
    vertex_entries = obj.get("vertices")
    edge_entries = obj.get("edges")
    if not isinstance(vertex_entries, list) or not isinstance(edge_entries, list):
        raise ParseError("curve file needs 'vertices' and 'edges' lists")
    vertices = []
    for entry in vertex_entries:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError(f"vertex entry needs a string 'id': {entry!r}")
        boundary = entry.get("boundary", False)
        if not isinstance(boundary, bool):
            raise ParseError(f"vertex {entry['id']!r}: 'boundary' must be a boolean")
        coords = RatVector.from_json(components, entry.get("coords", {}),
                                     what=f"vertex {entry['id']!r} coords")
        vertices.append(TropicalVertex(entry["id"], coords, boundary))
    edges = []
    for entry in edge_entries:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), str):
            raise ParseError(f"edge entry needs a string 'id': {entry!r}")
        for key in ("from", "to"):
            if not isinstance(entry.get(key), str):
                raise ParseError(f"edge {entry['id']!r} needs string '{key}'")
        weight_obj = entry.get("weight", {})
        if not isinstance(weight_obj, dict):
            raise ParseError(f"edge {entry['id']!r}: weight must be an object")
        for key, value in weight_obj.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParseError(f"edge {entry['id']!r}: weight entry {key!r} must be an integer")
        weight = RatVector.from_json(components, weight_obj,
                                     what=f"edge {entry['id']!r} weight")
        edges.append(TropicalEdge(entry["id"], entry["from"], entry["to"], weight))
    return TropicalCurve(components, vertices, edges)


def curve_to_json(t: TropicalCurve) -> dict:
    """Encode back to the curve schema with full, canonical vectors."""
    vertices = []
    for v in t.vertices:
        entry = {"id": v.id, "coords": v.coords.to_json()}
        if v.boundary:
            entry["boundary"] = True
        vertices.append(entry)
    edges = []
    for e in t.edges:
        weight = {}
        for label, value in e.weight.items():
            if value.denominator != 1:
                raise ParseError(f"edge {e.id!r}: weight entry {label!r} is not an integer")
            weight[label] = value.numerator
        edges.append({"id": e.id, "from": e.src, "to": e.dst, "weight": weight})
    return {"vertices": vertices, "edges": edges}
