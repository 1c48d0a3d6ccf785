"""Dual intersection complexes and their embedding as a skeleton.

The combinatorial shadow of a degeneration with normal-crossings special
fiber is recorded as: the ordered list of irreducible components, the set of
nonempty intersections (strata, one per subset of components that actually
meet), and for each maximal face the positive rational val_a, the valuation
of the local equation T_0 ... T_d = a along that face.

Each maximal face I embeds as the scaled standard simplex

    S_I = { sum_{i in I} r_i <D_i>  :  r_i >= 0, sum r_i = val_a }

inside Q^components, and the skeleton is the union of these simplices.
A point of the skeleton is located by its support: it lies in the relative
interior of the face whose components are exactly its nonzero coordinates.

Validation is report-style (a list of findings), because a verification
tool should show every defect of its input at once, not just the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .chow import BlownPlane, StratumCycleData, alpha_from_surface
from .errors import (Finding, IndexMismatch, NotInSkeleton, ParseError,
                     UnknownStratum, ValidationFailed)
from .ratlinalg import RatMatrix, RatVector, rat_from_json, rat_to_json

Stratum = frozenset


@dataclass(frozen=True)
class MaximalFace:
    components: frozenset
    val_a: Fraction


class IntersectionComplex:
    """Components, strata, and scaled maximal faces of a special fiber."""

    __slots__ = ("components", "strata", "maximal_faces", "_strata_set", "_index")

    def __init__(self, components: Sequence[str],
                 strata: Iterable[Iterable[str]],
                 maximal_faces: Iterable[Tuple[Iterable[str], Fraction]]):
        self.components = tuple(components)
        if len(set(self.components)) != len(self.components) or not self.components:
            raise ParseError("components must be a nonempty list of distinct names")
        self._index = {name: i for i, name in enumerate(self.components)}

        seen = set()
        ordered: List[frozenset] = []
        for subset in strata:
            s = self._subset(subset)
            if not s:
                raise ParseError("the empty set is not a stratum")
            if s in seen:
                raise ParseError(f"duplicate stratum {self.sorted_labels(s)}")
            seen.add(s)
            ordered.append(s)
        self.strata = tuple(ordered)
        self._strata_set = frozenset(ordered)

        faces = []
        for entry in maximal_faces:
            if isinstance(entry, MaximalFace):
                faces.append(MaximalFace(self._subset(entry.components), entry.val_a))
            else:
                subset, val_a = entry
                faces.append(MaximalFace(self._subset(subset), Fraction(val_a)))
        self.maximal_faces = tuple(faces)

    def _subset(self, labels: Iterable[str]) -> frozenset:
        labels = tuple(labels)
        for name in labels:
            if name not in self._index:
                raise ParseError(f"unknown component {name!r}")
        return frozenset(labels)

    def sorted_labels(self, subset: Iterable[str]) -> Tuple[str, ...]:
        """Labels of a subset in declared component order (the canonical form)."""
        return tuple(sorted(subset, key=self._index.__getitem__))

    def sort_key(self, subset: Iterable[str]):
        ids = tuple(sorted(self._index[name] for name in subset))
        return (len(ids), ids)

    def is_stratum(self, subset: Iterable[str]) -> bool:
        return frozenset(subset) in self._strata_set

    def covering_face(self, subset: Iterable[str]) -> Optional[MaximalFace]:
        """First declared maximal face whose support contains the subset."""
        s = frozenset(subset)
        for face in self.maximal_faces:
            if s <= face.components:
                return face
        return None


def validate_complex(c: IntersectionComplex) -> List[Finding]:
    """All structural violations of the complex, empty when it is valid."""
    findings: List[Finding] = []
    for name in c.components:
        if not c.is_stratum({name}):
            findings.append(Finding(
                "E_NOT_DOWNWARD_CLOSED",
                f"singleton stratum [{name!r}] is missing (every component is nonempty)"))
    for s in c.strata:
        if len(s) < 2:
            continue
        for name in c.sorted_labels(s):
            sub = s - {name}
            if not c.is_stratum(sub):
                findings.append(Finding(
                    "E_NOT_DOWNWARD_CLOSED",
                    f"stratum {list(c.sorted_labels(s))} present but subset "
                    f"{list(c.sorted_labels(sub))} is not"))
    for face in c.maximal_faces:
        labels = list(c.sorted_labels(face.components))
        if not c.is_stratum(face.components):
            findings.append(Finding("E_NOT_MAXIMAL", f"maximal face {labels} is not a stratum"))
        else:
            for s in c.strata:
                if face.components < s:
                    findings.append(Finding(
                        "E_NOT_MAXIMAL",
                        f"maximal face {labels} is strictly contained in stratum "
                        f"{list(c.sorted_labels(s))}"))
                    break
        if face.val_a <= 0:
            findings.append(Finding(
                "E_VAL_A_NONPOSITIVE", f"maximal face {labels} has val_a = {face.val_a} <= 0"))
    for i, f1 in enumerate(c.maximal_faces):
        for f2 in c.maximal_faces[i + 1:]:
            if f1.components & f2.components and f1.val_a != f2.val_a:
                findings.append(Finding(
                    "E_GLUE",
                    f"maximal faces {list(c.sorted_labels(f1.components))} and "
                    f"{list(c.sorted_labels(f2.components))} share components but carry "
                    f"val_a {f1.val_a} != {f2.val_a}"))
    for s in c.strata:
        if c.covering_face(s) is None:
            findings.append(Finding(
                "E_ORPHAN_STRATUM",
                f"stratum {list(c.sorted_labels(s))} is not contained in any maximal face"))
    return findings


def locate(c: IntersectionComplex, p: RatVector) -> Tuple[str, ...]:
    """Face of the skeleton whose relative interior contains ``p``.

    Returns the support of ``p`` as labels in declared order. Raises
    NotInSkeleton when a coordinate is negative, the support is not a
    stratum, or the coordinate sum differs from val_a of the covering face.
    """
    if set(p.labels) != set(c.components):
        raise IndexMismatch("point labels do not match the component list")
    for name in c.components:
        if p[name] < 0:
            raise NotInSkeleton(f"coordinate {name!r} is negative ({p[name]})")
    support = [name for name in c.components if p[name] > 0]
    if not support:
        raise NotInSkeleton("the zero vector is not on the skeleton")
    if not c.is_stratum(support):
        raise NotInSkeleton(f"support {support} is not a stratum")
    face = c.covering_face(support)
    if face is None:
        raise NotInSkeleton(f"no maximal face covers support {support}")
    total = p.total()
    if total != face.val_a:
        raise NotInSkeleton(
            f"coordinates sum to {total}, expected val_a = {face.val_a} "
            f"of face {list(c.sorted_labels(face.components))}")
    return tuple(support)


def j_set(c: IntersectionComplex, stratum: Iterable[str]) -> Tuple[str, ...]:
    """Components j such that the stratum extended by j is still a stratum.

    Always contains the stratum itself; it bounds the support of any weight
    sum at a vertex on this face.
    """
    s = frozenset(stratum)
    if not c.is_stratum(s):
        raise UnknownStratum(f"{sorted(stratum)} is not a stratum")
    return tuple(name for name in c.components if c.is_stratum(s | {name}))


def embed_faces(c: IntersectionComplex) -> List[Tuple[Tuple[str, ...], List[RatVector]]]:
    """Vertex coordinates of every maximal face's embedded simplex.

    Face I with scale val_a has vertices val_a * <D_i> for i in I. The union
    of these simplices is the whole skeleton; shared sub-simplices agree
    because validation forces equal val_a on overlapping faces.
    """
    findings = [f for f in validate_complex(c) if f.is_error()]
    if findings:
        raise ValidationFailed(findings)
    out = []
    for face in c.maximal_faces:
        labels = c.sorted_labels(face.components)
        vertices = [
            RatVector((name, face.val_a if name == pivot else Fraction(0))
                      for name in c.components)
            for pivot in labels]
        out.append((labels, vertices))
    return out


@dataclass(frozen=True)
class Degeneration:
    """A parsed degeneration file: the complex plus per-stratum cycle data."""

    complex: IntersectionComplex
    cycle_data: Mapping[frozenset, StratumCycleData]
    name: str = ""
    metadata: Optional[dict] = None

    def data_for(self, stratum: Iterable[str]) -> Optional[StratumCycleData]:
        return self.cycle_data.get(frozenset(stratum))


def _parse_stratum_entry(components: Sequence[str], entry: dict) -> Tuple[Tuple[str, ...], Optional[StratumCycleData]]:
    if not isinstance(entry, dict) or "components" not in entry:
        raise ParseError(f"stratum entry must be an object with 'components': {entry!r}")
    labels = entry["components"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise ParseError(f"stratum components must be a list of names: {labels!r}")
    projective = entry.get("projective", True)
    if not isinstance(projective, bool):
        raise ParseError("'projective' must be a boolean")

    has_inline = "alpha" in entry or "cycle_basis" in entry
    has_surface = "surface" in entry or "restrictions" in entry
    if has_inline and has_surface:
        raise ParseError(f"stratum {labels}: give either inline alpha or a surface model, not both")
    if has_inline:
        if "alpha" not in entry or "cycle_basis" not in entry:
            raise ParseError(f"stratum {labels}: 'cycle_basis' and 'alpha' go together")
        basis = entry["cycle_basis"]
        if not isinstance(basis, list) or not all(isinstance(x, str) for x in basis):
            raise ParseError(f"stratum {labels}: cycle_basis must be a list of names")
        alpha = RatMatrix.from_json(components, basis, entry["alpha"])
        return tuple(labels), StratumCycleData(tuple(labels), tuple(basis), alpha, projective)
    if has_surface:
        surface = entry.get("surface")
        restrictions = entry.get("restrictions")
        if (not isinstance(surface, dict) or surface.get("type") != "blown_plane"
                or not isinstance(surface.get("n_points"), int)
                or isinstance(surface.get("n_points"), bool)):
            raise ParseError(f"stratum {labels}: surface must be "
                             '{"type": "blown_plane", "n_points": int}')
        if not isinstance(restrictions, dict) or set(restrictions) != set(components):
            raise ParseError(f"stratum {labels}: restrictions must cover every component")
        plane = BlownPlane(surface["n_points"])
        classes = {}
        for name in components:
            vec = restrictions[name]
            if not isinstance(vec, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in vec):
                raise ParseError(f"stratum {labels}: restriction class for {name!r} "
                                 "must be a list of integers")
            classes[name] = vec
        data = alpha_from_surface(plane, classes, stratum=tuple(labels),
                                  strict=False, projective=projective)
        return tuple(labels), data
    return tuple(labels), None


def parse_degeneration(obj: object) -> Degeneration:
    """Decode the degeneration JSON schema into a validated-shape object.

    Structural problems (unknown names, malformed rationals, bad shapes) are
    ParseErrors; semantic problems are left to :func:`validate_complex`.
    """
    if not isinstance(obj, dict):
        raise ParseError("degeneration file must be a JSON object")
    components = obj.get("components")
    if not isinstance(components, list) or not all(isinstance(x, str) for x in components):
        raise ParseError("'components' must be a list of names")
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")

    strata_entries = obj.get("strata")
    if not isinstance(strata_entries, list):
        raise ParseError("'strata' must be a list")
    strata = []
    cycle_data: Dict[frozenset, StratumCycleData] = {}
    for entry in strata_entries:
        labels, data = _parse_stratum_entry(components, entry)
        strata.append(labels)
        if data is not None:
            cycle_data[frozenset(labels)] = data

    faces_entries = obj.get("maximal_faces")
    if not isinstance(faces_entries, list):
        raise ParseError("'maximal_faces' must be a list")
    faces = []
    for entry in faces_entries:
        if not isinstance(entry, dict) or "components" not in entry or "val_a" not in entry:
            raise ParseError(f"maximal face entry must have 'components' and 'val_a': {entry!r}")
        faces.append((entry["components"], rat_from_json(entry["val_a"])))

    complex_ = IntersectionComplex(components, strata, faces)
    metadata = obj.get("metadata")
    if metadata is not None and not isinstance(metadata, dict):
        raise ParseError("'metadata' must be an object")
    return Degeneration(complex_, cycle_data, name=name, metadata=metadata)


def degeneration_to_json(d: Degeneration) -> dict:
    """Encode back to the degeneration schema (canonical rationals)."""
    c = d.complex
    strata = []
    for s in c.strata:
        labels = c.sorted_labels(s)
        entry: dict = {"components": list(labels)}
        data = d.cycle_data.get(s)
        if data is not None:
            entry["cycle_basis"] = list(data.basis_names)
            entry["alpha"] = data.alpha.to_json()
            if not data.projective:
                entry["projective"] = False
        strata.append(entry)
    out = {
        "name": d.name,
        "components": list(c.components),
        "strata": strata,
        "maximal_faces": [
            {"components": list(c.sorted_labels(f.components)), "val_a": rat_to_json(f.val_a)}
            for f in c.maximal_faces],
    }
    if d.metadata is not None:
        out["metadata"] = d.metadata
    return out
