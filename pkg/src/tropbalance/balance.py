"""The balance verifier: weight sums at vertices against the alpha image.

At each non-boundary vertex v of a tropical curve the verifier forms the
weight sum sigma_v (all incident edge weights oriented away from v) and
decides whether sigma_v lies in the rational column span of the alpha
matrix of the face containing v. Membership comes with an exact witness, a
rational combination of the stratum's cycle classes whose intersection
vector is sigma_v; non-membership comes with an exact separating covector.

Passing is a necessary condition only, so reports say "consistent with the
balancing condition", never "realizable". A vertex interior to a top face
has the zero alpha map, and the test degenerates to the classical condition
sigma_v = 0. Boundary vertices are exempt and reported as skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from .chow import StratumCycleData, alpha_map, validate_cycle_data
from .complex import IntersectionComplex, j_set, locate
from .errors import (Finding, MissingCycleData, TropbalanceError)
from .ratlinalg import RatVector, rat_to_json, solve_membership
from .tropcurve import TropicalCurve, incident_weights, normalize, validate_curve

BALANCED = "balanced"
VIOLATED = "violated"
SKIPPED_BOUNDARY = "skipped_boundary"

ALL_BALANCED = "all_balanced"
HAS_VIOLATION = "has_violation"
HAS_ERRORS = "has_errors"


@dataclass(frozen=True)
class VertexVerdict:
    vertex: str
    face: Tuple[str, ...]
    sigma: RatVector
    status: str
    witness: Optional[RatVector] = None
    certificate: Optional[RatVector] = None
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class BalanceReport:
    verdicts: Tuple[VertexVerdict, ...]
    overall: str
    errors: Tuple[Finding, ...] = ()
    warnings: Tuple[Finding, ...] = ()


def sigma(t: TropicalCurve, vertex_id: str) -> RatVector:
    """Sum of the incident weights at a vertex, all oriented away from it."""
    total = RatVector.zero(t.components)
    for weight in incident_weights(t, vertex_id):
        total = total + weight
    return total


def check_vertex(c: IntersectionComplex,
                 cycle_data: Mapping[frozenset, StratumCycleData],
                 t: TropicalCurve, vertex_id: str) -> VertexVerdict:
    """Verdict for one vertex: locate its face, form sigma, test membership."""
    vertex = t.vertex(vertex_id)
    face = locate(c, vertex.coords)
    sig = sigma(t, vertex_id)
    if vertex.boundary:
        return VertexVerdict(vertex_id, face, sig, SKIPPED_BOUNDARY)
    data = cycle_data.get(frozenset(face))
    if data is None:
        raise MissingCycleData(
            f"stratum {list(face)} has no cycle data (needed at vertex {vertex_id!r})")
    notes: List[str] = []
    if not data.projective:
        notes.append(f"projectivity of stratum {list(face)} is not attested")
    if not sig.support() <= set(j_set(c, face)):
        notes.append("sigma has support outside the extendable components J of the face")
    alpha = alpha_map(data)
    result = solve_membership(alpha, sig)
    if result.is_member:
        if data.basis_names and result.witness.is_integral():
            notes.append("witness is integral (stronger than the rational membership tested)")
        return VertexVerdict(vertex_id, face, sig, BALANCED,
                             witness=result.witness, notes=tuple(notes))
    return VertexVerdict(vertex_id, face, sig, VIOLATED,
                         certificate=result.certificate, notes=tuple(notes))


def check_curve(c: IntersectionComplex,
                cycle_data: Mapping[frozenset, StratumCycleData],
                t: TropicalCurve, strict: bool = False) -> BalanceReport:
    """Normalize, validate, then check every vertex; aggregate the outcome.

    Validation errors and per-vertex failures do not abort the run; they are
    collected and force overall = has_errors. Verdicts are ordered by vertex
    id so the report is deterministic.
    """
    errors: List[Finding] = []
    warnings: List[Finding] = []
    try:
        t = normalize(c, t)
    except TropbalanceError as exc:
        return BalanceReport((), HAS_ERRORS, errors=(Finding(exc.code, exc.detail),))
    findings = validate_curve(c, t, strict)
    errors.extend(f for f in findings if f.is_error())
    warnings.extend(f for f in findings if not f.is_error())
    for key in sorted(cycle_data, key=c.sort_key):
        try:
            data_findings = validate_cycle_data(c.components, cycle_data[key], strict)
        except TropbalanceError as exc:
            errors.append(Finding(exc.code, exc.detail))
            continue
        errors.extend(f for f in data_findings if f.is_error())
        warnings.extend(f for f in data_findings if not f.is_error())
    if errors:
        return BalanceReport((), HAS_ERRORS, errors=tuple(errors), warnings=tuple(warnings))

    verdicts = []
    for vertex in sorted(t.vertices, key=lambda v: v.id):
        try:
            verdicts.append(check_vertex(c, cycle_data, t, vertex.id))
        except TropbalanceError as exc:
            errors.append(Finding(exc.code, exc.detail))
    if errors:
        overall = HAS_ERRORS
    elif any(v.status == VIOLATED for v in verdicts):
        overall = HAS_VIOLATION
    else:
        overall = ALL_BALANCED
    return BalanceReport(tuple(verdicts), overall,
                         errors=tuple(errors), warnings=tuple(warnings))


def report_to_json(report: BalanceReport) -> dict:
    """Encode a report; optional keys appear only when they carry content."""
    verdicts = []
    for v in report.verdicts:
        entry: Dict[str, object] = {
            "vertex": v.vertex,
            "face": list(v.face),
            "sigma": {label: rat_to_json(value) for label, value in v.sigma.items()},
            "status": v.status,
        }
        if v.witness is not None:
            entry["witness"] = v.witness.to_json()
        if v.certificate is not None:
            entry["certificate"] = v.certificate.to_json()
        entry["notes"] = list(v.notes)
        verdicts.append(entry)
    out: Dict[str, object] = {"overall": report.overall, "verdicts": verdicts}
    if report.errors:
        out["errors"] = [{"code": f.code, "detail": f.detail} for f in report.errors]
    return out
