"""Command-line frontend.

Subcommands: check, alpha, weights, skeleton, locate, fixture. JSON is the
interchange format; ``check --format text`` renders the same data for
humans. Exit codes: 0 on success (check: everything balanced or skipped),
1 when check finds a violation, 2 on any parse or validation error, in
which case the only output is the object {"error": code, "detail": ...}.

Output is byte-identical for identical inputs: orderings are fixed by the
declared component order, the declared face order, and vertex ids. Nothing
is written before a run is known to succeed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from .balance import (ALL_BALANCED, HAS_ERRORS, BalanceReport, check_curve,
                      report_to_json)
from .complex import (Degeneration, embed_faces, locate, parse_degeneration,
                      validate_complex)
from .errors import (MissingCycleData, NotInvertible, ParseError,
                     TropbalanceError, UnknownEdge, UnknownStratum,
                     ValidationFailed, WeightMismatch)
from .fixtures import fixture
from .newton import edge_weight, parse_annuli
from .ratlinalg import RatVector, rat_format, rat_parse, rat_to_json
from .tropcurve import TropicalCurve, TropicalEdge, parse_curve

_JSON_KW = {"indent": 2, "ensure_ascii": True}


def _dump(obj: object) -> str:
    return json.dumps(obj, **_JSON_KW)


def _load_json(path: str) -> object:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None


def _load_degeneration(path: str) -> Degeneration:
    degeneration = parse_degeneration(_load_json(path))
    findings = [f for f in validate_complex(degeneration.complex) if f.is_error()]
    if findings:
        raise ValidationFailed(findings)
    return degeneration


def _apply_weights(curve: TropicalCurve, path: str, mode: str) -> TropicalCurve:
    """Compute per-edge weights from annulus data and set or verify them."""
    components, per_edge = parse_annuli(_load_json(path))
    if tuple(components) != tuple(curve.components):
        raise ParseError(
            f"annuli components {list(components)} do not match the degeneration "
            f"components {list(curve.components)}")
    computed = {}
    for edge_id, annuli in per_edge:
        if curve.edge(edge_id) is None:
            raise UnknownEdge(f"annuli name edge {edge_id!r}, absent from the curve")
        try:
            computed[edge_id] = edge_weight(annuli, components)
        except NotInvertible as exc:
            raise NotInvertible(f"edge {edge_id!r}: {exc.detail}") from None
    if mode == "verify":
        for edge_id, weight in computed.items():
            stored = curve.edge(edge_id).weight
            if stored != weight:
                raise WeightMismatch(
                    f"edge {edge_id!r}: stored weight {stored.to_json()} differs from "
                    f"computed weight {weight.to_json()}")
        return curve
    edges = [TropicalEdge(e.id, e.src, e.dst, computed[e.id]) if e.id in computed else e
             for e in curve.edges]
    return curve.with_edges(edges)


def _vec_text(v: RatVector) -> str:
    parts = [f"{label}={rat_format(value)}" for label, value in v.items() if value != 0]
    return " ".join(parts) if parts else "0"


def _report_text(report: BalanceReport) -> str:
    lines = [f"overall: {report.overall}"]
    for v in report.verdicts:
        face = ",".join(v.face)
        line = f"vertex {v.vertex}: {v.status} (face {face}) sigma {_vec_text(v.sigma)}"
        if v.status == "balanced":
            line += f"; consistent with the balancing condition, witness {_vec_text(v.witness)}"
        elif v.status == "violated":
            line += f"; violates the balancing condition, certificate {_vec_text(v.certificate)}"
        for note in v.notes:
            line += f"; note: {note}"
        lines.append(line)
    return "\n".join(lines)


def _cmd_check(args) -> Tuple[str, int]:
    degeneration = _load_degeneration(args.degeneration)
    curve = parse_curve(degeneration.complex.components, _load_json(args.curve))
    if args.weights:
        curve = _apply_weights(curve, args.weights, args.weights_mode)
    report = check_curve(degeneration.complex, degeneration.cycle_data, curve,
                         strict=args.strict)
    for warning in report.warnings:
        print(f"WARN {warning.code}: {warning.detail}", file=sys.stderr)
    if report.overall == HAS_ERRORS:
        raise ValidationFailed(report.errors)
    out = _report_text(report) if args.format == "text" else _dump(report_to_json(report))
    return out, 0 if report.overall == ALL_BALANCED else 1


def _cmd_alpha(args) -> Tuple[str, int]:
    degeneration = _load_degeneration(args.degeneration)
    labels = [part.strip() for part in args.stratum.split(",") if part.strip()]
    c = degeneration.complex
    if not c.is_stratum(labels):
        raise UnknownStratum(f"{labels} is not a stratum")
    data = degeneration.data_for(labels)
    if data is None:
        raise MissingCycleData(f"stratum {labels} has no cycle data")
    out = {
        "stratum": list(c.sorted_labels(labels)),
        "cycle_basis": list(data.basis_names),
        "alpha": data.alpha.to_json(),
    }
    return _dump(out), 0


def _cmd_weights(args) -> Tuple[str, int]:
    components, per_edge = parse_annuli(_load_json(args.annuli))
    edges = []
    for edge_id, annuli in per_edge:
        try:
            weight = edge_weight(annuli, components)
        except NotInvertible as exc:
            raise NotInvertible(f"edge {edge_id!r}: {exc.detail}") from None
        edges.append({
            "edge_id": edge_id,
            "weight": {label: value.numerator for label, value in weight.items()},
        })
    return _dump({"edges": edges}), 0


def _cmd_skeleton(args) -> Tuple[str, int]:
    degeneration = _load_degeneration(args.degeneration)
    faces = []
    for labels, vertices in embed_faces(degeneration.complex):
        face = degeneration.complex.covering_face(labels)
        faces.append({
            "components": list(labels),
            "val_a": rat_to_json(face.val_a),
            "vertices": [v.to_json() for v in vertices],
        })
    return _dump({"faces": faces}), 0


def _parse_point(components, text: str) -> RatVector:
    assignments = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, sep, value = chunk.partition("=")
        name = name.strip()
        if not sep:
            raise ParseError(f"point entry {chunk!r} is not name=rational")
        if name not in components:
            raise ParseError(f"unknown component {name!r} in point")
        if name in assignments:
            raise ParseError(f"component {name!r} assigned twice")
        assignments[name] = rat_parse(value)
    return RatVector((name, assignments.get(name, 0)) for name in components)


def _cmd_locate(args) -> Tuple[str, int]:
    degeneration = _load_degeneration(args.degeneration)
    point = _parse_point(degeneration.complex.components, args.point)
    face = locate(degeneration.complex, point)
    return _dump({"face": list(face)}), 0


def _cmd_fixture(args) -> Tuple[str, int]:
    degeneration_json, curve_json = fixture(args.name)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for suffix, payload in (("degeneration", degeneration_json), ("curve", curve_json)):
        path = out_dir / f"{args.name}.{suffix}.json"
        path.write_text(_dump(payload) + "\n", encoding="utf-8")
        written.append(str(path))
    return _dump({"written": written}), 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropbalance",
        description="Verify the balancing condition of tropical curves on a "
                    "degeneration skeleton, with exact rational arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="check a curve against a degeneration")
    check.add_argument("--degeneration", required=True, metavar="FILE")
    check.add_argument("--curve", required=True, metavar="FILE")
    check.add_argument("--weights", metavar="FILE",
                       help="annulus data; edge weights are computed from it")
    check.add_argument("--weights-mode", choices=("set", "verify"), default="set",
                       help="overwrite curve weights or verify them (default: set)")
    check.add_argument("--strict", action="store_true",
                       help="treat degenerate weights and relation failures as errors")
    check.add_argument("--format", choices=("json", "text"), default="json")
    check.set_defaults(func=_cmd_check)

    alpha = sub.add_parser("alpha", help="print the alpha matrix of one stratum")
    alpha.add_argument("--degeneration", required=True, metavar="FILE")
    alpha.add_argument("--stratum", required=True, metavar="D0,D1")
    alpha.set_defaults(func=_cmd_alpha)

    weights = sub.add_parser("weights", help="extract edge weights from annulus data")
    weights.add_argument("--annuli", required=True, metavar="FILE")
    weights.set_defaults(func=_cmd_weights)

    skeleton = sub.add_parser("skeleton", help="print the embedded skeleton faces")
    skeleton.add_argument("--degeneration", required=True, metavar="FILE")
    skeleton.set_defaults(func=_cmd_skeleton)

    loc = sub.add_parser("locate", help="locate a point on the skeleton")
    loc.add_argument("--degeneration", required=True, metavar="FILE")
    loc.add_argument("--point", required=True, metavar="D0=1/2,D1=1/2")
    loc.set_defaults(func=_cmd_locate)

    fix = sub.add_parser("fixture", help="write a built-in fixture to disk")
    fix.add_argument("name", metavar="NAME")
    fix.add_argument("--out", default=".", metavar="DIR")
    fix.set_defaults(func=_cmd_fixture)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        out, code = args.func(args)
    except TropbalanceError as exc:
        print(_dump({"error": exc.code, "detail": exc.detail}))
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
