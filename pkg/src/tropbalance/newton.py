"""Tropical weight extraction from Laurent-series data on annuli.

An invertible function on an open annulus has a single dominant term: one
exponent m whose term strictly beats every other term in absolute value
across the whole annulus, so that the valuation of the function is the
affine map  val(f(z)) = val(f_m) + m * val(z).  Writing the annulus as an
open interval (s_lo, s_hi) of valuations of z, each term (m, val(f_m))
becomes the line  s -> val(f_m) + m*s,  and the dominant term is the line
lying strictly below all others on the interval, when it exists.

Because exponents are distinct integers, the slopes are pairwise distinct
and the lower envelope of the lines is piecewise linear with a well-defined
first and last line. That gives an O(#terms) test: at s_lo take the
value-minimizing line of smallest slope (it wins just right of s_lo), at
s_hi the value-minimizing line of largest slope (it wins just left of
s_hi); a single dominant line exists iff the two picks agree. If they do
not, the envelope changes lines inside the interval and the function has a
zero on the annulus: there is no weight to extract (E_NOT_INVERTIBLE).

The component-wise dominant exponents form the weight vector of one
annulus; the weight of an edge is the sum over the annuli lying over it.
Data is consumed as given: the caller is responsible for including every
term that could dominate on the interval (absent terms are treated as
valuation +infinity).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import MissingFunction, NotInvertible, ParseError
from .ratlinalg import RatVector, rat_from_json, rat_to_json

Interval = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class LaurentData:
    """Finite list of (exponent, valuation of coefficient) terms."""

    terms: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self):
        if not self.terms:
            raise ParseError("a Laurent datum needs at least one term")
        exponents = [m for m, _ in self.terms]
        if len(set(exponents)) != len(exponents):
            raise ParseError(f"duplicate exponents in {exponents}")

    @classmethod
    def of(cls, *terms: Tuple[int, object]) -> "LaurentData":
        return cls(tuple((int(m), Fraction(v)) for m, v in terms))

    @classmethod
    def from_json(cls, obj: object, *, what: str = "function") -> "LaurentData":
        if not isinstance(obj, list):
            raise ParseError(f"{what} must be a list of terms")
        terms = []
        for entry in obj:
            if (not isinstance(entry, dict) or "m" not in entry or "val" not in entry
                    or isinstance(entry["m"], bool) or not isinstance(entry["m"], int)):
                raise ParseError(f"{what}: term must be {{'m': int, 'val': rational}}, got {entry!r}")
            terms.append((entry["m"], rat_from_json(entry["val"])))
        return cls(tuple(terms))

    def to_json(self) -> list:
        return [{"m": m, "val": rat_to_json(v)} for m, v in self.terms]


@dataclass(frozen=True)
class AnnulusData:
    """One annulus: the open val(z) interval and one Laurent datum per component."""

    val_interval: Interval
    functions: Mapping[str, LaurentData]

    def __post_init__(self):
        lo, hi = self.val_interval
        if not lo < hi:
            raise ParseError(f"annulus interval must satisfy lo < hi, got ({lo}, {hi})")


def _extreme_minimizer(terms: Sequence[Tuple[int, Fraction]], s: Fraction,
                       largest_slope: bool) -> int:
    """Among the value-minimizing lines at s, the extreme-slope exponent."""
    best = None
    best_value = None
    for m, val in terms:
        value = val + m * s
        if best_value is None or value < best_value:
            best, best_value = m, value
        elif value == best_value and ((m > best) if largest_slope else (m < best)):
            best = m
    return best


def dominant_exponent(f: LaurentData, interval: Interval) -> int:
    """The exponent whose line is strictly minimal on the whole open interval.

    Raises NotInvertible when the lower envelope changes lines inside the
    interval (no single term dominates).
    """
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if not lo < hi:
        raise ParseError(f"interval must be open and nonempty, got ({lo}, {hi})")
    first = _extreme_minimizer(f.terms, lo, largest_slope=False)
    last = _extreme_minimizer(f.terms, hi, largest_slope=True)
    if first != last:
        raise NotInvertible(
            f"no dominant term on ({lo}, {hi}): envelope starts on exponent "
            f"{first} and ends on exponent {last}")
    return first


def annulus_weight(a: AnnulusData, components: Sequence[str]) -> RatVector:
    """Per-component dominant exponents of one annulus, as an integer vector.

    The vector is expressed in the orientation for which the image moves
    along the edge as val(z) increases.
    """
    entries = []
    for name in components:
        f = a.functions.get(name)
        if f is None:
            raise MissingFunction(f"no Laurent data for component {name!r}")
        try:
            entries.append((name, dominant_exponent(f, a.val_interval)))
        except NotInvertible as exc:
            raise NotInvertible(f"component {name!r}: {exc.detail}") from None
    return RatVector(entries)


def edge_weight(annuli: Iterable[AnnulusData], components: Sequence[str]) -> RatVector:
    """Sum of the annulus weights over all annuli lying over one edge."""
    total = RatVector.zero(components)
    for a in annuli:
        total = total + annulus_weight(a, components)
    return total


def parse_annuli(obj: object) -> Tuple[Tuple[str, ...], List[Tuple[str, List[AnnulusData]]]]:
    """Decode the annuli JSON schema: components plus per-edge annulus lists."""
    if not isinstance(obj, dict):
        raise ParseError("annuli file must be a JSON object")
    components = obj.get("components")
    if not isinstance(components, list) or not all(isinstance(x, str) for x in components):
        raise ParseError("'components' must be a list of names")
    edges_entries = obj.get("edges")
    if not isinstance(edges_entries, list):
        raise ParseError("'edges' must be a list")
    edges = []
    for entry in edges_entries:
        if not isinstance(entry, dict) or not isinstance(entry.get("edge_id"), str):
            raise ParseError(f"edge entry needs a string 'edge_id': {entry!r}")
        annuli_entries = entry.get("annuli")
        if not isinstance(annuli_entries, list):
            raise ParseError(f"edge {entry['edge_id']!r}: 'annuli' must be a list")
        annuli = []
        for a in annuli_entries:
            if not isinstance(a, dict):
                raise ParseError(f"annulus entry must be an object: {a!r}")
            iv = a.get("val_z_interval")
            if not isinstance(iv, list) or len(iv) != 2:
                raise ParseError("'val_z_interval' must be [lo, hi]")
            functions_obj = a.get("functions")
            if not isinstance(functions_obj, dict):
                raise ParseError("'functions' must be an object")
            unknown = [k for k in functions_obj if k not in components]
            if unknown:
                raise ParseError(f"functions for unknown components {unknown}")
            functions = {
                name: LaurentData.from_json(functions_obj[name],
                                            what=f"function for {name!r}")
                for name in components if name in functions_obj}
            annuli.append(AnnulusData(
                (rat_from_json(iv[0]), rat_from_json(iv[1])), functions))
        edges.append((entry["edge_id"], annuli))
    return tuple(components), edges


def weights_to_json(results: Iterable[Tuple[str, RatVector]]) -> dict:
    """Encode per-edge weights to the output schema."""
    edges = []
    for edge_id, weight in results:
        edges.append({
            "edge_id": edge_id,
            "weight": {label: value.numerator for label, value in weight.items()},
        })
    return {"edges": edges}
