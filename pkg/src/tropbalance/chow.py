"""Curve-class data on strata and the intersection map alpha.

For a stratum of the special fiber one records a basis of its group of
one-dimensional cycle classes and, for each basis class L and each component
D_i, the intersection number L . D_i. Assembled as a matrix (rows = all
components, columns = basis classes) this is the map alpha whose rational
image the balance verifier tests against.

For genuine degenerations the components satisfy the single relation
"sum of all component divisors restricts to zero on each stratum", which
forces every alpha column to sum to zero. Strict mode enforces this;
lenient mode lets exploratory data through with a warning.

A small helper models projective planes blown up at n points, with the
standard diagonal intersection form on the basis (H, E_1 .. E_n): H.H = 1,
E_j.E_j = -1, mixed products 0. That is enough to generate the alpha data
for degenerations whose strata are blown-up planes, such as the built-in
quartic fixture.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple

from .errors import ERROR, WARNING, Finding, IndexMismatch, ParseError, RelationViolated
from .ratlinalg import RatMatrix, RationalLike, _as_fraction

ClassVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class StratumCycleData:
    """A cycle-class basis on one stratum and its intersection matrix.

    ``alpha`` has one row per component of the whole special fiber (not just
    the stratum) and one column per basis class. ``projective`` is an input
    attestation, not something checkable from this data; when false, reports
    carry a note.
    """

    stratum: Tuple[str, ...]
    basis_names: Tuple[str, ...]
    alpha: RatMatrix
    projective: bool = True

    def __post_init__(self):
        if self.alpha.col_labels != tuple(self.basis_names):
            raise IndexMismatch("alpha columns must be labelled by the basis names")


def alpha_map(data: StratumCycleData) -> RatMatrix:
    """The matrix of the intersection map for this stratum.

    Columns are the basis classes; row i holds the intersection numbers with
    the i-th component divisor. An empty basis yields a zero-column matrix
    (the map from the trivial group), which is the top-dimensional case where
    the only balanced weight sum is zero.
    """
    return data.alpha


@dataclass(frozen=True)
class BlownPlane:
    """A projective plane blown up at ``n_points`` points.

    Curve classes are integer vectors over the basis (H, E_1 .. E_n) where H
    is the pullback of a line and E_j are the exceptional curves.
    """

    n_points: int

    def __post_init__(self):
        if self.n_points < 0:
            raise ParseError("n_points must be nonnegative")

    @property
    def basis_names(self) -> Tuple[str, ...]:
        return ("H",) + tuple(f"E{j}" for j in range(1, self.n_points + 1))

    @property
    def dim(self) -> int:
        return self.n_points + 1

    def coerce(self, klass: Sequence[RationalLike]) -> ClassVector:
        vec = tuple(_as_fraction(v) for v in klass)
        if len(vec) != self.dim:
            raise IndexMismatch(
                f"class vector has {len(vec)} entries, surface basis has {self.dim}")
        return vec


def restrict_to_curve(surface: BlownPlane, curve_class: Sequence[RationalLike],
                      divisor_class: Sequence[RationalLike]) -> Fraction:
    """Intersection number of a divisor class with a curve class.

    The form is diagonal in the (H, E_1 .. E_n) basis: <H, H> = 1 and
    <E_j, E_j> = -1, so the pairing is bilinear and symmetric.
    """
    a = surface.coerce(curve_class)
    b = surface.coerce(divisor_class)
    total = a[0] * b[0]
    for x, y in zip(a[1:], b[1:]):
        total -= x * y
    return total


def alpha_from_surface(surface: BlownPlane,
                       restriction_classes: Mapping[str, Sequence[RationalLike]],
                       *, stratum: Iterable[str], strict: bool = True,
                       projective: bool = True) -> StratumCycleData:
    """Build cycle data for a stratum modelled by a blown-up plane.

    ``restriction_classes`` maps every component name to the class, on this
    surface, of that component's restriction; its order fixes the row order
    and should be the declared component order. The alpha entry at
    (component, basis class) is their intersection number. In strict mode
    the classes must sum to the zero vector, the relation satisfied by the
    components of an actual degeneration.
    """
    components = tuple(restriction_classes)
    classes = {name: surface.coerce(vec) for name, vec in restriction_classes.items()}
    total = [Fraction(0)] * surface.dim
    for vec in classes.values():
        total = [t + v for t, v in zip(total, vec)]
    if strict and any(v != 0 for v in total):
        raise RelationViolated(
            "restriction classes do not sum to zero: " + str([str(v) for v in total]))
    basis = surface.basis_names
    unit = [tuple(Fraction(1) if i == j else Fraction(0) for i in range(surface.dim))
            for j in range(surface.dim)]
    rows = [[restrict_to_curve(surface, unit[j], classes[name]) for j in range(surface.dim)]
            for name in components]
    alpha = RatMatrix(components, basis, rows)
    return StratumCycleData(stratum=tuple(stratum), basis_names=basis,
                            alpha=alpha, projective=projective)


def validate_cycle_data(components: Sequence[str], data: StratumCycleData,
                        strict: bool = False) -> list:
    """Check one stratum's cycle data against the shared component list.

    Label mismatches are hard errors. A nonzero column sum is a finding:
    an error in strict mode, otherwise a warning.
    """
    if tuple(data.alpha.row_labels) != tuple(components):
        raise IndexMismatch(
            f"alpha rows for stratum {list(data.stratum)} are not indexed by the component list")
    findings = []
    for name, column in data.alpha.columns():
        total = column.total()
        if total != 0:
            findings.append(Finding(
                "E_COLUMN_SUM",
                f"stratum {list(data.stratum)} column {name!r} sums to {total}, expected 0",
                ERROR if strict else WARNING))
    return findings
