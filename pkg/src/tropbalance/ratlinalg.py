"""Exact rational arithmetic and certificate-producing linear algebra.

Scalars are arbitrary-precision rationals (``fractions.Fraction``), always
canonical: positive denominator, reduced to lowest terms. Vectors and
matrices are indexed by component names instead of bare positions, because
everything downstream (skeleton coordinates, intersection matrices, weight
vectors) is naturally keyed by the names of the degeneration components.

:func:`solve_membership` decides, over the rationals, whether a target
vector lies in the column span of a matrix. It never returns a bare
verdict: a "member" answer carries an exact preimage (witness) and a
"non_member" answer carries an exact separating covector y with
``y^T M = 0`` and ``y^T target != 0`` (certificate). Elimination pivots on
the first nonzero entry in declared label order, so witnesses and
certificates are deterministic across platforms.

No floating point is used or accepted anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from .errors import IndexMismatch, ParseError

Rational = Fraction
RationalLike = Union[int, Fraction]


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"exact rational expected, got {value!r}")
    return Fraction(value)


def rat_parse(text: str) -> Fraction:
    """Parse a decimal integer or ``"p/q"`` into a canonical rational."""
    if not isinstance(text, str):
        raise ParseError(f"rational text expected, got {text!r}")
    num, sep, den = text.strip().partition("/")
    try:
        if sep:
            p, q = int(num), int(den)
        else:
            p, q = int(num), 1
    except ValueError:
        raise ParseError(f"not a rational: {text!r}") from None
    if q == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def rat_format(value: RationalLike) -> str:
    """Canonical text form: ``"p/q"`` with q > 1, else the bare integer."""
    x = _as_fraction(value)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rat_from_json(value: object) -> Fraction:
    """Decode the wire format: a JSON integer or a ``"p/q"`` string."""
    if isinstance(value, bool):
        raise ParseError(f"rational expected, got boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise ParseError(f"rational must be a JSON integer or 'p/q' string, got {value!r}")


def rat_to_json(value: RationalLike) -> Union[int, str]:
    """Encode canonically: integers as JSON integers, otherwise ``"p/q"``."""
    x = _as_fraction(value)
    if x.denominator == 1:
        return x.numerator
    return rat_format(x)


class RatVector:
    """Immutable rational vector with named, ordered coordinates."""

    __slots__ = ("_labels", "_entries")

    def __init__(self, items: Union[Mapping[str, RationalLike], Iterable[Tuple[str, RationalLike]]] = ()):
        if isinstance(items, Mapping):
            items = items.items()
        entries: dict[str, Fraction] = {}
        for label, value in items:
            if label in entries:
                raise IndexMismatch(f"duplicate label {label!r}")
            entries[label] = _as_fraction(value)
        self._labels = tuple(entries)
        self._entries = entries

    @classmethod
    def zero(cls, labels: Iterable[str]) -> "RatVector":
        return cls((label, 0) for label in labels)

    @classmethod
    def from_json(cls, labels: Sequence[str], obj: object, *, what: str = "vector") -> "RatVector":
        """Decode ``{label: rational}``; labels absent from ``obj`` default to 0."""
        if not isinstance(obj, dict):
            raise ParseError(f"{what} must be a JSON object, got {obj!r}")
        unknown = [key for key in obj if key not in labels]
        if unknown:
            raise ParseError(f"{what} has unknown labels {unknown}")
        return cls((label, rat_from_json(obj[label]) if label in obj else Fraction(0)) for label in labels)

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    def __len__(self) -> int:
        return len(self._labels)

    def __getitem__(self, label: str) -> Fraction:
        return self._entries[label]

    def get(self, label: str, default: RationalLike = 0) -> Fraction:
        return self._entries.get(label, _as_fraction(default))

    def items(self) -> Iterator[Tuple[str, Fraction]]:
        return iter(self._entries.items())

    def values(self) -> Tuple[Fraction, ...]:
        return tuple(self._entries[label] for label in self._labels)

    def support(self) -> frozenset:
        return frozenset(label for label, value in self._entries.items() if value != 0)

    def total(self) -> Fraction:
        return sum(self._entries.values(), Fraction(0))

    def is_zero(self) -> bool:
        return all(value == 0 for value in self._entries.values())

    def _aligned(self, other: "RatVector") -> None:
        if set(self._labels) != set(other._labels):
            raise IndexMismatch(f"labels differ: {self._labels} vs {other._labels}")

    def __add__(self, other: "RatVector") -> "RatVector":
        self._aligned(other)
        return RatVector((label, self._entries[label] + other._entries[label]) for label in self._labels)

    def __sub__(self, other: "RatVector") -> "RatVector":
        self._aligned(other)
        return RatVector((label, self._entries[label] - other._entries[label]) for label in self._labels)

    def __neg__(self) -> "RatVector":
        return RatVector((label, -value) for label, value in self._entries.items())

    def scale(self, factor: RationalLike) -> "RatVector":
        c = factor if isinstance(factor, Fraction) else _as_fraction(factor)
        return RatVector((label, c * value) for label, value in self._entries.items())

    def dot(self, other: "RatVector") -> Fraction:
        self._aligned(other)
        return sum((self._entries[label] * other._entries[label] for label in self._labels), Fraction(0))

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self._entries.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatVector):
            return NotImplemented
        return self._entries == other._entries

    __hash__ = None  # mutable-equality semantics; not a dict key

    def __repr__(self) -> str:
        body = ", ".join(f"{label}={rat_format(value)}" for label, value in self._entries.items())
        return f"RatVector({body})"

    def to_json(self) -> dict:
        return {label: rat_to_json(self._entries[label]) for label in self._labels}


class RatMatrix:
    """Immutable dense rational matrix with named rows and columns."""

    __slots__ = ("_row_labels", "_col_labels", "_rows")

    def __init__(self, row_labels: Iterable[str], col_labels: Iterable[str],
                 rows: Iterable[Iterable[RationalLike]]):
        self._row_labels = tuple(row_labels)
        self._col_labels = tuple(col_labels)
        if len(set(self._row_labels)) != len(self._row_labels):
            raise IndexMismatch("duplicate row labels")
        if len(set(self._col_labels)) != len(self._col_labels):
            raise IndexMismatch("duplicate column labels")
        self._rows = tuple(tuple(_as_fraction(v) for v in row) for row in rows)
        if len(self._rows) != len(self._row_labels) or any(len(r) != len(self._col_labels) for r in self._rows):
            raise IndexMismatch(
                f"entry grid is not {len(self._row_labels)}x{len(self._col_labels)}")

    @classmethod
    def zero(cls, row_labels: Iterable[str], col_labels: Iterable[str]) -> "RatMatrix":
        rows = tuple(row_labels)
        cols = tuple(col_labels)
        return cls(rows, cols, [[0] * len(cols) for _ in rows])

    @classmethod
    def from_columns(cls, row_labels: Sequence[str], columns: Iterable[Tuple[str, Sequence[RationalLike]]]) -> "RatMatrix":
        cols = list(columns)
        col_labels = [name for name, _ in cols]
        rows = [[col[i] for _, col in cols] for i in range(len(row_labels))]
        return cls(row_labels, col_labels, rows)

    @classmethod
    def from_json(cls, row_labels: Sequence[str], col_labels: Sequence[str], rows: object) -> "RatMatrix":
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise ParseError("matrix must be a JSON list of rows")
        return cls(row_labels, col_labels, [[rat_from_json(v) for v in row] for row in rows])

    @property
    def row_labels(self) -> Tuple[str, ...]:
        return self._row_labels

    @property
    def col_labels(self) -> Tuple[str, ...]:
        return self._col_labels

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self._row_labels), len(self._col_labels))

    def at(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def entry(self, row_label: str, col_label: str) -> Fraction:
        return self._rows[self._row_labels.index(row_label)][self._col_labels.index(col_label)]

    def row(self, label: str) -> RatVector:
        return RatVector(zip(self._col_labels, self._rows[self._row_labels.index(label)]))

    def column(self, label: str) -> RatVector:
        j = self._col_labels.index(label)
        return RatVector((r, self._rows[i][j]) for i, r in enumerate(self._row_labels))

    def columns(self) -> Iterator[Tuple[str, RatVector]]:
        for label in self._col_labels:
            yield label, self.column(label)

    def matvec(self, x: RatVector) -> RatVector:
        """Exact product M x; x must be indexed by the column labels."""
        if set(x.labels) != set(self._col_labels):
            raise IndexMismatch("vector labels do not match column labels")
        xs = [x[c] for c in self._col_labels]
        return RatVector(
            (label, sum((a * b for a, b in zip(row, xs)), Fraction(0)))
            for label, row in zip(self._row_labels, self._rows))

    def vecmat(self, y: RatVector) -> RatVector:
        """Exact product y^T M; y must be indexed by the row labels."""
        if set(y.labels) != set(self._row_labels):
            raise IndexMismatch("vector labels do not match row labels")
        ys = [y[r] for r in self._row_labels]
        return RatVector(
            (label, sum((ys[i] * self._rows[i][j] for i in range(len(ys))), Fraction(0)))
            for j, label in enumerate(self._col_labels))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self._row_labels == other._row_labels
                and self._col_labels == other._col_labels
                and self._rows == other._rows)

    __hash__ = None

    def __repr__(self) -> str:
        return f"RatMatrix({len(self._row_labels)}x{len(self._col_labels)})"

    def to_json(self) -> list:
        return [[rat_to_json(v) for v in row] for row in self._rows]


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of an exact column-span membership test.

    member: ``witness`` solves M witness = target exactly.
    non_member: ``certificate`` is a covector y with y^T M = 0, y^T target != 0.
    """

    verdict: str  # "member" | "non_member"
    witness: Optional[RatVector] = None
    certificate: Optional[RatVector] = None

    @property
    def is_member(self) -> bool:
        return self.verdict == "member"


def _rref(rows: list, aug: list) -> list:
    """Reduced row echelon form in place; ``aug`` rows get the same row ops.

    Pivot rule: scan columns left to right, pivot on the first row (top to
    bottom) with a nonzero entry. Returns the pivot list [(row, col), ...].
    """
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    pr = 0
    for pc in range(ncols):
        pivot = next((r for r in range(pr, nrows) if rows[r][pc] != 0), None)
        if pivot is None:
            continue
        if pivot != pr:
            rows[pr], rows[pivot] = rows[pivot], rows[pr]
            aug[pr], aug[pivot] = aug[pivot], aug[pr]
        inv = Fraction(1) / rows[pr][pc]
        rows[pr] = [v * inv for v in rows[pr]]
        aug[pr] = [v * inv for v in aug[pr]]
        for r in range(nrows):
            if r != pr and rows[r][pc] != 0:
                f = rows[r][pc]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pr])]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[pr])]
        pivots.append((pr, pc))
        pr += 1
        if pr == nrows:
            break
    return pivots


def solve_membership(m: RatMatrix, target: RatVector) -> MembershipResult:
    """Decide exactly whether ``target`` lies in the column span of ``m``.

    The witness is the solution with all free variables set to zero; the
    certificate is the transform row of the first inconsistent equation.
    Both are fully determined by the pivot rule.
    """
    if set(target.labels) != set(m.row_labels):
        raise IndexMismatch("target labels do not match matrix row labels")
    n = len(m.row_labels)
    k = len(m.col_labels)
    rows = [list(m._rows[i]) for i in range(n)]
    # aug = [E | E t]: the accumulated row transform and its action on target
    t = [target[label] for label in m.row_labels]
    aug = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] + [t[i]] for i in range(n)]
    pivots = _rref(rows, aug)
    for r in range(len(pivots), n):
        if aug[r][n] != 0:
            certificate = RatVector(zip(m.row_labels, aug[r][:n]))
            return MembershipResult("non_member", certificate=certificate)
    x = [Fraction(0)] * k
    for r, c in pivots:
        x[c] = aug[r][n]
    return MembershipResult("member", witness=RatVector(zip(m.col_labels, x)))


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals."""
    rows = [list(row) for row in m._rows]
    aug = [[] for _ in rows]
    return len(_rref(rows, aug))
