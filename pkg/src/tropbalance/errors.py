"""Error types and validation findings shared across the library.

Hard failures raise a :class:`TropbalanceError` subclass carrying a stable
machine-readable code (the CLI surfaces it as ``{"error": code, ...}``).
Structural validators never raise on bad data; they return lists of
:class:`Finding` records so callers can see every problem at once.
"""

from __future__ import annotations

from dataclasses import dataclass


class TropbalanceError(Exception):
    """Base class; ``code`` is stable and safe to match on."""

    code = "E_INTERNAL"

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail


class ParseError(TropbalanceError):
    code = "E_PARSE"


class IndexMismatch(TropbalanceError):
    code = "E_INDEX_MISMATCH"


class NotInSkeleton(TropbalanceError):
    code = "E_NOT_IN_SKELETON"


class UnknownStratum(TropbalanceError):
    code = "E_UNKNOWN_STRATUM"


class UnknownVertex(TropbalanceError):
    code = "E_UNKNOWN_VERTEX"


class UnknownEdge(TropbalanceError):
    code = "E_UNKNOWN_EDGE"


class UnknownFixture(TropbalanceError):
    code = "E_UNKNOWN_FIXTURE"


class NotInvertible(TropbalanceError):
    code = "E_NOT_INVERTIBLE"


class MissingFunction(TropbalanceError):
    code = "E_MISSING_FUNCTION"


class MissingCycleData(TropbalanceError):
    code = "E_MISSING_CYCLE_DATA"


class RelationViolated(TropbalanceError):
    code = "E_RELATION_VIOLATED"


class SegmentLeavesSkeleton(TropbalanceError):
    code = "E_SEGMENT_LEAVES_SKELETON"


class WeightMismatch(TropbalanceError):
    code = "E_WEIGHT_MISMATCH"


ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    """One named violation (or warning) from a report-style validator."""

    code: str
    detail: str
    severity: str = ERROR

    def is_error(self) -> bool:
        return self.severity == ERROR


class ValidationFailed(TropbalanceError):
    """Raised when an operation needs a valid structure but findings exist.

    The code of the first finding becomes the exception code, so callers see
    the concrete violation rather than a generic wrapper.
    """

    code = "E_VALIDATION"

    def __init__(self, findings):
        self.findings = tuple(findings)
        if self.findings:
            self.code = self.findings[0].code
        detail = "; ".join(f"{f.code}: {f.detail}" for f in self.findings)
        super().__init__(detail)
