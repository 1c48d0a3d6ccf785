"""Exact verifier for the balancing condition of tropical curves.

The library models the combinatorial data of a degeneration with simple
normal crossings: the dual intersection complex of the special fiber, its
embedding as a skeleton in rational coordinate space, and per-stratum
intersection data for curve classes. Tropical curves live on the skeleton
as graphs with exact rational vertices and integer edge weights; the
verifier decides, with exact witnesses and certificates, whether the weight
sum at every vertex lies in the rational span of the stratum's intersection
vectors. Edge weights can also be extracted from Laurent-series data on
annuli via the dominant-term criterion.

Everything is exact: rationals are arbitrary-precision fractions and no
floating point is used anywhere.
"""

from .balance import (BalanceReport, VertexVerdict, check_curve, check_vertex,
                      report_to_json, sigma)
from .chow import (BlownPlane, StratumCycleData, alpha_from_surface, alpha_map,
                   restrict_to_curve, validate_cycle_data)
from .complex import (Degeneration, IntersectionComplex, MaximalFace,
                      degeneration_to_json, embed_faces, j_set, locate,
                      parse_degeneration, validate_complex)
from .errors import Finding, TropbalanceError
from .fixtures import FIXTURE_NAMES, fixture, k3_quartic, toric_simplex
from .newton import (AnnulusData, LaurentData, annulus_weight,
                     dominant_exponent, edge_weight, parse_annuli)
from .ratlinalg import (MembershipResult, RatMatrix, Rational, RatVector,
                        rank, rat_format, rat_from_json, rat_parse,
                        rat_to_json, solve_membership)
from .tropcurve import (TropicalCurve, TropicalEdge, TropicalVertex,
                        curve_to_json, incident_weights, normalize,
                        parse_curve, reverse_edge, subdivide_edge,
                        validate_curve)

__version__ = "0.1.0"

__all__ = [
    "AnnulusData", "BalanceReport", "BlownPlane", "Degeneration",
    "FIXTURE_NAMES", "Finding", "IntersectionComplex", "LaurentData",
    "MaximalFace", "MembershipResult", "RatMatrix", "RatVector", "Rational",
    "StratumCycleData", "TropbalanceError", "TropicalCurve", "TropicalEdge",
    "TropicalVertex", "VertexVerdict", "alpha_from_surface", "alpha_map",
    "annulus_weight", "check_curve", "check_vertex", "curve_to_json",
    "degeneration_to_json", "dominant_exponent", "edge_weight", "embed_faces",
    "fixture", "incident_weights", "j_set", "k3_quartic", "locate",
    "normalize", "parse_annuli", "parse_curve", "parse_degeneration", "rank",
    "rat_format", "rat_from_json", "rat_parse", "rat_to_json",
    "report_to_json", "restrict_to_curve", "reverse_edge", "sigma",
    "solve_membership", "subdivide_edge", "toric_simplex",
    "validate_complex", "validate_curve", "validate_cycle_data",
]
