"""Built-in worked degenerations, used as golden data and documentation.

k3-quartic
    The pencil  x0 x1 x2 x3 + t P4 = 0  in projective 3-space, P4 a generic
    quartic: a family of quartic surfaces degenerating to the four
    coordinate planes D0..D3. The 24 conical double points (four on each of
    the six coordinate lines) are resolved by small resolutions obtained by
    blowing up the divisors D0, D1, D2, D3 in that order; the resolved
    components are planes blown up at 0, 4, 8 and 12 points, with the four
    points over the line {i, j} (i < j) blown up on the higher-index side.
    The dual complex is the hollow tetrahedron (every proper subset of the
    four planes meets, all four do not), all scales val_a = 1.

    Cycle data follows from the diagonal intersection form on each blown-up
    plane together with the relation that the component classes restrict to
    zero: the column for the vertex D0 and for the edge {D0, D1} is
    (-3, 1, 1, 1); edge {i, j} carries -3 at the smaller index and 1
    elsewhere; the two-dimensional faces are points with no curve classes,
    so their alpha is the zero-column matrix. Strata not pinned down by the
    worked example are derived from the resolution model above and listed
    under metadata["derived_alpha"].

toric-simplex
    One solid triangle {D0, D1, D2} with val_a = 1 and no curve classes on
    any stratum, so the check degenerates to the classical balancing
    condition sigma_v = 0 everywhere.

Both fixtures ship a sample curve: a balanced three-legged star in the
interior of a two-dimensional face, with boundary-flagged leaves.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Tuple

from .chow import BlownPlane, StratumCycleData, alpha_from_surface, restrict_to_curve
from .complex import Degeneration, IntersectionComplex, degeneration_to_json
from .errors import UnknownFixture
from .ratlinalg import RatMatrix

FIXTURE_NAMES = ("k3-quartic", "toric-simplex")

_K3_COMPONENTS = ("D0", "D1", "D2", "D3")


def _k3_surface(v: int) -> Tuple[BlownPlane, Dict[str, List[int]]]:
    """Resolution model of component D_v and the restriction classes on it.

    D_v is a plane blown up at 4v points: for each i < v, the four double
    points on the coordinate line {i, v} are blown up on the D_v side. Basis
    (H, E1..E_{4v}), the block E_{4i+1}..E_{4i+4} lying over line {i, v}.
    The restriction of D_i (i < v) is the strict transform of that line,
    H minus its block; components above v restrict to untouched lines H;
    D_v itself restricts to minus the sum of the others.
    """
    n = 4 * v
    surface = BlownPlane(n)
    dim = n + 1

    def block(i: int) -> List[int]:
        vec = [0] * dim
        for j in range(4 * i + 1, 4 * i + 5):
            vec[j] = 1
        return vec

    classes: Dict[str, List[int]] = {}
    own = [-3] + [1] * n
    for m, name in enumerate(_K3_COMPONENTS):
        if m == v:
            classes[name] = own
        elif m < v:
            vec = block(m)
            classes[name] = [1] + [-x for x in vec[1:]]
        else:
            classes[name] = [1] + [0] * n
    return surface, classes


def _k3_edge_data(i: int, j: int) -> StratumCycleData:
    """Alpha column of the edge curve D_i . D_j, computed on the D_j side.

    The edge curve sits inside the higher-index component as the strict
    transform of the line {i, j}, the class H minus the block of the four
    blown-up points; pairing it against every restriction class gives the
    column (-3 at index i, 1 elsewhere).
    """
    surface, classes = _k3_surface(j)
    # the edge curve and the restriction of D_i to D_j are the same class
    curve = classes[_K3_COMPONENTS[i]]
    column = [restrict_to_curve(surface, curve, classes[name]) for name in _K3_COMPONENTS]
    stratum = (_K3_COMPONENTS[i], _K3_COMPONENTS[j])
    alpha = RatMatrix(_K3_COMPONENTS, ("pt-class",), [[value] for value in column])
    return StratumCycleData(stratum, ("pt-class",), alpha)


def k3_quartic() -> Degeneration:
    """The resolved quartic pencil: hollow tetrahedron with full cycle data."""
    names = _K3_COMPONENTS
    strata = [tuple(s) for size in (1, 2, 3) for s in combinations(names, size)]
    faces = [(s, Fraction(1)) for s in combinations(names, 3)]
    complex_ = IntersectionComplex(names, strata, faces)

    cycle_data: Dict[frozenset, StratumCycleData] = {}
    for v, name in enumerate(names):
        surface, classes = _k3_surface(v)
        cycle_data[frozenset({name})] = alpha_from_surface(
            surface, classes, stratum=(name,))
    for i, j in combinations(range(4), 2):
        data = _k3_edge_data(i, j)
        cycle_data[frozenset(data.stratum)] = data
    for s in combinations(names, 3):
        cycle_data[frozenset(s)] = StratumCycleData(
            s, (), RatMatrix(names, (), [[] for _ in names]))

    derived = [["D1"], ["D2"], ["D3"],
               ["D0", "D2"], ["D0", "D3"], ["D1", "D2"], ["D1", "D3"], ["D2", "D3"]]
    return Degeneration(complex_, cycle_data, name="k3-quartic",
                        metadata={"derived_alpha": derived})


def toric_simplex() -> Degeneration:
    """A solid triangle with zero alpha maps: classical balancing only."""
    names = ("D0", "D1", "D2")
    strata = [tuple(s) for size in (1, 2, 3) for s in combinations(names, size)]
    complex_ = IntersectionComplex(names, strata, [(names, Fraction(1))])
    cycle_data = {
        frozenset(s): StratumCycleData(tuple(s), (), RatMatrix(names, (), [[] for _ in names]))
        for s in strata}
    return Degeneration(complex_, cycle_data, name="toric-simplex")


def _star_curve(face: Tuple[str, str, str]) -> dict:
    """Balanced three-legged star in the interior of one triangular face.

    Center at the barycenter; each leg points toward a corner with the
    primitive integer weight parallel to it. The three weights cancel, the
    leaves are boundary-flagged, so the only checked vertex is the center.
    """
    a, b, c = face
    third = "1/3"
    half, quarter = "1/2", "1/4"

    def coords(at: Dict[str, str]) -> Dict[str, str]:
        return {name: at.get(name, "0") for name in face}

    weights = {
        "e0": {a: 2, b: -1, c: -1},
        "e1": {a: -1, b: 2, c: -1},
        "e2": {a: -1, b: -1, c: 2},
    }
    leaves = {
        "b0": coords({a: half, b: quarter, c: quarter}),
        "b1": coords({a: quarter, b: half, c: quarter}),
        "b2": coords({a: quarter, b: quarter, c: half}),
    }
    vertices = [{"id": "c", "coords": coords({a: third, b: third, c: third})}]
    for leaf_id in ("b0", "b1", "b2"):
        vertices.append({"id": leaf_id, "coords": leaves[leaf_id], "boundary": True})
    edges = [
        {"id": "e0", "from": "c", "to": "b0", "weight": weights["e0"]},
        {"id": "e1", "from": "c", "to": "b1", "weight": weights["e1"]},
        {"id": "e2", "from": "c", "to": "b2", "weight": weights["e2"]},
    ]
    return {"vertices": vertices, "edges": edges}


def fixture(name: str) -> Tuple[dict, dict]:
    """Degeneration and sample-curve JSON objects for a built-in fixture."""
    if name == "k3-quartic":
        degeneration = k3_quartic()
        curve = _star_curve(("D0", "D1", "D2"))
    elif name == "toric-simplex":
        degeneration = toric_simplex()
        curve = _star_curve(("D0", "D1", "D2"))
    else:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {list(FIXTURE_NAMES)}")
    return degeneration_to_json(degeneration), curve
