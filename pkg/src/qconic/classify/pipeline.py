"""From a conic specification to its invariants, cross-checked against the classification tables."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..cliffinite import (
    CAClass,
    abelian_point_count,
    c_algebra,
    classify_CA,
    spec_count as spec_count_of,
)
from ..errors import DomainError, InconsistencyError
from ..exactfield.linalg import echelon, rank
from ..exactfield.literal import format_field
from ..exactfield.mpoly import MPoly
from ..exactfield.ratfunc import context_of
from ..freequad.free import FreeElem
from ..freequad.quadalg import (
    QuadAlgebra,
    annihilator,
    center_basis,
    commutative_algebra,
    is_quantum_candidate,
    same_span,
    skew_algebra,
    square_central,
)
from ..pointgeo.catalog import entry as catalog_entry
from ..pointgeo.geometry import algebra_sigma_order, point_variety_EA, sigma_order_bar
from ..pointgeo.points import INFINITE
from .ksearch import format_linear, square_roots
from .spec import ConicSpec
from .tables import COMMUTATIVE_TABLE, INVOLUTION_TABLE, UNKNOWN, commutative_row, involution_row

TL_RELATIONS = ("y*z - z*y + x^2", "z*x - x*z", "x*y - y*x")

# catalog representative of each ambient type (rows of the ambient table)
_REPRESENTATIVE = {"P": ("P", {"alpha": 1}), "TL": ("TL", {"alpha": 1}), "S": ("S1", {"alpha": -1}),
                   "S'": ("S'", {"alpha": -1}), "NC": ("NC", {"alpha": -1})}


def ambient_type(spec: ConicSpec) -> str:
    """Which ambient-table row the presentation instantiates."""
    if spec.family == "COMMUTATIVE":
        return "P"
    if spec.family == "TL":
        return "TL"
    params = spec.skew_params()
    nonzero = sum(1 for p in params if p)
    if nonzero == 3:
        return "EC"
    return ("S", "S'", "NC")[nonzero]


def build_algebra(spec: ConicSpec):
    """(S, f) with f checked to be a central quadric of S."""
    ctx = spec.ctx
    if spec.family == "COMMUTATIVE":
        S = commutative_algebra(ctx)
    elif spec.family == "TL":
        S = QuadAlgebra(TL_RELATIONS, family=("TL", ()), ctx=ctx)
    else:
        S = skew_algebra(*spec.skew_params(), ctx=ctx)
    if not is_quantum_candidate(S):
        raise DomainError("not a quantum polynomial candidate")
    a, b, c = spec.f
    f = FreeElem({(0, 0): a, (1, 1): b, (2, 2): c}, ctx, degree=2)
    center = center_basis(S, 2)
    vecs = [z.to_vector() for z in center]
    if echelon(vecs + [S.normal_form(f).to_vector()], 9).rank != len(center):
        raise DomainError("f ∉ Z(S)₂: f is not a central element of degree 2")
    return S, f


def sylvester_rank(f) -> int:
    """Rank of a nonzero symmetric 3x3 matrix, or of diag(a, b, c) for a triple."""
    if len(f) == 3 and not isinstance(f[0], (list, tuple)):
        rows = [[f[0], 0, 0], [0, f[1], 0], [0, 0, f[2]]]
    else:
        rows = [list(r) for r in f]
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise DomainError("expected a 3x3 matrix")
        if any(rows[i][j] != rows[j][i] for i in range(3) for j in range(3)):
            raise DomainError("matrix is not symmetric")
    ctx = context_of(*(v for r in rows for v in r))
    sparse = [{j: ctx.convert(v) for j, v in enumerate(r) if v} for r in rows]
    r = rank(sparse, 3)
    if r == 0:
        raise DomainError("zero quadric")
    return r


QUADRIC_KIND = {1: "a double line", 2: "two lines", 3: "a smooth conic"}
REDUCED_DESCRIPTION = {1: "a line", 2: "two lines", 3: "a smooth conic"}


# dual presentation -------------------------------------------------------------------

def _rotate(seq, k):
    return tuple(seq[(i + k) % 3] for i in range(3))


def _dual_quadrics(spec: ConicSpec):
    """The two quadrics G1, G2 of A! as coefficient dicts over x, y, z (exponent tuples)."""
    ctx = spec.ctx
    coeffs = spec.f
    shift = next(k for k in range(3) if coeffs[k])  # cyclic permutation to a nonzero coefficient
    a, b, c = _rotate(coeffs, shift)
    x, y, z = _rotate(MPoly.gens(("x", "y", "z"), ctx), shift)
    if spec.family in ("SKEW", "SKLYANIN"):
        al, be, ga = _rotate(spec.skew_params(), shift)
        X, Y, Z = x * x - y * z * al, y * y - x * z * be, z * z - x * y * ga
        return [Y * a - X * b, Z * a - X * c], "k[x,y,z]"
    # commutative ambient ring: squares only, anticommuting generators
    g1, g2 = y * y * a - x * x * b, z * z * a - x * x * c
    out = []
    for g in (g1, g2):
        lead = g.terms.get(_rotate_exp((2, 0, 0), shift))
        if lead is not None and _negative(lead):
            g = -g
        out.append(g)
    return out, "k_{-1}[x,y,z]"


def _rotate_exp(e, shift):
    out = [0, 0, 0]
    for i in range(3):
        out[(i + shift) % 3] = e[i]
    return tuple(out)


def _negative(c) -> bool:
    return format_field(c).startswith("-")


def dual_presentation(spec: ConicSpec) -> dict:
    """A! = ring/(G1, G2); verified against (R + k f)^perp."""
    (g1, g2), ring = _dual_quadrics(spec)
    S, f = build_algebra(spec)
    _check_dual(S, f, (g1, g2), ring)
    rels = [str(g1), str(g2)]
    return {"ring": ring, "relations": rels, "text": f"{ring}/({', '.join(rels)})"}


def _lift(g: MPoly, ctx, skew: bool) -> dict:
    """A free-algebra lift (on u, v, w) of a commutative quadric; mixed terms split evenly."""
    vec = {}
    for e, c in g.terms.items():
        letters = [k for k in range(3) for _ in range(e[k])]
        i, j = letters
        if i == j:
            vec[i * 4] = vec.get(i * 4, ctx.zero) + c
        else:
            if skew:
                raise InconsistencyError("mixed term in a k_{-1} relation")
            half = c / 2
            vec[i * 3 + j] = vec.get(i * 3 + j, ctx.zero) + half
            vec[j * 3 + i] = vec.get(j * 3 + i, ctx.zero) + half
    return {k: v for k, v in vec.items() if v}


def _check_dual(S, f, gs, ring):
    ctx = S.ctx
    rels = [r.to_vector() for r in S.relations] + [f.to_vector()]
    perp = annihilator(rels, ctx)
    skew = ring.startswith("k_{-1}")
    sign = 1 if skew else -1
    pairs = [{i * 3 + j: ctx.one, j * 3 + i: ctx.one * sign} for i, j in ((0, 1), (1, 2), (2, 0))]
    expected = pairs + [_lift(g, ctx, skew) for g in gs]
    if not same_span(perp, expected):
        raise InconsistencyError("dual presentation disagrees with (R + k f)^perp",
                                 payload={"expected": [str(g) for g in gs]})


# records -------------------------------------------------------------------------------------

@dataclass
class InvariantRecord:
    spec: ConicSpec
    ambient: str
    sigma_class: str
    dimZ2: int
    ca_class: CAClass
    spec_count: int
    ea_count: object  # int, INFINITE or UNKNOWN
    ea_description: str
    dual: dict
    table_row: str
    consistent: bool
    g_found: list = field(default_factory=list)
    g_search_complete: bool = False
    ea_points: list | None = None

    def invariants(self):
        """The projective invariants (no presentation data)."""
        return (self.ambient, self.sigma_class, self.dimZ2, self.ca_class, self.spec_count,
                self.ea_count, self.ea_description, self.table_row, self.consistent)

    def to_json(self):
        spec = self.spec.to_json()
        witnesses = {"g_found": [format_linear(g) for g in self.g_found],
                     "g_search_complete": self.g_search_complete}
        if self.ea_points is not None:
            witnesses["ea_points"] = [p.to_json() for p in self.ea_points]
        return {
            "family": spec["family"],
            "params": spec["parameters"],
            "f": spec["f"],
            "type": self.ambient,
            "sigma_class": self.sigma_class,
            "dimZ2": self.dimZ2,
            "ca_class": str(self.ca_class),
            "ca_presentation": self.ca_class.presentation,
            "spec_count": self.spec_count,
            "ea_count": self.ea_count,
            "ea_description": self.ea_description,
            "dual": self.dual,
            "table_row": self.table_row,
            "consistent": self.consistent,
            "witnesses": witnesses,
        }


def _sigma_class(spec: ConicSpec, S: QuadAlgebra, ambient: str) -> str:
    if ambient == "EC":
        e = catalog_entry("EC")
        via_catalog = sigma_order_bar(e, e.bind({"lam": spec.skew_params()[0]}))
    else:
        tag, params = _REPRESENTATIVE[ambient]
        e = catalog_entry(tag)
        via_catalog = sigma_order_bar(e, e.bind(params))
    if ambient in ("P", "TL"):
        return via_catalog
    direct = algebra_sigma_order(S)
    if direct != via_catalog:
        raise InconsistencyError("table inconsistency: sigma order of the algebra disagrees with its catalog type",
                                 payload={"catalog": via_catalog, "algebra": direct})
    return direct


def _proportional(u, v) -> bool:
    return all(not (u[i] * v[j] - u[j] * v[i]) for i in range(3) for j in range(i + 1, 3))


def classify(spec: ConicSpec) -> InvariantRecord:
    S, f = build_algebra(spec)
    ambient = ambient_type(spec)
    sigma = _sigma_class(spec, S, ambient)
    dimZ2 = len(center_basis(S, 2))
    C = c_algebra(S, spec.f)
    ca = classify_CA(C)
    n_spec = abelian_point_count(C)
    if C.is_commutative() and spec_count_of(C) != n_spec:
        raise InconsistencyError("spec count of C(A) disagrees with its abelianization")
    dual = dual_presentation(spec)
    diag = {"spec": spec.to_json(), "type": ambient, "sigma_class": sigma, "ca_class": str(ca),
            "spec_count": n_spec}

    g_found, complete, points = [], False, None
    if sigma != "2":
        r = sylvester_rank(spec.f)
        ea, desc = INFINITE, REDUCED_DESCRIPTION[r]
        row = commutative_row(QUADRIC_KIND[r], n_spec, ca, ambient)
        if row is None:
            raise InconsistencyError("table inconsistency", payload={**diag, "E_A": QUADRIC_KIND[r]})
        table_row = row.label
    else:
        params = spec.skew_params()
        if spec.g is not None:
            sq = square_central(S, spec.g)
            if not any(sq) or not _proportional(sq, spec.f):
                raise DomainError("g^2 is not proportional to f")
            g_found = [spec.g]
        else:
            search = square_roots(params, spec.f)
            g_found, complete = [tuple(g) for g in search.roots], search.complete
            for g in g_found:
                if not _proportional(square_central(S, g), spec.f):
                    raise InconsistencyError("square search returned a g with g^2 not ~ f")
            if complete and len(g_found) != n_spec:
                raise InconsistencyError("table inconsistency: #K_f differs from #Spec C(A)",
                                         payload={**diag, "K_f": [format_linear(g) for g in g_found]})
        if g_found:
            pvs = [point_variety_EA(S, g) for g in g_found]
            if len({pv.count for pv in pvs}) != 1:
                raise InconsistencyError("E_A depends on the choice of g",
                                         payload={**diag, "counts": [pv.count for pv in pvs]})
            pv = pvs[0]
            ea, desc = pv.count, pv.description
            if pv.explicit:
                points = pv.points
        else:
            ea, desc = UNKNOWN, "unknown (no base-field g with g^2 ~ f)"
        row = involution_row(ea, n_spec, ca, ambient)
        if row is None:
            raise InconsistencyError("table inconsistency", payload={**diag, "ea_count": ea})
        table_row = row.label
    return InvariantRecord(spec, ambient, sigma, dimZ2, ca, n_spec, ea, desc, dual, table_row, True,
                           g_found, complete, points)


__all__ = [
    "InvariantRecord", "UNKNOWN", "ambient_type", "build_algebra", "classify", "dual_presentation",
    "sylvester_rank", "COMMUTATIVE_TABLE", "INVOLUTION_TABLE",
]
