"""Symbolic verification of sigma, line intersections and point-variety counts."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DomainError, InconsistencyError
from ..exactfield.linalg import nullspace
from ..exactfield.mpoly import MPoly, divide
from ..exactfield.ratfunc import context_of
from ..exactfield.unipoly import UniPoly, base_field_roots, distinct_root_count, gcd, squarefree_part
from ..freequad.quadalg import QuadAlgebra, multilinearize
from .catalog import CUBE_ROOTS, CatalogEntry, sklyanin_charts, sklyanin_form
from .points import INFINITE, PointP2, form_coefficients, proportional, xyz


@dataclass
class Report:
    ok: bool = True
    failures: list = field(default_factory=list)
    checked: int = 0

    def fail(self, *witness):
        self.ok = False
        self.failures.append(witness)

    def __bool__(self):
        return self.ok


def _mod(poly: MPoly, form) -> MPoly:
    if form is None:
        return poly
    return divide(poly, [form])[1]


def _bilinear(rel, p, q):
    a = multilinearize(rel)
    total = None
    for i in range(3):
        for j in range(3):
            if a[i][j]:
                t = p[i] * q[j] * a[i][j]
                total = t if total is None else total + t
    return total if total is not None else p[0] * 0


def _minors_vanish(s, t, form) -> bool:
    return all(not _mod(s[i] * t[j] - s[j] * t[i], form) for i in range(3) for j in range(i + 1, 3))


def _degenerate(s, form) -> bool:
    return all(not _mod(c, form) for c in s)


def _apply(chart, s):
    return tuple(c(*s) for c in chart)


def verify_graph(entry: CatalogEntry, bindings=None) -> Report:
    """f(p, sigma(p)) = 0 on every component for every relation, and sigma maps E into E."""
    report = Report()
    for P in bindings if bindings is not None else entry.bindings():
        S = entry.algebra(P)
        comps = entry.components(P)
        charts = entry.charts(P)
        whole = None
        for c in comps:
            if c.form is not None:
                whole = c.form if whole is None else whole * c.form
        gens = xyz(P["_ctx"])
        for comp, comp_charts in zip(comps, charts):
            for chart in comp_charts:
                report.checked += 1
                if _degenerate(chart, comp.form):
                    report.fail(comp.name, "chart vanishes identically")
                    continue
                for rel in S.relations:
                    if _mod(_bilinear(rel, gens, chart), comp.form):
                        report.fail(comp.name, str(rel), _label(P))
                if whole is not None and _mod(whole(*chart), comp.form):
                    report.fail(comp.name, "image leaves E", _label(P))
    return report


def _label(P):
    return {k: str(v) for k, v in P.items() if not k.startswith("_")}


def _image_component(comps, s, src):
    for k, c in enumerate(comps):
        if c.form is None or not _mod(c.form(*s), comps[src].form):
            return k
    raise InconsistencyError("sigma image lies on no component")


def _compose(entry, P, i, start):
    """sigma^i on component ``start`` following images across components."""
    comps = entry.components(P)
    charts = entry.charts(P)
    s = tuple(xyz(P["_ctx"]))
    cur = start
    for _ in range(i):
        s = _apply(charts[cur][0], s)
        if _degenerate(s, comps[start].form):
            raise DomainError("chart degeneracy")
        cur = _image_component(comps, s, start)
    return s


def verify_iterates(entry: CatalogEntry, i: int, bindings=None) -> Report:
    """Composing sigma i times agrees projectively with the closed form for sigma^i."""
    report = Report()
    for P in bindings if bindings is not None else entry.bindings():
        comps = entry.components(P)
        closed = entry.iterate(P, i)
        for k, comp in enumerate(comps):
            report.checked += 1
            s = _compose(entry, P, i, k)
            if not _minors_vanish(s, closed[k], comp.form):
                report.fail(comp.name, i, _label(P))
    return report


def sigma_order_bar(entry: CatalogEntry, P: dict) -> str:
    """'1', '2' or 'other' according to the least power of sigma that is the identity."""
    comps = entry.components(P)
    gens = tuple(xyz(P["_ctx"]))
    for i in (1, 2):
        if all(_minors_vanish(_compose(entry, P, i, k), gens, c.form) for k, c in enumerate(comps)):
            return str(i)
    return "other"


# S^(alpha,beta,gamma): graph through the symmetric matrix M(p) ---------------------

def skew_matrix(S: QuadAlgebra, p):
    """Rows are the relations' bilinear forms in q at the point p."""
    rows = []
    for rel in S.relations:
        a = multilinearize(rel)
        rows.append([sum((p[i] * a[i][j] for i in range(3) if a[i][j]), p[0] * 0) for j in range(3)])
    return rows


def _adjugate_columns(m):
    def minor(r0, r1, c0, c1):
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
    cols = []
    for j in range(3):
        c = []
        for i in range(3):
            rs = [r for r in range(3) if r != j]
            cs = [k for k in range(3) if k != i]
            sign = -1 if (i + j) % 2 else 1
            c.append(minor(rs[0], rs[1], cs[0], cs[1]) * sign)
        cols.append(tuple(c))
    return cols


def point_variety_form(S: QuadAlgebra) -> MPoly:
    """det M(p); its zero set is the point variety E for relations with invertible symmetric part."""
    m = skew_matrix(S, xyz(S.ctx))
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def graph_charts(S: QuadAlgebra):
    """sigma as the three adjugate columns of M(p) (any nonzero one is a chart)."""
    return _adjugate_columns(skew_matrix(S, xyz(S.ctx)))


def algebra_sigma_order(S: QuadAlgebra) -> str:
    """sigma order computed from the graph of S itself, modulo det M."""
    F = point_variety_form(S)
    if not F:
        F = None  # E is the whole plane
    gens = tuple(xyz(S.ctx))
    charts = [c for c in graph_charts(S) if not _degenerate(c, F)]
    if not charts:
        raise DomainError("chart degeneracy")
    if all(_minors_vanish(c, gens, F) for c in charts):
        return "1"
    if all(_minors_vanish(_apply(c, c), gens, F) for c in charts):
        return "2"
    return "other"


# line restriction ----------------------------------------------------------------

def line_points(g):
    """Two base-field points spanning V(g): the free-column basis of g's kernel."""
    coeffs = form_coefficients(g) if isinstance(g, MPoly) else tuple(g)
    if not any(coeffs):
        raise DomainError("g = 0")
    ctx = context_of(*coeffs)
    row = {k: ctx.convert(c) for k, c in enumerate(coeffs) if c}
    basis = nullspace([row], 3, ctx.one)
    pts = [tuple(v.get(k, ctx.zero) for k in range(3)) for v in basis]
    return pts[0], pts[1]


def restrict(form: MPoly, p1, p2) -> UniPoly:
    """form(p1 + t p2) as a polynomial in t."""
    ctx = form.ctx.union(context_of(*p1, *p2))
    t = MPoly.gens(("t",), ctx)[0]
    one = MPoly.constant(("t",), 1, ctx)
    line = [one * p1[k] + t * p2[k] for k in range(3)]
    r = form(*line)
    if not isinstance(r, MPoly):
        return UniPoly([r], ctx)
    d = r.degree()
    coeffs = [r.terms.get((k,), ctx.zero) for k in range(max(d, 0) + 1)]
    return UniPoly(coeffs, ctx)


@dataclass
class LineIntersection:
    count: object  # int or INFINITE
    points: list
    restriction: UniPoly
    complete: bool  # all points are base-field and listed

    def to_json(self):
        return {"count": self.count, "points": [p.to_json() for p in self.points],
                "restriction": self.restriction.format("t"), "explicit": self.complete}


def intersect_line_component(g, comp_form: MPoly) -> LineIntersection:
    """V(g) meets V(comp_form); INFINITE when the line lies inside the curve."""
    p1, p2 = line_points(g)
    r = restrict(comp_form, p1, p2)
    if not r:
        return LineIntersection(INFINITE, [], r, False)
    at_infinity = r.degree < comp_form.degree()
    count = distinct_root_count(r) + (1 if at_infinity else 0)
    pts, complete = [], False
    if not r.ctx.names:
        roots = base_field_roots(r)
        pts = [PointP2([p1[k] + t * p2[k] for k in range(3)]) for t in roots]
        if at_infinity:
            pts.append(PointP2(p2))
        complete = len(pts) == count
    return LineIntersection(count, pts, r, complete)


# E_A for S^(alpha,beta,gamma)/(g^2) ------------------------------------------------------

@dataclass
class PointVariety:
    count: object
    T_count: int = 0
    overlap: int = 0
    points: list = field(default_factory=list)
    explicit: bool = False
    description: str = ""

    def to_json(self):
        out = {"count": self.count, "description": self.description}
        if self.count != INFINITE:
            out.update({"T": self.T_count, "T_cap_sigmaT": self.overlap})
        if self.explicit:
            out["points"] = [p.to_json() for p in self.points]
        return out


def _sigma_at(cols, p):
    for col in cols:
        v = tuple(c(*p) for c in col)
        if any(v):
            return v
    return None


def point_variety_EA(S: QuadAlgebra, g) -> PointVariety:
    """E_A = (E n V(g)) u sigma(E n V(g)) for A = S/(g^2), counted over the algebraic closure."""
    if not S.family or S.family[0] != "SKEW":
        raise DomainError("point_variety_EA needs an algebra with |sigma| = 2 (the S^(alpha,beta,gamma) family)")
    coeffs = form_coefficients(g) if isinstance(g, MPoly) else tuple(S.ctx.convert(c) for c in g)
    F = point_variety_form(S)
    p1, p2 = line_points(coeffs)
    r = restrict(F, p1, p2)
    if not r:
        return PointVariety(INFINITE, description="a line")
    cols = graph_charts(S)
    at_inf = r.degree < 3
    T = distinct_root_count(r) + (1 if at_inf else 0)
    # points of T whose sigma-image is also on V(g)
    ctx = r.ctx
    hs = []
    for col in cols:
        image = [restrict(c, p1, p2) for c in col]
        h = sum((image[k] * coeffs[k] for k in range(3) if coeffs[k]), UniPoly([], ctx))
        hs.append(h)
    common = r
    for h in hs:
        if h:
            common = gcd(common, h)
    overlap = squarefree_part(common).degree
    if at_inf:
        s = _sigma_at(cols, p2)
        if s is None or not sum((s[k] * coeffs[k] for k in range(3)), ctx.zero):
            overlap += 1
    count = 2 * T - overlap
    out = PointVariety(count, T, overlap, description=f"{count} point" + ("" if count == 1 else "s"))
    if not ctx.names:
        pts = [tuple(p1[k] + t * p2[k] for k in range(3)) for t in base_field_roots(r)]
        if at_inf:
            pts.append(p2)
        if len(pts) == T:
            found = set()
            for p in pts:
                found.add(PointP2(p))
                s = _sigma_at(cols, p)
                if s is not None:
                    found.add(PointP2(s))
            if len(found) == count:
                out.points = sorted(found, key=lambda q: [c.c if hasattr(c, "c") else str(c) for c in q])
                out.explicit = True
    return out


# Sklyanin charts and the cubics H1, H2 ------------------------------------------------------

def _e1(lam):
    return [(e ** 0, e, lam * e * e) for e in CUBE_ROOTS]


def _e2(lam):
    return [(e ** 0, lam * e * e, e) for e in CUBE_ROOTS]


def sklyanin_sigma(p, lam) -> PointP2:
    """sigma on E = V(F): chart 1 away from E1, chart 2 on E1."""
    ctx = context_of(lam, *p)
    lam = ctx.convert(lam)
    c = lam * lam * lam
    if not lam or c == 1 or c == -8:
        raise DomainError("parameter constraint violated: lambda^3 must avoid 0, 1, -8")
    F = sklyanin_form(lam, ctx)
    if F(*p):
        raise DomainError("not on curve")
    chart1, chart2 = sklyanin_charts(lam, ctx)
    in_e1 = any(proportional(p, q) for q in _e1(lam))
    in_e2 = any(proportional(p, q) for q in _e2(lam))
    if in_e1 and in_e2:
        raise InconsistencyError("E1 and E2 intersect")
    chart = chart2 if in_e1 else chart1
    return PointP2(_apply(chart, tuple(ctx.convert(v) for v in p)))


def fh_cubics(lam, a, b, c):
    x, y, z = xyz(context_of(lam, a, b, c))
    l2 = lam * lam
    H1 = x * (y * y * lam - x * z) * a + y * (x * x * lam - y * z) * b + z * (z * z - x * y * l2) * c
    H2 = x * (z * z * lam - x * y) * a + y * (y * y - x * z * l2) * b + z * (x * x * lam - y * z) * c
    return H1, H2


def verify_FH(lam, a, b, c, ea_points=None) -> Report:
    """E1 in V(H1), E2 in V(H2); explicit E_A points in both; E1 and E_A disjoint when a^3 != b^3."""
    report = Report()
    H1, H2 = fh_cubics(lam, a, b, c)
    for q in _e1(lam):
        report.checked += 1
        if H1(*q):
            report.fail("E1", q)
    for q in _e2(lam):
        report.checked += 1
        if H2(*q):
            report.fail("E2", q)
    if ea_points:
        for p in ea_points:
            report.checked += 1
            if H1(*p) or H2(*p):
                report.fail("E_A", str(p))
        if a ** 3 != b ** 3:
            for q in _e1(lam):
                report.checked += 1
                if any(proportional(q, p) for p in ea_points):
                    report.fail("E1 n E_A", q)
        if a ** 3 != c ** 3:
            for q in _e2(lam):
                report.checked += 1
                if any(proportional(q, p) for p in ea_points):
                    report.fail("E2 n E_A", q)
    return report


__all__ = [
    "Report", "verify_graph", "verify_iterates", "sigma_order_bar", "intersect_line_component",
    "point_variety_EA", "sklyanin_sigma", "verify_FH", "line_points", "restrict", "point_variety_form",
    "graph_charts", "algebra_sigma_order", "skew_matrix", "fh_cubics",
]
