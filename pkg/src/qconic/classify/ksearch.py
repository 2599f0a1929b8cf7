"""Base-field search for linear g with g^2 proportional to f in S^(alpha,beta,gamma).

In S^(alpha,beta,gamma) the square of g = l x + m y + n z is
(l^2 - alpha m n) x^2 + (m^2 - beta n l) y^2 + (n^2 - gamma l m) z^2,
so g^2 ~ f = (a, b, c) is the vanishing of the 2x2 minors of the matrix with rows
(a, b, c) and (Q1, Q2, Q3), away from Q = 0.  Projective solutions are found
chart by chart: lex Groebner basis, then univariate root extraction.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..cliffinite.groebner import groebner
from ..exactfield.literal import format_field
from ..exactfield.mpoly import MPoly
from ..exactfield.ratfunc import context_of
from ..exactfield.unipoly import UniPoly, base_field_roots, gcd, squarefree_part
from ..pointgeo.points import PointP2


def _lex(m):
    return m


@dataclass
class SquareRoots:
    roots: list  # PointP2 coefficient vectors (l, m, n) of g
    complete: bool  # True when every solution over the closure lies in the list


def _squares(params, l, m, n):
    alpha, beta, gamma = params
    return l * l - m * n * alpha, m * m - n * l * beta, n * n - l * m * gamma


def _minors(params, f, l, m, n):
    a, b, c = f
    q1, q2, q3 = _squares(params, l, m, n)
    return [q2 * a - q1 * b, q3 * a - q1 * c, q3 * b - q2 * c]


def _to_uni(p: MPoly, k: int, ctx) -> UniPoly:
    d = max((e[k] for e in p.terms), default=0)
    coeffs = [ctx.zero] * (d + 1)
    for e, c in p.terms.items():
        coeffs[e[k]] = coeffs[e[k]] + c
    return UniPoly(coeffs, ctx)


def _split_roots(u: UniPoly):
    """(base-field roots, all roots are base-field)."""
    if u.degree <= 0:
        return [], True
    roots = base_field_roots(u)
    return roots, len(roots) == squarefree_part(u).degree


def _common_roots(polys, ctx):
    """Common roots of univariate MPolys; None when they all vanish identically."""
    g = None
    for p in polys:
        if p:
            u = _to_uni(p, 0, ctx)
            g = u if g is None else gcd(g, u)
    if g is None:
        return None
    return _split_roots(g)


def square_roots(params, f) -> SquareRoots:
    """Every projective g over the base field with g^2 ~ f (and g^2 != 0)."""
    ctx = context_of(*params, *f)
    params = tuple(ctx.convert(v) for v in params)
    f = tuple(ctx.convert(v) for v in f)
    if ctx.names:
        return SquareRoots([], False)
    one, zero = ctx.one, ctx.zero
    found = set()
    complete = True

    def accept(l, m, n):
        if any(_squares(params, l, m, n)):
            found.add(PointP2((l, m, n)))

    # chart n = 1, lex order with l > m
    l, m = MPoly.gens(("l", "m"), ctx)
    basis = groebner([e for e in _minors(params, f, l, m, MPoly.constant(("l", "m"), 1, ctx)) if e], key=_lex)
    leads = [p.leading(_lex)[0] for p in basis]
    if leads and leads[0] != (0, 0):
        elim = [p for p, e in zip(basis, leads) if e[0] == 0]
        pure_l = any(e[1] == 0 for e in leads)
        if not elim or not pure_l:
            complete = False  # positive-dimensional in this chart
        else:
            ms, ok = _split_roots(_to_uni(elim[0], 1, ctx))
            complete = complete and ok
            t = MPoly.gens(("t",), ctx)[0]
            for m0 in ms:
                m0p = MPoly.constant(("t",), m0, ctx)
                res = _common_roots([p(t, m0p) for p in basis], ctx)
                if res is None:
                    complete = False
                    continue
                ls, ok = res
                complete = complete and ok
                for l0 in ls:
                    accept(l0, m0, one)
    # chart n = 0, m = 1
    (t,) = MPoly.gens(("l",), ctx)
    res = _common_roots(_minors(params, f, t, MPoly.constant(("l",), 1, ctx), MPoly.constant(("l",), 0, ctx)), ctx)
    if res is None:
        complete = False
    else:
        ls, ok = res
        complete = complete and ok
        for l0 in ls:
            accept(l0, one, zero)
    # the point (1, 0, 0)
    if not any(_minors(params, f, one, zero, zero)):
        accept(one, zero, zero)
    return SquareRoots(sorted(found, key=lambda p: p.to_json()), complete)


def format_linear(g) -> str:
    """l*x + m*y + n*z in the literal grammar."""
    terms = []
    for c, v in zip(g, "xyz"):
        if not c:
            continue
        s = format_field(c)
        if s == "1":
            terms.append(v)
        elif s == "-1":
            terms.append("-" + v)
        elif any(ch in s[1:] for ch in "+-"):
            terms.append(f"({s})*{v}")
        else:
            terms.append(f"{s}*{v}")
    out = " + ".join(terms)
    return out.replace("+ -", "- ")
