"""Buchberger completion for small ideals in commuting variables."""
from __future__ import annotations

from itertools import product

from ..errors import DomainError
from ..exactfield.mpoly import MPoly, divide, grlex_key


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(f: MPoly, g: MPoly, key):
    mf, cf = f.leading(key)
    mg, cg = g.leading(key)
    lcm = _lcm(mf, mg)
    sf = MPoly._raw(f.vars, {tuple(x - y for x, y in zip(lcm, mf)): 1 / cf}, f.ctx)
    sg = MPoly._raw(g.vars, {tuple(x - y for x, y in zip(lcm, mg)): 1 / cg}, g.ctx)
    return sf.lift(f.ctx) * f - sg.lift(g.ctx) * g


def groebner(polys, key=grlex_key) -> list:
    """Reduced Groebner basis (monic, sorted by leading monomial)."""
    basis = [p for p in polys if p]
    if not basis:
        return []
    ctx = basis[0].ctx
    for p in basis[1:]:
        ctx = ctx.union(p.ctx)
    basis = [p.lift(ctx).monic(key) for p in basis]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        # normal strategy: smallest lcm first
        pairs.sort(key=lambda ij: key(_lcm(basis[ij[0]].leading(key)[0], basis[ij[1]].leading(key)[0])))
        i, j = pairs.pop(0)
        mi = basis[i].leading(key)[0]
        mj = basis[j].leading(key)[0]
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        r = divide(_spoly(basis[i], basis[j], key), basis, key)[1]
        if r:
            basis.append(r.monic(key))
            n = len(basis) - 1
            pairs.extend((n, k) for k in range(n))
    return _reduce_basis(basis, key)


def _reduce_basis(basis, key):
    basis = sorted(basis, key=lambda p: key(p.leading(key)[0]))
    minimal = []
    for k, p in enumerate(basis):
        lm = p.leading(key)[0]
        if any(all(a <= b for a, b in zip(q.leading(key)[0], lm)) for q in minimal):
            continue
        minimal.append(p)
    out = []
    for k, p in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = divide(p, others, key)[1] if others else p
        out.append(r.monic(key))
    return sorted(out, key=lambda p: key(p.leading(key)[0]))


def standard_monomials(basis, nvars: int, max_degree: int = 12, key=grlex_key) -> list:
    """Monomials outside the leading ideal; error if the quotient looks infinite."""
    leads = [p.leading(key)[0] for p in basis]
    out = []
    for d in range(max_degree + 1):
        found = False
        for m in product(range(d + 1), repeat=nvars):
            if sum(m) != d:
                continue
            if not any(all(a <= b for a, b in zip(lm, m)) for lm in leads):
                out.append(m)
                found = True
        if not found:
            return sorted(out, key=key)
    raise DomainError("quotient is not finite dimensional")


def normal_form(f: MPoly, basis, key=grlex_key) -> MPoly:
    return divide(f, basis, key)[1]
