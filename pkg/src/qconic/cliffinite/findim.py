"""Finite-dimensional associative algebras given by structure constants."""
from __future__ import annotations

from ..errors import DomainError, InconsistencyError
from ..exactfield.linalg import EchelonBasis, echelon, nullspace
from ..exactfield.literal import format_field
from ..exactfield.ratfunc import FieldContext, context_of
from ..exactfield.unipoly import UniPoly


class FinDimAlgebra:
    """Basis e_0..e_{n-1}; ``sc[i][j]`` is the coordinate list of e_i * e_j."""

    def __init__(self, labels, sc, unit, grading=None, ctx: FieldContext | None = None, check=True):
        n = len(labels)
        if ctx is None:
            ctx = context_of(*(c for row in sc for vec in row for c in vec), *unit)
        self.ctx = ctx
        self.labels = tuple(labels)
        self.dim = n
        self.sc = tuple(tuple(tuple(ctx.convert(c) for c in vec) for vec in row) for row in sc)
        self.unit = tuple(ctx.convert(c) for c in unit)
        self.grading = tuple(grading) if grading is not None else None
        if check:
            self.check()

    # arithmetic on coordinate vectors ---------------------------------------
    def zero_vec(self):
        return [self.ctx.zero] * self.dim

    def basis_vec(self, k):
        v = self.zero_vec()
        v[k] = self.ctx.one
        return v

    def mul(self, a, b):
        out = self.zero_vec()
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.sc[i]
            for j, y in enumerate(b):
                if not y:
                    continue
                xy = x * y
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] = out[k] + xy * c
        return out

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def scale(self, c, a):
        return [c * x for x in a]

    def power(self, a, n):
        r = list(self.unit)
        for _ in range(n):
            r = self.mul(r, a)
        return r

    def left_matrix(self, a):
        """Matrix of L_a: column j holds a * e_j."""
        cols = [self.mul(a, self.basis_vec(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def element(self, coeffs: dict):
        """Vector from a label -> coefficient mapping."""
        v = self.zero_vec()
        for lab, c in coeffs.items():
            v[self.labels.index(lab)] = self.ctx.convert(c)
        return v

    # invariants --------------------------------------------------------------
    def check(self):
        n = self.dim
        e = [self.basis_vec(k) for k in range(n)]
        for i in range(n):
            if self.mul(self.unit, e[i]) != e[i] or self.mul(e[i], self.unit) != e[i]:
                raise InconsistencyError("unit does not act as identity")
        for i in range(n):
            for j in range(n):
                eij = list(self.sc[i][j])
                for k in range(n):
                    if self.mul(eij, e[k]) != self.mul(e[i], list(self.sc[j][k])):
                        raise InconsistencyError(
                            f"associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")
        if self.grading is not None:
            for i in range(n):
                for j in range(n):
                    par = (self.grading[i] + self.grading[j]) % 2
                    for k, c in enumerate(self.sc[i][j]):
                        if c and self.grading[k] != par:
                            raise InconsistencyError("structure constants break the grading")

    def is_commutative(self) -> bool:
        return all(self.sc[i][j] == self.sc[j][i] for i in range(self.dim) for j in range(i))

    def substitute(self, values: dict) -> "FinDimAlgebra":
        def sub(c):
            return c.substitute(values) if hasattr(c, "substitute") else c
        sc = [[[sub(c) for c in vec] for vec in row] for row in self.sc]
        return FinDimAlgebra(self.labels, sc, [sub(c) for c in self.unit], self.grading)

    def to_json(self):
        return {
            "dim": self.dim,
            "basis": list(self.labels),
            "unit": [format_field(c) for c in self.unit],
            "sc": [[[format_field(c) for c in vec] for vec in row] for row in self.sc],
            "grading": list(self.grading) if self.grading is not None else None,
        }

    def __repr__(self):
        return f"FinDimAlgebra(dim={self.dim}, basis={list(self.labels)})"


def trace(matrix):
    t = matrix[0][0]
    for k in range(1, len(matrix)):
        t = t + matrix[k][k]
    return t


def _as_sparse(v):
    return {k: c for k, c in enumerate(v) if c}


def _as_dense(alg, vec):
    out = alg.zero_vec()
    for k, c in vec.items():
        out[k] = c
    return out


def radical(alg: FinDimAlgebra) -> list:
    """Kernel of the trace form (a, b) -> tr(L_a L_b) = tr(L_{ab})."""
    n = alg.dim
    traces = [trace(alg.left_matrix(alg.basis_vec(k))) for k in range(n)]
    rows = []
    for i in range(n):
        row = {}
        for j in range(n):
            t = None
            for k, c in enumerate(alg.sc[i][j]):
                if c:
                    t = c * traces[k] if t is None else t + c * traces[k]
            if t:
                row[j] = t
        rows.append(row)
    kernel = nullspace(rows, n, alg.ctx.one)
    eb = echelon(kernel, n, priority=range(n))
    return [_as_dense(alg, v) for v in eb.basis()]


def _product_span(alg, left, right):
    eb = EchelonBasis(alg.dim, priority=range(alg.dim))
    for a in left:
        for b in right:
            eb.insert(_as_sparse(alg.mul(a, b)))
    return [_as_dense(alg, v) for v in eb.basis()]


def radical_power_dims(alg: FinDimAlgebra) -> list:
    """[dim rad, dim rad^2, ...] listing the nonzero powers only."""
    rad = radical(alg)
    dims = []
    power = rad
    while power:
        dims.append(len(power))
        nxt = _product_span(alg, rad, power)
        if len(nxt) >= len(power):
            raise InconsistencyError("radical is not nilpotent")
        power = nxt
    return dims


def spec_count(alg: FinDimAlgebra, require_commutative: bool = True) -> int:
    if require_commutative and not alg.is_commutative():
        raise DomainError("spec_count needs a commutative algebra")
    return alg.dim - len(radical(alg))


def min_poly(alg: FinDimAlgebra, x) -> UniPoly:
    """Monic minimal polynomial of x via the first dependency in 1, x, x^2, ..."""
    rows = []
    power = list(alg.unit)
    while True:
        rows.append(_as_sparse(power))
        deps = nullspace(_columns(rows, alg.dim), len(rows), alg.ctx.one)
        if deps:
            dep = deps[0]
            k = len(rows) - 1
            lead = dep[k]
            return UniPoly([dep.get(j, alg.ctx.zero) / lead for j in range(k + 1)], alg.ctx)
        power = alg.mul(power, x)


def _columns(vectors, n):
    rows = [dict() for _ in range(n)]
    for j, v in enumerate(vectors):
        for i, c in v.items():
            rows[i][j] = c
    return rows


def _subalgebra(alg, basis_vecs, labels, grading=None):
    """Structure constants of the span of basis_vecs (assumed closed, containing 1)."""
    n = alg.dim
    m = len(basis_vecs)
    eb = EchelonBasis(n, priority=range(n))
    for v in basis_vecs:
        eb.insert(_as_sparse(v))
    # coordinates: solve v = sum c_k basis_k via the augmented system
    aug = [dict(_as_sparse(v)) for v in basis_vecs]

    def coords(w):
        rows = _columns(aug, n)
        for i, c in _as_sparse(w).items():
            rows[i][m] = c
        eb2 = echelon(rows, m + 1, priority=range(m + 1))
        if m in eb2.rows:
            raise InconsistencyError("product leaves the subalgebra")
        out = [alg.ctx.zero] * m
        for p, row in eb2.rows.items():
            out[p] = row.get(m, alg.ctx.zero)
        return out

    sc = [[coords(alg.mul(a, b)) for b in basis_vecs] for a in basis_vecs]
    unit = coords(list(alg.unit))
    return FinDimAlgebra(labels, sc, unit, grading, alg.ctx)


def center_findim(alg: FinDimAlgebra) -> FinDimAlgebra:
    n = alg.dim
    rows = []
    for b in range(n):
        eb_ = alg.basis_vec(b)
        cols = [alg.add(alg.mul(alg.basis_vec(j), eb_), alg.scale(-1, alg.mul(eb_, alg.basis_vec(j))))
                for j in range(n)]
        for i in range(n):
            rows.append({j: cols[j][i] for j in range(n) if cols[j][i]})
    kernel = nullspace(rows, n, alg.ctx.one)
    # put the unit first for readable labels
    eb = EchelonBasis(n, priority=range(n))
    vecs = []
    if eb.insert(_as_sparse(alg.unit)):
        vecs.append(list(alg.unit))
    for v in kernel:
        if eb.insert(v):
            vecs.append(_as_dense(alg, v))
    labels = ["1"] + [f"z{k}" for k in range(1, len(vecs))]
    return _subalgebra(alg, vecs, labels)


def abelian_point_count(alg: FinDimAlgebra) -> int:
    """Number of algebra maps alg -> kbar, i.e. points of Spec of the abelianization."""
    n = alg.dim
    comm = EchelonBasis(n, priority=range(n))
    gens = []
    for i in range(n):
        for j in range(i + 1, n):
            c = alg.add(list(alg.sc[i][j]), alg.scale(-1, list(alg.sc[j][i])))
            gens.append(c)
    # two-sided ideal generated by commutators
    frontier = [g for g in gens if comm.insert(_as_sparse(g))]
    while frontier:
        nxt = []
        for g in frontier:
            for k in range(n):
                for h in (alg.mul(alg.basis_vec(k), g), alg.mul(g, alg.basis_vec(k))):
                    if comm.insert(_as_sparse(h)):
                        nxt.append(h)
        frontier = nxt
    quotient_dim = n - comm.rank
    if quotient_dim == 0:
        return 0
    # radical of the commutative quotient via the trace form on a complement basis
    free = [k for k in range(n) if k not in comm.rows]

    def reduce(v):
        return comm.reduce(_as_sparse(v))

    def mulq(i, j):
        return reduce(alg.mul(alg.basis_vec(free[i]), alg.basis_vec(free[j])))

    m = len(free)
    sc = [[[mulq(i, j).get(free[t], alg.ctx.zero) for t in range(m)] for j in range(m)] for i in range(m)]
    unit_r = reduce(list(alg.unit))
    unit = [unit_r.get(free[t], alg.ctx.zero) for t in range(m)]
    quotient = FinDimAlgebra([alg.labels[k] for k in free], sc, unit, None, alg.ctx)
    return spec_count(quotient, require_commutative=True)
