"""Quadratic algebras S = k<x,y,z>/(R): graded pieces, centers, duals."""
from __future__ import annotations

import threading

from ..errors import DomainError, InconsistencyError
from ..exactfield.linalg import EchelonBasis, axpy, echelon, nullspace, span_intersection
from ..exactfield.ratfunc import FieldContext
from .free import UVW, XYZ, FreeElem, all_words, index_word, parse_free, word_index

MAX_DEGREE = 4


class GradedBasis:
    """Row-reduced span W_d of the relation ideal in degree d.

    Pivot columns prefer lexicographically larger words, so normal words
    are the non-pivot ones and reduction expresses everything through them.
    """

    def __init__(self, algebra: "QuadAlgebra", d: int):
        self.degree = d
        rel = [r.to_vector() for r in algebra.relations]
        eb = EchelonBasis(3 ** d)
        for i in range(d - 1):
            j = d - 2 - i
            for pre in range(3 ** i):
                for suf in range(3 ** j):
                    base_pre = pre * 3 ** (j + 2)
                    for r in rel:
                        vec = {base_pre + k * 3 ** j + suf: c for k, c in r.items()}
                        eb.insert(vec)
        self.relation_subspace = eb
        self.normal_words = [k for k in range(3 ** d) if k not in eb.rows]
        self._pos = {k: n for n, k in enumerate(self.normal_words)}

    @property
    def dim(self) -> int:
        return len(self.normal_words)

    def normal_form(self, vec: dict) -> dict:
        """Reduce a tensor (sparse over words) to normal-word coordinates."""
        return self.relation_subspace.reduce(vec)

    def coordinates(self, vec: dict) -> dict:
        """Normal form indexed by position in ``normal_words``."""
        return {self._pos[k]: v for k, v in self.normal_form(vec).items()}


class QuadAlgebra:
    """Three generators with a 3-dimensional space of quadratic relations."""

    def __init__(self, relations, family=None, bindings=None, ctx=None, tag=None):
        rels = []
        for r in relations:
            if isinstance(r, str):
                r = parse_free(r, ctx)
            rels.append(r)
        if ctx is None:
            ctx = FieldContext(())
            for r in rels:
                ctx = ctx.union(r.ctx)
        rels = [r.lift(ctx) for r in rels]
        for r in rels:
            if r.degree != 2 or not r.is_homogeneous():
                raise DomainError("relations must be homogeneous of degree 2")
        if len(rels) != 3 or echelon([r.to_vector() for r in rels], 9).rank != 3:
            raise DomainError("degenerate relation space: need 3 independent quadratic relations")
        self.relations = tuple(rels)
        self.ctx = ctx
        self.family = family
        self.bindings = dict(bindings or {})
        self.tag = tag
        self._graded = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"QuadAlgebra({[str(r) for r in self.relations]!r})"

    # graded pieces --------------------------------------------------------
    def graded_basis(self, d: int) -> GradedBasis:
        if d > MAX_DEGREE:
            raise DomainError("degree bound exceeded")
        gb = self._graded.get(d)
        if gb is None:
            built = GradedBasis(self, d)
            with self._lock:
                gb = self._graded.setdefault(d, built)
        return gb

    def normal_form(self, f: FreeElem) -> FreeElem:
        d = f.degree
        if d < 2:
            return f.lift(self.ctx)
        vec = self.graded_basis(d).normal_form(f.lift(self.ctx).to_vector())
        return FreeElem.from_vector(vec, d, self.ctx)

    def equal_in(self, f: FreeElem, g: FreeElem) -> bool:
        return not self.normal_form(f - g)

    def gen(self, k: int) -> FreeElem:
        return FreeElem.word((k,), self.ctx)

    def is_central(self, f: FreeElem) -> bool:
        f = f.lift(self.ctx)
        return all(not self.normal_form(f * self.gen(j) - self.gen(j) * f) for j in range(3))


def graded_dim(S: QuadAlgebra, d: int) -> int:
    if d < 0:
        raise DomainError("negative degree")
    if d > MAX_DEGREE:
        raise DomainError("degree bound exceeded")
    if d <= 1:
        return 3 ** d
    return S.graded_basis(d).dim


def is_quantum_candidate(S: QuadAlgebra) -> bool:
    return all(graded_dim(S, d) == (d + 1) * (d + 2) // 2 for d in (2, 3, 4))


def _basis_words(S: QuadAlgebra, d: int):
    if d <= 1:
        return list(range(3 ** d))
    return S.graded_basis(d).normal_words


def _nf_vec(S: QuadAlgebra, d: int, vec: dict) -> dict:
    if d <= 1:
        return vec
    return S.graded_basis(d).normal_form(vec)


def center_basis(S: QuadAlgebra, d: int) -> list:
    """Basis of the degree-d center as normal-form representatives (d = 1 or 2)."""
    if d not in (1, 2):
        raise DomainError("center computed only in degrees 1 and 2")
    words = _basis_words(S, d)
    n_next = 3 ** (d + 1)
    columns = []
    for k in words:
        w = index_word(k, d)
        col = {}
        for j in range(3):
            right = word_index(w + (j,))
            left = word_index((j,) + w)
            vec = _nf_vec(S, d + 1, {right: S.ctx.one, left: -S.ctx.one} if right != left else {})
            for idx, v in vec.items():
                col[j * n_next + idx] = v
        columns.append(col)
    rows = _transpose(columns, 3 * n_next)
    kernel = nullspace(rows, len(words), S.ctx.one)
    # canonical basis: reduced echelon form preferring small words as leading terms
    eb = echelon(kernel, len(words), priority=range(len(words)))
    out = []
    for vec in eb.basis():
        out.append(FreeElem({index_word(words[i], d): c for i, c in vec.items()}, S.ctx, degree=d))
    return out


def _transpose(columns, nrows):
    rows = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return list(rows.values())


def multilinearize(f: FreeElem):
    """3x3 matrix a with a[i][j] the coefficient of the word x_i x_j."""
    if f.terms and f.degree != 2:
        raise DomainError("multilinearization needs a degree-2 element")
    if not f.terms and f._deg not in (None, 2):
        raise DomainError("multilinearization needs a degree-2 element")
    z = f.ctx.zero
    a = [[z] * 3 for _ in range(3)]
    for (i, j), c in f.terms.items():
        a[i][j] = c
    return a


def bilinear_value(f: FreeElem, p, q):
    a = multilinearize(f)
    total = 0
    for i in range(3):
        for j in range(3):
            if a[i][j]:
                total = a[i][j] * p[i] * q[j] + total
    return total


def graph_contains(S: QuadAlgebra, p, q) -> bool:
    if not any(p) or not any(q):
        raise DomainError("zero coordinate vector")
    return all(not bilinear_value(r, p, q) for r in S.relations)


# S^(alpha, beta, gamma) ---------------------------------------------------------

def skew_relations(alpha, beta, gamma, ctx=None):
    ctx = ctx if ctx is not None else FieldContext(())
    x, y, z = (FreeElem.word((k,), ctx) for k in range(3))
    return [y * z + z * y + alpha * x * x, z * x + x * z + beta * y * y, x * y + y * x + gamma * z * z]


def skew_algebra(alpha, beta, gamma, ctx=None) -> QuadAlgebra:
    """S^(alpha,beta,gamma) = k<x,y,z>/(yz+zy+alpha x^2, zx+xz+beta y^2, xy+yx+gamma z^2)."""
    from ..exactfield.ratfunc import context_of
    ctx = ctx if ctx is not None else context_of(alpha, beta, gamma)
    a, b, c = (ctx.convert(v) for v in (alpha, beta, gamma))
    return QuadAlgebra(skew_relations(a, b, c, ctx), family=("SKEW", (a, b, c)), ctx=ctx)


def commutative_algebra(ctx=None) -> QuadAlgebra:
    ctx = ctx if ctx is not None else FieldContext(())
    return QuadAlgebra(["y*z - z*y", "z*x - x*z", "x*y - y*x"], family=("COMMUTATIVE", ()), ctx=ctx)


def square_central(S: QuadAlgebra, g):
    """Coefficients (a,b,c) with g^2 = a x^2 + b y^2 + c z^2 in S^(alpha,beta,gamma)."""
    if not S.family or S.family[0] != "SKEW":
        raise DomainError("square_central needs the S^(alpha,beta,gamma) family")
    alpha, beta, gamma = S.family[1]
    if isinstance(g, FreeElem):
        if g.degree != 1:
            raise DomainError("g must have degree 1")
        lam, mu, nu = (g.coefficient((k,)) for k in range(3))
    else:
        lam, mu, nu = (S.ctx.convert(v) for v in g)
    a = lam * lam - alpha * mu * nu
    b = mu * mu - beta * nu * lam
    c = nu * nu - gamma * lam * mu
    gel = FreeElem({(0,): lam, (1,): mu, (2,): nu}, S.ctx, degree=1)
    f = FreeElem({(0, 0): a, (1, 1): b, (2, 2): c}, S.ctx, degree=2)
    if not S.equal_in(gel * gel, f):
        raise InconsistencyError("closed form for g^2 disagrees with the normal form")
    if not S.is_central(f):
        raise InconsistencyError("g^2 is not central")
    return a, b, c


# quadratic dual -------------------------------------------------------------------

COMMUTATORS = ((0, 1), (1, 2), (2, 0))  # uv, vw, wu


def _pair(i, j, sign, ctx):
    return FreeElem({(i, j): ctx.one, (j, i): sign * ctx.one}, ctx, UVW, degree=2)


class DualPresentation:
    """R^perp inside V*⊗V*, on dual generators u, v, w.

    ``kind`` is "commutative" when all commutators uv-vu, vw-wv, wu-uw lie in
    R^perp, "skew" when all anticommutators do, otherwise "other".
    """

    def __init__(self, relations, ctx, kind):
        self.relations = tuple(relations)
        self.ctx = ctx
        self.kind = kind

    def vectors(self):
        return [r.to_vector() for r in self.relations]

    def __iter__(self):
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)

    def strings(self):
        return [str(r) for r in self.relations]


def quadratic_dual(S: QuadAlgebra) -> DualPresentation:
    ctx = S.ctx
    rel = [r.to_vector() for r in S.relations]
    if echelon(rel, 9).rank != 3:
        raise DomainError("degenerate relation space")
    perp = nullspace(rel, 9, ctx.one)
    space = echelon(perp, 9)
    comm = [_pair(i, j, -1, ctx) for i, j in COMMUTATORS]
    anti = [_pair(i, j, 1, ctx) for i, j in COMMUTATORS]
    if all(space.contains(c.to_vector()) for c in comm):
        kind, lead = "commutative", comm
    elif all(space.contains(c.to_vector()) for c in anti):
        kind, lead = "skew", anti
    else:
        kind, lead = "other", []
    rels = list(lead)
    if S.family and S.family[0] == "SKEW" and kind == "commutative":
        alpha, beta, gamma = S.family[1]
        u, v, w = (FreeElem.word((k,), ctx, UVW) for k in range(3))
        rels += [u * u - alpha * v * w, v * v - beta * w * u, w * w - gamma * u * v]
    else:
        taken = echelon([r.to_vector() for r in rels], 9)
        for vec in space.basis():
            if taken.insert(vec):
                rels.append(FreeElem.from_vector(vec, 2, ctx, UVW))
        # present the non-lead part reduced against the lead part
        rels = rels[: len(lead)] + [_reduce_against(r, lead, ctx) for r in rels[len(lead):]]
    check = echelon([r.to_vector() for r in rels], 9)
    if check.rank != 6 or any(not space.contains(r.to_vector()) for r in rels):
        raise InconsistencyError("dual presentation does not span R^perp")
    return DualPresentation(rels, ctx, kind)


def _reduce_against(r, lead, ctx):
    """Remove lead-part components that hit a word pair's larger word."""
    vec = dict(r.to_vector())
    for c in lead:
        cv = c.to_vector()
        hi = max(cv)
        if hi in vec:
            axpy(vec, -vec[hi] / cv[hi], cv)
    return FreeElem.from_vector(vec, 2, ctx, UVW)


def annihilator(vectors, ctx) -> list:
    """Orthogonal complement under the word pairing (coordinate dot product)."""
    return nullspace(list(vectors), 9, ctx.one)


def same_span(a, b, n=9) -> bool:
    ea = echelon(a, n)
    eb = echelon(b, n)
    return ea.rank == eb.rank and all(ea.contains(v) for v in b)


def cube_intersection(dual_vectors, ctx):
    """Basis of V⊗R ∩ R⊗V inside the 27-dimensional cube."""
    left = []  # V ⊗ R
    right = []  # R ⊗ V
    for r in dual_vectors:
        for i in range(3):
            left.append({i * 9 + k: c for k, c in r.items()})
            right.append({k * 3 + i: c for k, c in r.items()})
    return span_intersection(left, right, 27, ctx.one)
