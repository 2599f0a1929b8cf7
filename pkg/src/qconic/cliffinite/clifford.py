"""Clifford maps on quadratic duals and the resulting Clifford deformations."""
from __future__ import annotations

from ..errors import DomainError, InconsistencyError
from ..exactfield.linalg import echelon, inverse_dense
from ..exactfield.mpoly import MPoly
from ..freequad.free import UVW, FreeElem, index_word
from ..freequad.quadalg import DualPresentation, QuadAlgebra, cube_intersection, quadratic_dual
from .findim import FinDimAlgebra
from .groebner import groebner, normal_form, standard_monomials

LABEL_WORDS = ((), (0,), (1,), (2,), (0, 1), (1, 2), (2, 0), (0, 1, 2))
LABELS = ("1", "u", "v", "w", "uv", "vw", "wu", "uvw")
PARITY = (0, 1, 1, 1, 0, 0, 0, 1)
EVEN = (0, 4, 5, 6)

MAX_REWRITES = 20000


class CliffordMap:
    """Linear functional theta on the dual relation space, stored on its basis."""

    def __init__(self, dual: DualPresentation, values):
        if len(values) != len(dual.relations):
            raise DomainError("one value per dual relation is required")
        self.dual = dual
        self.values = tuple(dual.ctx.convert(v) for v in values)

    def items(self):
        return [(str(r), v) for r, v in zip(self.dual.relations, self.values)]

    def functional(self) -> dict:
        """A 9-vector T with T . r = theta(r) for every dual relation r."""
        vecs = self.dual.vectors()
        # equations sum_i r_k[i] T_i = theta_k, right-hand side in column 9
        eqs = []
        for k, v in enumerate(vecs):
            row = dict(v)
            if self.values[k]:
                row[9] = self.values[k]
            eqs.append(row)
        eb = echelon(eqs, 10, priority=range(10))
        if 9 in eb.rows:
            raise InconsistencyError("theta values are inconsistent")
        T = {}
        for p, row in eb.rows.items():
            c = row.get(9)
            if c:
                T[p] = c
        return T

    def value_on(self, vec: dict):
        T = self.functional()
        total = self.dual.ctx.zero
        for k, c in vec.items():
            if k in T:
                total = total + c * T[k]
        return total


def _pairing(r: FreeElem, f: FreeElem):
    total = r.ctx.zero
    for w, c in r.terms.items():
        d = f.terms.get(w)
        if d:
            total = total + c * d
    return total


def theta_from_central(S: QuadAlgebra, f, dual: DualPresentation | None = None) -> CliffordMap:
    """theta_f(r) = <r, f> for r in R^perp; independent of the lift of f."""
    if not isinstance(f, FreeElem):
        a, b, c = f
        f = FreeElem({(0, 0): a, (1, 1): b, (2, 2): c}, S.ctx, degree=2)
    f = f.lift(S.ctx)
    if f.terms and f.degree != 2:
        raise DomainError("not a central element: degree must be 2")
    if not S.is_central(f):
        raise DomainError("not a central element")
    dual = dual if dual is not None else quadratic_dual(S)
    fe = f.with_letters(UVW)
    return CliffordMap(dual, [_pairing(r, fe) for r in dual.relations])


def is_clifford_map(dual: DualPresentation, theta: CliffordMap) -> bool:
    """(theta ⊗ 1 - 1 ⊗ theta) vanishes on V⊗R ∩ R⊗V."""
    ctx = dual.ctx
    T = theta.functional()
    for t in cube_intersection(dual.vectors(), ctx):
        left = [ctx.zero] * 3
        right = [ctx.zero] * 3
        for idx, c in t.items():
            a, rest = divmod(idx, 9)
            b, cc = divmod(rest, 3)
            ab = a * 3 + b
            bc = b * 3 + cc
            if ab in T:
                left[cc] = left[cc] + c * T[ab]
            if bc in T:
                right[a] = right[a] + c * T[bc]
        if any(x != y for x, y in zip(left, right)):
            return False
    return True


# rewriting engines ---------------------------------------------------------

class _CommutativeEngine:
    """k[u,v,w] modulo the deformed quadrics, via a reduced Groebner basis."""

    def __init__(self, dual: DualPresentation, theta: CliffordMap):
        ctx = dual.ctx
        gens = MPoly.gens(UVW, ctx)
        polys = []
        for r, t in zip(dual.relations, theta.values):
            p = MPoly(UVW, {}, ctx)
            for w, c in r.terms.items():
                p = p + gens[w[0]] * gens[w[1]] * c
            if not p:
                if t:
                    raise DomainError("theta is nonzero on a commutator; the deformation is not commutative")
                continue
            polys.append(p - t)
        self.ctx = ctx
        self.gens = gens
        self.basis = groebner(polys)
        self.std = standard_monomials(self.basis, 3)
        self._pos = {m: k for k, m in enumerate(self.std)}

    def normal_form(self, word):
        p = MPoly.constant(UVW, 1, self.ctx)
        for a in word:
            p = p * self.gens[a]
        r = normal_form(p, self.basis)
        return {self._pos[m]: c for m, c in r.terms.items()}


class _SkewEngine:
    """Anticommuting generators: vu -> -uv + theta(uv+vu), squares -> solved quadratic + constant."""

    def __init__(self, dual: DualPresentation, theta: CliffordMap):
        ctx = dual.ctx
        self.ctx = ctx
        T = theta.functional()

        def th(vec):
            total = ctx.zero
            for k, c in vec.items():
                if k in T:
                    total = total + c * T[k]
            return total

        pairs = [(0, 1), (0, 2), (1, 2)]
        self.anti = {}
        for i, j in pairs:
            self.anti[(i, j)] = th({i * 3 + j: ctx.one, j * 3 + i: ctx.one})
        rows = []
        for r in dual.relations:
            vec = r.to_vector()
            sq = [vec.get(k * 4, ctx.zero) for k in range(3)]
            mixed = {}
            kappa = th(vec)
            for i, j in pairs:
                a = vec.get(i * 3 + j, ctx.zero)
                b = vec.get(j * 3 + i, ctx.zero)
                # b * u_j u_i = -b * u_i u_j + b * (u_i u_j + u_j u_i)
                mixed[(i, j)] = a - b
                kappa = kappa - b * self.anti[(i, j)]
            if not any(sq) and not any(mixed.values()):
                continue  # an anticommutator
            rows.append((sq, mixed, kappa))
        if len(rows) != 3:
            raise DomainError("dual relations do not determine the squares")
        mat = [r[0] for r in rows]
        try:
            inv = inverse_dense(mat, ctx.one)
        except DomainError:
            raise DomainError("dual relations do not determine the squares") from None
        # u_k^2 = sum_ij Q[k][ij] u_i u_j + c_k
        self.square = {}
        for k in range(3):
            quad = {}
            const = ctx.zero
            for t, (sq, mixed, kappa) in enumerate(rows):
                coef = inv[k][t]
                if not coef:
                    continue
                for ij, m in mixed.items():
                    if m:
                        quad[ij] = quad.get(ij, ctx.zero) - coef * m
                const = const + coef * kappa
            self.square[k] = ({ij: c for ij, c in quad.items() if c}, const)
        self.std = [(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
        self._pos = {w: k for k, w in enumerate(self.std)}

    def straighten(self, word) -> dict:
        ctx = self.ctx
        pending = {tuple(word): ctx.one}
        done = {}
        steps = 0
        while pending:
            w, c = pending.popitem()
            steps += 1
            if steps > MAX_REWRITES:
                raise DomainError("straightening does not terminate")
            p = next((k for k in range(len(w) - 1) if w[k] >= w[k + 1]), None)
            if p is None:
                done[w] = done.get(w, ctx.zero) + c
                continue
            a, b = w[p], w[p + 1]
            pre, post = w[:p], w[p + 2:]
            out = []
            if a > b:
                out.append((pre + (b, a) + post, -c))
                t = self.anti[(b, a)]
                if t:
                    out.append((pre + post, c * t))
            else:
                quad, const = self.square[a]
                for (i, j), q in quad.items():
                    out.append((pre + (i, j) + post, c * q))
                if const:
                    out.append((pre + post, c * const))
            for nw, nc in out:
                s = pending.get(nw)
                s = nc if s is None else s + nc
                if s:
                    pending[nw] = s
                else:
                    pending.pop(nw, None)
        return {w: c for w, c in done.items() if c}

    def normal_form(self, word):
        out = {}
        for w, c in self.straighten(word).items():
            if w not in self._pos:
                raise InconsistencyError("straightening left a non-normal word")
            out[self._pos[w]] = c
        return out


def clifford_deformation(dual: DualPresentation, theta: CliffordMap) -> FinDimAlgebra:
    """S!(theta) as an 8-dimensional Z/2-graded algebra on 1,u,v,w,uv,vw,wu,uvw."""
    if not is_clifford_map(dual, theta):
        raise DomainError("theta is not a Clifford map")
    if dual.kind == "commutative":
        engine = _CommutativeEngine(dual, theta)
    elif dual.kind == "skew":
        engine = _SkewEngine(dual, theta)
    else:
        raise DomainError("dual presentation is neither commutative nor skew type")
    if len(engine.std) != 8:
        raise DomainError("degenerate deformation")
    ctx = dual.ctx
    n = 8
    zero = ctx.zero

    def dense(vec):
        out = [zero] * n
        for k, c in vec.items():
            out[k] = c
        return out

    B = [dense(engine.normal_form(w)) for w in LABEL_WORDS]
    try:
        Binv = inverse_dense(B, ctx.one)
    except DomainError:
        raise DomainError("degenerate deformation") from None

    def to_labels(v):
        return [sum((v[k] * Binv[k][j] for k in range(n) if v[k]), zero) for j in range(n)]

    sc = [[to_labels(dense(engine.normal_form(a + b))) for b in LABEL_WORDS] for a in LABEL_WORDS]
    unit = [ctx.one] + [zero] * 7
    return FinDimAlgebra(LABELS, sc, unit, PARITY, ctx)


def even_part(alg: FinDimAlgebra) -> FinDimAlgebra:
    if alg.grading is None:
        raise DomainError("algebra carries no grading")
    even = [k for k in range(alg.dim) if alg.grading[k] == 0]
    sc = []
    for i in even:
        row = []
        for j in even:
            vec = alg.sc[i][j]
            if any(vec[k] for k in range(alg.dim) if k not in even):
                raise InconsistencyError("odd part leaks into the even subalgebra")
            row.append([vec[k] for k in even])
        sc.append(row)
    unit = [alg.unit[k] for k in even]
    return FinDimAlgebra([alg.labels[k] for k in even], sc, unit, None, alg.ctx)


def c_algebra(S: QuadAlgebra, f) -> FinDimAlgebra:
    """C(A) for A = S/(f): even part of the Clifford deformation by theta_f."""
    dual = quadratic_dual(S)
    theta = theta_from_central(S, f, dual)
    return even_part(clifford_deformation(dual, theta))


def dual_word(idx: int, d: int = 2) -> FreeElem:
    return FreeElem.word(index_word(idx, d), letters=UVW)
