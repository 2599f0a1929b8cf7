"""The nine isomorphism classes of C(A) and their reference presentations."""
from __future__ import annotations

from enum import Enum

from ..errors import DomainError
from ..exactfield.ratfunc import FieldContext
from ..exactfield.unipoly import UniPoly
from .findim import FinDimAlgebra, radical_power_dims


class CAClass(str, Enum):
    SKEW_DUAL_NUMBERS = "SKEW_DUAL_NUMBERS"
    SKEW_SPLIT = "SKEW_SPLIT"
    MAT2 = "MAT2"
    DUAL_SQUARE = "DUAL_SQUARE"
    JORDAN4 = "JORDAN4"
    JORDAN3_PLUS_K = "JORDAN3_PLUS_K"
    DOUBLE_DUAL = "DOUBLE_DUAL"
    DUAL_PLUS_K2 = "DUAL_PLUS_K2"
    SPLIT4 = "SPLIT4"

    def __str__(self):
        return self.value

    @property
    def presentation(self) -> str:
        return PRESENTATIONS[self]


PRESENTATIONS = {
    CAClass.SKEW_DUAL_NUMBERS: "k_{-1}[u,v]/(u^2, v^2)",
    CAClass.SKEW_SPLIT: "k_{-1}[u,v]/(u^2, v^2 - 1)",
    CAClass.MAT2: "M_2(k)",
    CAClass.DUAL_SQUARE: "k[u,v]/(u^2, v^2)",
    CAClass.JORDAN4: "k[u]/(u^4)",
    CAClass.JORDAN3_PLUS_K: "k[u]/(u^3) x k",
    CAClass.DOUBLE_DUAL: "(k[u]/(u^2))^2",
    CAClass.DUAL_PLUS_K2: "k[u]/(u^2) x k^2",
    CAClass.SPLIT4: "k^4",
}

# (commutative?, radical power dimensions) -> class
SIGNATURES = {
    (False, ()): CAClass.MAT2,
    (False, (3, 1)): CAClass.SKEW_DUAL_NUMBERS,
    (False, (2,)): CAClass.SKEW_SPLIT,
    (True, (3, 1)): CAClass.DUAL_SQUARE,
    (True, (3, 2, 1)): CAClass.JORDAN4,
    (True, (2, 1)): CAClass.JORDAN3_PLUS_K,
    (True, (2,)): CAClass.DOUBLE_DUAL,
    (True, (1,)): CAClass.DUAL_PLUS_K2,
    (True, ()): CAClass.SPLIT4,
}


def signature(alg: FinDimAlgebra):
    return alg.is_commutative(), tuple(radical_power_dims(alg))


def classify_CA(alg: FinDimAlgebra) -> CAClass:
    if alg.dim != 4:
        raise DomainError("not a noncommutative-conic C(A): dimension must be 4")
    sig = signature(alg)
    try:
        return SIGNATURES[sig]
    except KeyError:
        raise DomainError(f"not a noncommutative-conic C(A): signature {sig}") from None


# reference algebras ---------------------------------------------------------

def skew_two_generator(a, b, ctx=None) -> FinDimAlgebra:
    """k_{-1}[u,v]/(u^2 - a, v^2 - b) on the basis 1, u, v, uv."""
    ctx = ctx if ctx is not None else FieldContext(())
    a, b = ctx.convert(a), ctx.convert(b)
    z, o = ctx.zero, ctx.one
    # words as sets with sign: product of basis monomials u^i v^j
    mon = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def mul(m1, m2):
        i1, j1 = m1
        i2, j2 = m2
        sign = -1 if (j1 and i2) else 1
        coef = o * sign
        i, j = i1 + i2, j1 + j2
        if i == 2:
            coef, i = coef * a, 0
        if j == 2:
            coef, j = coef * b, 0
        vec = [z] * 4
        vec[mon.index((i, j))] = coef
        return vec

    sc = [[mul(m1, m2) for m2 in mon] for m1 in mon]
    return FinDimAlgebra(("1", "u", "v", "uv"), sc, [o, z, z, z], None, ctx)


def commutative_two_generator(a, b, ctx=None) -> FinDimAlgebra:
    """k[u,v]/(u^2 - a, v^2 - b) on the basis 1, u, v, uv."""
    ctx = ctx if ctx is not None else FieldContext(())
    a, b = ctx.convert(a), ctx.convert(b)
    z, o = ctx.zero, ctx.one
    mon = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def mul(m1, m2):
        i, j = m1[0] + m2[0], m1[1] + m2[1]
        coef = o
        if i == 2:
            coef, i = coef * a, 0
        if j == 2:
            coef, j = coef * b, 0
        vec = [z] * 4
        vec[mon.index((i, j))] = coef
        return vec

    sc = [[mul(m1, m2) for m2 in mon] for m1 in mon]
    return FinDimAlgebra(("1", "u", "v", "uv"), sc, [o, z, z, z], None, ctx)


def monogenic(p: UniPoly) -> FinDimAlgebra:
    """k[u]/(p) for monic p, on the basis 1, u, ..., u^{n-1}."""
    p = p.monic()
    n = p.degree
    ctx = p.ctx
    z = ctx.zero
    labels = ["1", "u"] + [f"u^{k}" for k in range(2, n)]

    def reduce_power(e):
        r = UniPoly([z] * e + [ctx.one], ctx) % p
        return list(r.coeffs) + [z] * (n - len(r.coeffs))

    sc = [[reduce_power(i + j) for j in range(n)] for i in range(n)]
    unit = [ctx.one] + [z] * (n - 1)
    return FinDimAlgebra(labels[:n], sc, unit, None, ctx)


def reference_algebra(tag: CAClass) -> FinDimAlgebra:
    u = UniPoly([0, 1])
    if tag is CAClass.SKEW_DUAL_NUMBERS:
        return skew_two_generator(0, 0)
    if tag is CAClass.SKEW_SPLIT:
        return skew_two_generator(0, 1)
    if tag is CAClass.MAT2:
        return skew_two_generator(1, 1)
    if tag is CAClass.DUAL_SQUARE:
        return commutative_two_generator(0, 0)
    if tag is CAClass.JORDAN4:
        return monogenic(u ** 4)
    if tag is CAClass.JORDAN3_PLUS_K:
        return monogenic(u ** 3 * (u - 1))
    if tag is CAClass.DOUBLE_DUAL:
        return monogenic(u ** 2 * (u - 1) ** 2)
    if tag is CAClass.DUAL_PLUS_K2:
        return monogenic(u ** 2 * (u - 1) * (u + 1))
    if tag is CAClass.SPLIT4:
        return monogenic(u * (u - 1) * (u + 1) * (u - 2))
    raise DomainError(f"unknown class {tag}")
