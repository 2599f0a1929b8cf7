"""Univariate polynomials over the field tower: gcd, squarefree part, resultant."""
from __future__ import annotations

from functools import lru_cache

from ..errors import DomainError
from .linalg import det
from .ratfunc import FieldContext, context_of


class UniPoly:
    """Immutable univariate polynomial; coefficients lowest degree first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, coeffs, ctx: FieldContext | None = None):
        coeffs = list(coeffs)
        if ctx is None:
            ctx = context_of(*coeffs)
        cs = [ctx.convert(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def from_roots(cls, roots, ctx=None):
        p = cls([1], ctx if ctx is not None else context_of(*roots))
        for r in roots:
            p = p * cls([-r, 1], p.ctx)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1]

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.ctx is self.ctx:
                return self, other
            ctx = self.ctx.union(other.ctx)
            return UniPoly(self.coeffs, ctx), UniPoly(other.coeffs, ctx)
        return self, UniPoly([other], self.ctx.union(context_of(other)))

    def __add__(self, other):
        a, b = self._coerce(other)
        n = max(len(a.coeffs), len(b.coeffs))
        z = a.ctx.zero
        ca = a.coeffs + (z,) * (n - len(a.coeffs))
        cb = b.coeffs + (z,) * (n - len(b.coeffs))
        return UniPoly([x + y for x, y in zip(ca, cb)], a.ctx)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.ctx)

    def __sub__(self, other):
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if not a.coeffs or not b.coeffs:
            return UniPoly([], a.ctx)
        out = [a.ctx.zero] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    out[i + j] = out[i + j] + x * y
        return UniPoly(out, a.ctx)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = UniPoly([1], self.ctx)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other], self.ctx)
        a, b = self._coerce(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def divmod(self, other: UniPoly):
        a, b = self._coerce(other)
        if not b.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(a.coeffs)
        q = [a.ctx.zero] * max(len(rem) - len(b.coeffs) + 1, 0)
        inv = 1 / b.lc()
        db = b.degree
        while len(rem) - 1 >= db and rem:
            c = rem[-1] * inv
            k = len(rem) - 1 - db
            q[k] = c
            for j, y in enumerate(b.coeffs):
                rem[k + j] = rem[k + j] - c * y
            rem.pop()
            while rem and not rem[-1]:
                rem.pop()
        return UniPoly(q, a.ctx), UniPoly(rem, a.ctx)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        inv = 1 / self.lc()
        return UniPoly([c * inv for c in self.coeffs], self.ctx)

    def derivative(self) -> UniPoly:
        return UniPoly([c * k for k, c in enumerate(self.coeffs)][1:], self.ctx)

    def __call__(self, x):
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute(self, values: dict) -> UniPoly:
        """Specialize parameters appearing in the coefficients."""
        cs = [c.substitute(values) if hasattr(c, "substitute") else c for c in self.coeffs]
        return UniPoly(cs)

    def __str__(self):
        return self.format("t")

    def __repr__(self):
        return f"UniPoly({self.format('t')!r})"

    def format(self, var: str = "t") -> str:
        from .literal import format_field
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            s = format_field(c)
            if mono:
                if s == "1":
                    term = mono
                elif s == "-1":
                    term = "-" + mono
                else:
                    simple = not any(ch in s[1:] for ch in "+-/ ")
                    term = f"{s}*{mono}" if simple else f"({s})*{mono}"
            else:
                term = s if not (" " in s) else f"({s})"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") and not t.startswith("-(") else f" + {t}"
        return out


def _nonzero(*ps):
    for p in ps:
        if not p.coeffs:
            raise DomainError("zero input")


def gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    a, b = p._coerce(q)
    while b.coeffs:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    _nonzero(p)
    if p.degree == 0:
        return UniPoly([1], p.ctx)
    g = gcd(p, p.derivative())
    return (p // g).monic()


def distinct_root_count(p: UniPoly) -> int:
    _nonzero(p)
    return squarefree_part(p).degree


def common_root_count(p: UniPoly, q: UniPoly) -> int:
    _nonzero(p, q)
    g = gcd(p, q)
    return squarefree_part(g).degree


def sylvester_matrix(p: UniPoly, q: UniPoly):
    a, b = p._coerce(q)
    m, n = a.degree, b.degree
    z = a.ctx.zero
    rows = []
    pa = list(reversed(a.coeffs))
    pb = list(reversed(b.coeffs))
    for k in range(n):
        rows.append([z] * k + pa + [z] * (n - 1 - k))
    for k in range(m):
        rows.append([z] * k + pb + [z] * (m - 1 - k))
    return rows


def resultant(p: UniPoly, q: UniPoly):
    """Determinant of the Sylvester matrix."""
    _nonzero(p, q)
    a, b = p._coerce(q)
    if a.degree == 0 and b.degree == 0:
        return a.ctx.one
    if a.degree == 0:
        return a.lc() ** b.degree
    if b.degree == 0:
        return b.lc() ** a.degree
    return det(sylvester_matrix(a, b))


def base_field_roots(p: UniPoly) -> list:
    """Distinct roots lying in Q(zeta_12), for parameter-free p.

    Only used for listing explicit points; factoring is delegated to sympy.
    """
    from sympy import Poly

    from .cyclo import Cyclo

    _nonzero(p)
    if p.ctx.names:
        raise DomainError("explicit roots need parameter-free coefficients")
    sq = squarefree_part(p)
    if sq.degree <= 1:
        return [-sq.coeffs[0]] if sq.degree == 1 else []
    K, t = _sympy_field()
    coeffs = [K([c.c[3], c.c[2], c.c[1], c.c[0]]) for c in reversed(sq.coeffs)]
    poly = Poly.from_list(coeffs, t, domain=K)
    roots = []
    for fac, _ in poly.factor_list()[1]:
        if fac.degree() != 1:
            continue
        c1, c0 = fac.rep.to_list()
        r = K.quo(-c0, c1).to_list()
        r = [0] * (4 - len(r)) + list(r)
        roots.append(Cyclo(r[3], r[2], r[1], r[0]))
    return sorted(roots, key=lambda r: r.c)


@lru_cache(maxsize=1)
def _sympy_field():
    from sympy import I, QQ, exp, pi, symbols
    return QQ.algebraic_field(exp(I * pi / 6)), symbols("t")
