"""Sparse multivariate polynomials with coefficients in the field tower."""
from __future__ import annotations

from .ratfunc import FieldContext, context_of


def grlex_key(m):
    return (sum(m), m)


class MPoly:
    """Immutable polynomial in a fixed tuple of variable names."""

    __slots__ = ("vars", "terms", "ctx")

    def __init__(self, vars, terms=None, ctx: FieldContext | None = None):
        self.vars = tuple(vars)
        terms = dict(terms or {})
        if ctx is None:
            ctx = context_of(*terms.values())
        self.ctx = ctx
        self.terms = {m: ctx.convert(c) for m, c in terms.items() if c}

    @classmethod
    def _raw(cls, vars, terms, ctx):
        obj = cls.__new__(cls)
        obj.vars = vars
        obj.terms = terms
        obj.ctx = ctx
        return obj

    @classmethod
    def gens(cls, vars, ctx=None):
        ctx = ctx if ctx is not None else FieldContext(())
        n = len(vars)
        out = []
        for k in range(n):
            m = tuple(1 if j == k else 0 for j in range(n))
            out.append(cls._raw(tuple(vars), {m: ctx.one}, ctx))
        return out

    @classmethod
    def constant(cls, vars, c, ctx=None):
        ctx = ctx if ctx is not None else context_of(c)
        return cls(vars, {(0,) * len(vars): c}, ctx)

    # helpers ------------------------------------------------------------
    def _same(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise TypeError("polynomials in different variables")
            if other.ctx is self.ctx:
                return self, other
            ctx = self.ctx.union(other.ctx)
            return self.lift(ctx), other.lift(ctx)
        ctx = self.ctx.union(context_of(other))
        return self.lift(ctx), MPoly.constant(self.vars, other, ctx)

    def lift(self, ctx):
        if ctx is self.ctx:
            return self
        return MPoly._raw(self.vars, {m: ctx.convert(c) for m, c in self.terms.items()}, ctx)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._same(other)
        t = dict(a.terms)
        for m, c in b.terms.items():
            s = t.get(m)
            if s is None:
                t[m] = c
            else:
                s = s + c
                if s:
                    t[m] = s
                else:
                    del t[m]
        return MPoly._raw(a.vars, t, a.ctx)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {m: -c for m, c in self.terms.items()}, self.ctx)

    def __sub__(self, other):
        a, b = self._same(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._same(other)
        t = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = t.get(m)
                t[m] = c1 * c2 if s is None else s + c1 * c2
        return MPoly._raw(a.vars, {m: c for m, c in t.items() if c}, a.ctx)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = MPoly.constant(self.vars, 1, self.ctx)
        base = self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r

    def scale(self, c):
        return self * c

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.vars, other, self.ctx)
        a, b = self._same(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # evaluation ---------------------------------------------------------
    def __call__(self, *values):
        """Substitute values (field elements or MPolys) for the variables."""
        if len(values) != len(self.vars):
            raise TypeError("wrong number of values")
        powers = [dict() for _ in values]
        total = None
        for m, c in self.terms.items():
            term = c
            for k, e in enumerate(m):
                if e:
                    pk = powers[k].get(e)
                    if pk is None:
                        pk = values[k] ** e
                        powers[k][e] = pk
                    term = pk * term if isinstance(pk, MPoly) else term * pk
            total = term if total is None else total + term
        if total is None:
            v0 = next((v for v in values if isinstance(v, MPoly)), None)
            return MPoly(v0.vars, {}, v0.ctx) if v0 is not None else self.ctx.zero
        return total

    def substitute_params(self, values: dict) -> MPoly:
        return MPoly(self.vars, {m: c.substitute(values) if hasattr(c, "substitute") else c
                                 for m, c in self.terms.items()})

    # monomial order -----------------------------------------------------
    def leading(self, key=grlex_key):
        m = max(self.terms, key=key)
        return m, self.terms[m]

    def monic(self, key=grlex_key):
        if not self.terms:
            return self
        _, c = self.leading(key)
        inv = 1 / c
        return MPoly._raw(self.vars, {m: v * inv for m, v in self.terms.items()}, self.ctx)

    def divides_exactly(self, other: MPoly) -> bool:
        """True iff self divides other (reduction by a single polynomial)."""
        return not reduce(other, [self])

    def exact_quotient(self, divisor: MPoly) -> MPoly:
        q, r = divide(self, [divisor])
        if r:
            raise ArithmeticError("not divisible")
        return q[0]

    def __str__(self):
        from .literal import format_field
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}") for v, e in zip(self.vars, m) if e)
            s = format_field(c)
            if not mono:
                term = s if " " not in s else f"({s})"
            elif s == "1":
                term = mono
            elif s == "-1":
                term = "-" + mono
            else:
                simple = not any(ch in s[1:] for ch in "+- ")
                term = f"{s}*{mono}" if simple else f"({s})*{mono}"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += f" - {t[1:]}" if t.startswith("-") and not t.startswith("-(") else f" + {t}"
        return out

    __repr__ = __str__


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def divide(f: MPoly, divisors, key=grlex_key):
    """Multivariate division; returns (quotients, remainder)."""
    ctx = f.ctx
    for g in divisors:
        ctx = ctx.union(g.ctx)
    f = f.lift(ctx)
    divisors = [g.lift(ctx) for g in divisors]
    leads = [g.leading(key) for g in divisors]
    quots = [dict() for _ in divisors]
    rem = {}
    p = dict(f.terms)
    while p:
        m = max(p, key=key)
        c = p[m]
        for k, (lm, lc) in enumerate(leads):
            if _divides(lm, m):
                q = c / lc
                shift = tuple(x - y for x, y in zip(m, lm))
                quots[k][shift] = quots[k].get(shift, ctx.zero) + q
                for gm, gc in divisors[k].terms.items():
                    mm = tuple(x + y for x, y in zip(gm, shift))
                    v = p.get(mm, ctx.zero) - q * gc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
            del p[m]
    qs = [MPoly._raw(f.vars, {m: c for m, c in q.items() if c}, ctx) for q in quots]
    return qs, MPoly._raw(f.vars, rem, ctx)


def reduce(f: MPoly, divisors, key=grlex_key) -> MPoly:
    return divide(f, divisors, key)[1]
