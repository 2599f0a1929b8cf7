"""Rational functions over Q(zeta_12) in a declared list of transcendental parameters.

A value is N/D where N has four components in Q[params] (coefficients of
zeta^0..zeta^3) and D lies in Q[params].  Normal form: gcd(D, N_0..N_3) = 1
and D monic for the graded-lex order, which makes equality syntactic.
The multivariate gcd over Q is delegated to sympy's sparse polynomial rings.
"""
from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring as _sympy_ring

from .cyclo import Cyclo, adjugate4, mul4


class FieldContext:
    """The base field Q(zeta_12)(p_1, ..., p_n) for an ordered parameter tuple.

    With no parameters the elements are plain :class:`Cyclo` numbers.
    """

    __slots__ = ("names", "ring", "gens")

    def __new__(cls, names=()):
        return _context(tuple(names))

    def __init__(self, names=()):
        pass

    def __repr__(self):
        return f"FieldContext({self.names!r})"

    def __reduce__(self):
        return (FieldContext, (self.names,))

    @property
    def zero(self):
        return self.convert(0)

    @property
    def one(self):
        return self.convert(1)

    def param(self, name: str):
        idx = self.names.index(name)
        R = self.ring
        return RatFunc._make(self, (self.gens[idx], R.zero, R.zero, R.zero), R.one)

    def convert(self, x):
        """Coerce ints, fractions, Cyclo or RatFunc values into this field."""
        if not self.names:
            if isinstance(x, RatFunc):
                if x.ctx.names and not x.is_constant():
                    raise TypeError("parametric value in a parameter-free context")
                return x.constant_value()
            return Cyclo.coerce(x)
        if isinstance(x, RatFunc):
            if x.ctx is self:
                return x
            return x.lift(self)
        c = Cyclo.coerce(x)
        R = self.ring
        return RatFunc._make(self, tuple(R(v) for v in c.c), R.one)

    def __call__(self, x):
        return self.convert(x)

    def parse(self, text: str):
        from .literal import parse_field
        return parse_field(text, self)

    def union(self, other: FieldContext) -> FieldContext:
        names = list(self.names)
        for n in other.names:
            if n not in names:
                names.append(n)
        return FieldContext(tuple(names))


@lru_cache(maxsize=None)
def _context(names: tuple) -> FieldContext:
    obj = object.__new__(FieldContext)
    obj.names = names
    if names:
        R, *gens = _sympy_ring(",".join(names), QQ, grlex)
        obj.ring = R
        obj.gens = tuple(gens)
    else:
        obj.ring = None
        obj.gens = ()
    return obj


def context_of(*values) -> FieldContext:
    """Smallest context containing every given value."""
    ctx = FieldContext(())
    for v in values:
        if isinstance(v, RatFunc) and v.ctx is not ctx:
            ctx = ctx.union(v.ctx)
    return ctx


def _gcd_all(polys):
    g = None
    for p in polys:
        if not p:
            continue
        g = p if g is None else g.gcd(p)
        if g == 1:
            break
    return g


class RatFunc:
    """Immutable element of Q(zeta_12)(params)."""

    __slots__ = ("ctx", "num", "den", "_hash")

    @classmethod
    def _make(cls, ctx, num, den):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _normalized(cls, ctx, num, den):
        R = ctx.ring
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not (num[0] or num[1] or num[2] or num[3]):
            return cls._make(ctx, (R.zero,) * 4, R.one)
        if den.is_ground:
            lc = den.LC
            if lc != 1:
                num = tuple(p.quo_ground(lc) for p in num)
            return cls._make(ctx, num, R.one)
        g = _gcd_all((den,) + tuple(num))
        if g is not None and not g.is_ground:
            den = den.exquo(g)
            num = tuple(p.exquo(g) if p else p for p in num)
        lc = den.LC
        if lc != 1:
            den = den.quo_ground(lc)
            num = tuple(p.quo_ground(lc) for p in num)
        return cls._make(ctx, num, den)

    # coercion -----------------------------------------------------------
    def _coerce_pair(self, other):
        if isinstance(other, RatFunc):
            if other.ctx is self.ctx:
                return self, other
            ctx = self.ctx.union(other.ctx)
            return self.lift(ctx), other.lift(ctx)
        try:
            return self, self.ctx.convert(other)
        except TypeError:
            return None, None

    def lift(self, ctx: FieldContext) -> RatFunc:
        if ctx is self.ctx:
            return self
        if not all(n in ctx.names for n in self.ctx.names):
            raise TypeError("target context lacks parameters")
        R = ctx.ring
        return RatFunc._make(ctx, tuple(p.set_ring(R) for p in self.num), self.den.set_ring(R))

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        n = self.num
        return not (n[0] or n[1] or n[2] or n[3])

    def __bool__(self):
        return not self.is_zero()

    def is_constant(self) -> bool:
        return self.den.is_ground and all(p.is_ground for p in self.num)

    def constant_value(self) -> Cyclo:
        if not self.is_constant():
            raise ValueError("element depends on parameters")
        d = self.den.LC
        return Cyclo(*[(p.LC if p else mpq(0)) / d for p in self.num])

    def is_rational(self) -> bool:
        return self.is_constant() and self.constant_value().is_rational()

    def to_fraction(self):
        return self.constant_value().to_fraction()

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        a, b = self._coerce_pair(other)
        if a is None:
            return NotImplemented
        if a.den == b.den:
            num = tuple(x + y for x, y in zip(a.num, b.num))
            return RatFunc._normalized(a.ctx, num, a.den)
        num = tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num))
        return RatFunc._normalized(a.ctx, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._make(self.ctx, tuple(-p for p in self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        a, b = self._coerce_pair(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        a, b = self._coerce_pair(other)
        if a is None:
            return NotImplemented
        return RatFunc._normalized(a.ctx, mul4(a.num, b.num), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        n = self.num
        if not (n[1] or n[2] or n[3]):
            R = self.ctx.ring
            return RatFunc._normalized(self.ctx, (self.den, R.zero, R.zero, R.zero), n[0])
        adj = adjugate4(n)
        norm = mul4(n, adj)
        assert not (norm[1] or norm[2] or norm[3])
        num = tuple(p * self.den for p in adj)
        return RatFunc._normalized(self.ctx, num, norm[0])

    def __truediv__(self, other):
        a, b = self._coerce_pair(other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.ctx.convert(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # evaluation ---------------------------------------------------------
    def substitute(self, values: dict):
        """Replace parameters by field values; unspecified parameters stay symbolic."""
        rest = tuple(n for n in self.ctx.names if n not in values)
        target = FieldContext(rest)
        vals = {}
        for n in self.ctx.names:
            vals[n] = target.convert(values[n]) if n in values else target.param(n)

        def ev(poly):
            total = target.zero
            for monom, coeff in poly.terms():
                term = target.convert(coeff)
                for n, e in zip(self.ctx.names, monom):
                    if e:
                        term = term * vals[n] ** e
                total = total + term
            return total

        num = target.zero
        for j, p in enumerate(self.num):
            if p:
                num = num + ev(p) * Cyclo.zeta_power(j)
        den = ev(self.den)
        return num / den

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        a, b = self._coerce_pair(other)
        if a is None:
            return NotImplemented
        return a.den == b.den and a.num == b.num

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.ctx.names, self.num, self.den))
        return self._hash

    def numerator_terms(self):
        """Map monomial exponent tuple -> Cyclo coefficient of the numerator."""
        terms = {}
        for j, p in enumerate(self.num):
            for monom, coeff in p.terms():
                c = list(terms.get(monom, (0, 0, 0, 0)))
                c[j] = coeff
                terms[monom] = tuple(c)
        return {m: Cyclo(*c) for m, c in terms.items()}

    def denominator_terms(self):
        return {m: Cyclo(c) for m, c in self.den.terms()}

    def __str__(self):
        from .literal import format_ratfunc
        return format_ratfunc(self)

    def __repr__(self):
        return f"RatFunc({str(self)!r})"
