"""Elements of the cyclotomic field Q(zeta) with zeta a primitive 12th root of unity.

An element is stored as four rational coordinates on the power basis
1, zeta, zeta^2, zeta^3, reduced with zeta^4 = zeta^2 - 1.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

# zeta^e (e mod 12) on the power basis
_POWERS = (
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (-1, 0, 1, 0), (0, -1, 0, 1), (-1, 0, 0, 0), (0, -1, 0, 0),
    (0, 0, -1, 0), (0, 0, 0, -1), (1, 0, -1, 0), (0, 1, 0, -1),
)
# Galois automorphisms zeta -> zeta^k
_GALOIS = (5, 7, 11)


def mul4(a, b):
    """Product of two coordinate 4-tuples, reduced mod zeta^4 - zeta^2 + 1.

    Works for any coefficient ring (rationals or parameter polynomials).
    """
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    p0 = a0 * b0
    p1 = a0 * b1 + a1 * b0
    p2 = a0 * b2 + a1 * b1 + a2 * b0
    p3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
    p4 = a1 * b3 + a2 * b2 + a3 * b1
    p5 = a2 * b3 + a3 * b2
    p6 = a3 * b3
    return (p0 - p4 - p6, p1 - p5, p2 + p4, p3 + p5)


def conjugate4(a, k):
    """Image of a coordinate tuple under zeta -> zeta^k."""
    out = [a[0] * 0] * 4
    for j, c in enumerate(a):
        if not c:
            continue
        img = _POWERS[(j * k) % 12]
        for t in range(4):
            if img[t]:
                out[t] = out[t] + img[t] * c
    return tuple(out)


def adjugate4(a):
    """Product of the three nontrivial Galois conjugates; a * adjugate4(a) is rational."""
    r = conjugate4(a, _GALOIS[0])
    for k in _GALOIS[1:]:
        r = mul4(r, conjugate4(a, k))
    return r


def _q(x) -> mpq:
    if isinstance(x, mpq):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return mpq(x.numerator, x.denominator) if not isinstance(x, int) else mpq(x)
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


_ZERO = mpq(0)


class Cyclo:
    """Immutable element of Q(zeta_12)."""

    __slots__ = ("c", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (_q(c0), _q(c1), _q(c2), _q(c3))
        self._hash = None

    @classmethod
    def _raw(cls, c) -> Cyclo:
        obj = cls.__new__(cls)
        obj.c = c
        obj._hash = None
        return obj

    @classmethod
    def zeta_power(cls, e: int) -> Cyclo:
        return cls(*_POWERS[e % 12])

    @classmethod
    def coerce(cls, x) -> Cyclo:
        if isinstance(x, Cyclo):
            return x
        return cls._raw((_q(x), _ZERO, _ZERO, _ZERO))

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        c = self.c
        return not (c[0] or c[1] or c[2] or c[3])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        c = self.c
        return not (c[1] or c[2] or c[3])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        q = self.c[0]
        return Fraction(int(q.numerator), int(q.denominator))

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Cyclo):
            try:
                other = Cyclo.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.c, other.c
        return Cyclo._raw((a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    __radd__ = __add__

    def __neg__(self):
        a = self.c
        return Cyclo._raw((-a[0], -a[1], -a[2], -a[3]))

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, Cyclo):
            try:
                other = Cyclo.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.c, other.c
        return Cyclo._raw((a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            try:
                q = _q(other)
            except TypeError:
                return NotImplemented
            a = self.c
            return Cyclo._raw((a[0] * q, a[1] * q, a[2] * q, a[3] * q))
        a, b = self.c, other.c
        if not (b[1] or b[2] or b[3]):
            q = b[0]
            return Cyclo._raw((a[0] * q, a[1] * q, a[2] * q, a[3] * q))
        if not (a[1] or a[2] or a[3]):
            q = a[0]
            return Cyclo._raw((b[0] * q, b[1] * q, b[2] * q, b[3] * q))
        return Cyclo._raw(mul4(a, b))

    __rmul__ = __mul__

    def inverse(self) -> Cyclo:
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta)")
        a = self.c
        if not (a[1] or a[2] or a[3]):
            return Cyclo._raw((1 / a[0], _ZERO, _ZERO, _ZERO))
        adj = adjugate4(a)
        norm = mul4(a, adj)[0]
        return Cyclo._raw(tuple(x / norm for x in adj))

    def __truediv__(self, other):
        if not isinstance(other, Cyclo):
            try:
                other = Cyclo.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclo.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclo._raw((mpq(1), _ZERO, _ZERO, _ZERO))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, k: int) -> Cyclo:
        """Galois action zeta -> zeta^k (k coprime to 12)."""
        return Cyclo._raw(conjugate4(self.c, k))

    def norm(self) -> Fraction:
        n = mul4(self.c, adjugate4(self.c))[0]
        return Fraction(int(n.numerator), int(n.denominator))

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.c == other.c
        try:
            return self.c == Cyclo.coerce(other).c
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            c = self.c
            self._hash = hash(c[0]) if not (c[1] or c[2] or c[3]) else hash(c)
        return self._hash

    # display ------------------------------------------------------------
    def eps_coords(self):
        """Coordinates on the basis 1, eps, i, i*eps (eps = zeta^4, i = zeta^3)."""
        c0, c1, c2, c3 = self.c
        return (c0 + c2, c2, c3, -c1)

    def __str__(self) -> str:
        from .literal import format_cyclo
        return format_cyclo(self)

    def __repr__(self) -> str:
        return f"Cyclo({str(self)!r})"


ZETA = Cyclo(0, 1)
I_UNIT = Cyclo.zeta_power(3)
EPS = Cyclo.zeta_power(4)
