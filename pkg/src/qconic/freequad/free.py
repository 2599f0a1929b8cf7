"""Noncommutative polynomials in three letters (the free algebra k<x,y,z>)."""
from __future__ import annotations

from ..errors import DomainError, ParseError
from ..exactfield.literal import CONSTANTS, LiteralError, evaluate, format_field
from ..exactfield.ratfunc import FieldContext, context_of

XYZ = ("x", "y", "z")
UVW = ("u", "v", "w")


def word_index(word) -> int:
    idx = 0
    for a in word:
        idx = 3 * idx + a
    return idx


def index_word(idx: int, d: int) -> tuple:
    out = []
    for _ in range(d):
        idx, r = divmod(idx, 3)
        out.append(r)
    return tuple(reversed(out))


def all_words(d: int):
    return [index_word(k, d) for k in range(3 ** d)]


class FreeElem:
    """Element of the free algebra: map word (tuple of 0,1,2) -> coefficient.

    Words need not share a degree while parsing; ``degree`` insists on
    homogeneity.  ``letters`` only affects display.
    """

    __slots__ = ("terms", "ctx", "letters", "_deg")

    def __init__(self, terms=None, ctx: FieldContext | None = None, letters=XYZ, degree=None):
        terms = dict(terms or {})
        if ctx is None:
            ctx = context_of(*terms.values())
        self.ctx = ctx
        self.terms = {tuple(w): ctx.convert(c) for w, c in terms.items() if c}
        self.letters = tuple(letters)
        self._deg = degree

    @classmethod
    def word(cls, w, ctx=None, letters=XYZ):
        ctx = ctx if ctx is not None else FieldContext(())
        return cls({tuple(w): ctx.one}, ctx, letters)

    @classmethod
    def scalar(cls, c, ctx=None, letters=XYZ):
        ctx = ctx if ctx is not None else context_of(c)
        return cls({(): c}, ctx, letters, degree=0)

    @classmethod
    def from_vector(cls, vec: dict, d: int, ctx, letters=XYZ):
        return cls({index_word(k, d): v for k, v in vec.items()}, ctx, letters, degree=d)

    @property
    def degree(self) -> int:
        degs = {len(w) for w in self.terms}
        if len(degs) > 1:
            raise DomainError("element is not homogeneous")
        if degs:
            return degs.pop()
        return self._deg if self._deg is not None else 0

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self.terms}) <= 1

    def to_vector(self) -> dict:
        self.degree
        return {word_index(w): c for w, c in self.terms.items()}

    def coefficient(self, w):
        return self.terms.get(tuple(w), self.ctx.zero)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _same(self, other):
        if not isinstance(other, FreeElem):
            other = FreeElem.scalar(other, None, self.letters)
        if other.ctx is self.ctx:
            return self, other
        ctx = self.ctx.union(other.ctx)
        return self.lift(ctx), other.lift(ctx)

    def lift(self, ctx):
        if ctx is self.ctx:
            return self
        return FreeElem(self.terms, ctx, self.letters, self._deg)

    def __add__(self, other):
        a, b = self._same(other)
        t = dict(a.terms)
        for w, c in b.terms.items():
            t[w] = t[w] + c if w in t else c
        deg = a._deg if a._deg is not None else b._deg
        return FreeElem(t, a.ctx, a.letters, deg)

    __radd__ = __add__

    def __neg__(self):
        return FreeElem({w: -c for w, c in self.terms.items()}, self.ctx, self.letters, self._deg)

    def __sub__(self, other):
        a, b = self._same(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._same(other)
        t = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                w = w1 + w2
                t[w] = t[w] + c1 * c2 if w in t else c1 * c2
        deg = None
        if a._deg is not None and b._deg is not None:
            deg = a._deg + b._deg
        return FreeElem(t, a.ctx, a.letters, deg)

    def __rmul__(self, other):
        return FreeElem.scalar(other, None, self.letters) * self

    def __truediv__(self, other):
        if isinstance(other, FreeElem):
            if set(other.terms) != {()}:
                raise DomainError("division by a non-scalar")
            other = other.terms[()]
        inv = 1 / other
        return self * inv

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise DomainError("exponent must be a nonnegative integer")
        r = FreeElem.scalar(1, self.ctx, self.letters)
        for _ in range(n):
            r = r * self
        return r

    def __eq__(self, other):
        if not isinstance(other, FreeElem):
            return NotImplemented
        a, b = self._same(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def with_letters(self, letters):
        return FreeElem(self.terms, self.ctx, letters, self._deg)

    def __str__(self):
        return format_free(self)

    def __repr__(self):
        return f"FreeElem({format_free(self)!r})"


def _word_str(w, letters) -> str:
    parts = []
    k = 0
    while k < len(w):
        j = k
        while j < len(w) and w[j] == w[k]:
            j += 1
        n = j - k
        parts.append(letters[w[k]] if n == 1 else f"{letters[w[k]]}^{n}")
        k = j
    return "*".join(parts)


def format_free(f: FreeElem) -> str:
    if not f.terms:
        return "0"
    parts = []
    for w in sorted(f.terms, key=lambda w: (len(w), w)):
        c = f.terms[w]
        s = format_field(c)
        ws = _word_str(w, f.letters)
        if not ws:
            term = s if " " not in s else f"({s})"
        elif s == "1":
            term = ws
        elif s == "-1":
            term = "-" + ws
        else:
            simple = not any(ch in s[1:] for ch in "+- ")
            term = f"{s}*{ws}" if simple else f"({s})*{ws}"
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += f" - {t[1:]}" if t.startswith("-") and not t.startswith("-(") else f" + {t}"
    return out


def parse_free(text: str, ctx: FieldContext | None = None, letters=XYZ) -> FreeElem:
    """Parse a noncommutative polynomial such as ``y*z + z*y + alpha*x^2``.

    A bare name made only of generator letters is a juxtaposed word (``yz``).
    """
    ctx = ctx if ctx is not None else FieldContext(())
    lookup = {ch: k for k, ch in enumerate(letters)}

    def leaf(kind, value, node):
        if kind == "int":
            return FreeElem.scalar(value, ctx, letters)
        if value in ctx.names:
            return FreeElem.scalar(ctx.param(value), ctx, letters)
        if value in CONSTANTS:
            return FreeElem.scalar(CONSTANTS[value], ctx, letters)
        if value and all(ch in lookup for ch in value):
            return FreeElem.word([lookup[ch] for ch in value], ctx, letters)
        raise LiteralError(f"unknown symbol '{value}'", node.col_offset + 1, text)

    try:
        out = evaluate(text, leaf)
    except LiteralError as exc:
        raise ParseError(str(exc), column=exc.column) from None
    except DomainError as exc:
        raise ParseError(str(exc)) from None
    if not isinstance(out, FreeElem):
        out = FreeElem.scalar(out, ctx, letters)
    return out.lift(ctx)
