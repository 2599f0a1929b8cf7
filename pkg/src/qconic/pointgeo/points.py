"""Points of the projective plane and plane curves over the field tower."""
from __future__ import annotations

from ..errors import DomainError
from ..exactfield.literal import format_field
from ..exactfield.mpoly import MPoly
from ..exactfield.ratfunc import FieldContext, context_of

XYZ_VARS = ("x", "y", "z")
INFINITE = "INFINITE"


class PointP2:
    """A point of P^2, scaled so that its first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 3:
            raise DomainError("a point of P^2 needs three coordinates")
        ctx = context_of(*coords)
        cs = [ctx.convert(c) for c in coords]
        lead = next((c for c in cs if c), None)
        if lead is None:
            raise DomainError("zero coordinate vector")
        inv = 1 / lead
        self.coords = tuple(c * inv for c in cs)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __eq__(self, other):
        return isinstance(other, PointP2) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def to_json(self):
        return [format_field(c) for c in self.coords]

    def __str__(self):
        return "(" + ", ".join(self.to_json()) + ")"

    __repr__ = __str__


def proportional(p, q) -> bool:
    """Projective equality of two coordinate vectors (either may be unnormalized)."""
    return all(not (p[i] * q[j] - p[j] * q[i]) for i in range(3) for j in range(i + 1, 3))


def xyz(ctx: FieldContext | None = None):
    return MPoly.gens(XYZ_VARS, ctx if ctx is not None else FieldContext(()))


class CurveComponent:
    """V(form) for a nonzero homogeneous form of degree 1, 2 or 3."""

    KINDS = {1: "line", 2: "conic", 3: "cubic"}

    def __init__(self, form: MPoly, name: str | None = None):
        if not form or not form.is_homogeneous():
            raise DomainError("a curve needs a nonzero homogeneous form")
        d = form.degree()
        if d not in self.KINDS:
            raise DomainError("curve degree must be 1, 2 or 3")
        self.form = form
        self.degree = d
        self.kind = self.KINDS[d]
        self.name = name or f"V({form})"

    def contains(self, p) -> bool:
        return not self.form(*p)

    def __repr__(self):
        return self.name


def linear_form(coeffs, ctx=None) -> MPoly:
    ctx = ctx if ctx is not None else context_of(*coeffs)
    x, y, z = xyz(ctx)
    return x * coeffs[0] + y * coeffs[1] + z * coeffs[2]


def form_coefficients(g: MPoly):
    """(g_x, g_y, g_z) of a linear form."""
    if g.degree() != 1 or not g.is_homogeneous():
        raise DomainError("expected a nonzero linear form")
    out = []
    for k in range(3):
        m = tuple(1 if j == k else 0 for j in range(3))
        out.append(g.terms.get(m, g.ctx.zero))
    return tuple(out)
