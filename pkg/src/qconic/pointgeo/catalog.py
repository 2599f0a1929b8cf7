"""The eleven Calabi-Yau quantum P^2 types with their point varieties and automorphisms.

Every entry carries relation templates, the components of the reduced point
variety, polynomial charts for sigma on each component (denominators cleared),
closed forms for sigma^i, and sample parameter bindings used for verification.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from ..errors import DomainError
from ..exactfield.cyclo import EPS
from ..exactfield.literal import format_field
from ..exactfield.mpoly import divide
from ..exactfield.ratfunc import FieldContext, context_of
from ..freequad.quadalg import QuadAlgebra
from .points import xyz

CUBE_ROOTS = (EPS ** 0, EPS, EPS * EPS)


@dataclass(frozen=True)
class Component:
    name: str
    form: object  # MPoly, or None for the whole plane


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    params: tuple
    relations: tuple  # templates with {name} placeholders
    constraint: str
    components: Callable  # bindings -> list[Component]
    charts: Callable  # bindings -> list (per component) of lists of charts
    iterate: Callable | None  # (bindings, i) -> list (per component) of triples
    order: Callable  # bindings -> "1" | "2" | "other"
    samples: tuple = ()  # parameter bindings used for verification
    reduced: bool = True
    derived: Callable | None = None  # bindings -> extra named values
    check: Callable | None = None  # bindings -> raises DomainError on illegal parameters
    notes: tuple = field(default_factory=tuple)

    def bind(self, values: dict) -> dict:
        """Complete a parameter binding with derived quantities and check constraints."""
        missing = [k for k in self.params if k not in values]
        if missing:
            raise DomainError(f"type {self.tag} needs parameters: {', '.join(missing)}")
        P = {k: values[k] for k in self.params}
        ctx = context_of(*P.values()) if P else FieldContext(())
        P = {k: ctx.convert(v) for k, v in P.items()}
        if self.check is not None:
            self.check(P)
        if self.derived is not None:
            P.update(self.derived(P))
        P["_ctx"] = ctx
        return P

    def bindings(self):
        return [self.bind(s) for s in self.samples]

    def algebra(self, P: dict) -> QuadAlgebra:
        ctx = P["_ctx"]
        subs = {k: f"({format_field(v)})" for k, v in P.items() if not k.startswith("_")}
        rels = [t.format(**subs) for t in self.relations]
        return QuadAlgebra(rels, ctx=ctx, tag=self.tag)

    def mutated(self) -> "CatalogEntry":
        """Negative control: flip the sign of one coordinate of the first sigma chart."""
        base = self.charts

        def charts(P):
            out = base(P)
            form = self.components(P)[0].form
            out[0] = [_flip(out[0][0], form)] + out[0][1:]
            return out

        return replace(self, charts=charts, tag=self.tag + "*")

    def perturbed_iterate(self) -> "CatalogEntry":
        """Negative control for the sigma^i formulas."""
        base = self.iterate

        def iterate(P, i):
            out = base(P, i)
            out[0] = _flip(out[0], self.components(P)[0].form)
            return out

        return replace(self, iterate=iterate, tag=self.tag + "*")


# helpers -------------------------------------------------------------------------

def _flip(triple, form):
    """Negate the first coordinate that does not vanish on the component."""
    for k, c in enumerate(triple):
        if form is None or divide(c, [form])[1]:
            return tuple(-v if j == k else v for j, v in enumerate(triple))
    return triple


def _gens(P):
    return xyz(P["_ctx"])


def _root_order(a):
    if a == 1:
        return "1"
    if a * a == 1:
        return "2"
    return "other"


def _cube_root_of_unity(P):
    a = P["alpha"]
    if a * a * a != 1:
        raise DomainError("parameter constraint violated: alpha^3 = 1 is required")


def _generic_alpha(P):
    a = P["alpha"]
    if not a or a * a * a == 1:
        raise DomainError("parameter constraint violated: alpha^3 must avoid 0 and 1")


def _lam_from_alpha(P):
    a = P["alpha"]
    return {"lam": (a * a * a - 1) / a}


def _sklyanin_check(P):
    lam = P["lam"]
    c = lam * lam * lam
    if not lam or c == 1 or c == -8:
        raise DomainError("parameter constraint violated: lambda^3 must avoid 0, 1, -8")


def sklyanin_form(lam, ctx=None):
    """F = lam (x^3 + y^3 + z^3) - (lam^3 + 2) x y z."""
    x, y, z = xyz(ctx if ctx is not None else context_of(lam))
    return (x ** 3 + y ** 3 + z ** 3) * lam - x * y * z * (lam * lam * lam + 2)


def sklyanin_charts(lam, ctx=None):
    x, y, z = xyz(ctx if ctx is not None else context_of(lam))
    chart1 = (y * y * lam - x * z, x * x * lam - y * z, z * z - x * y * (lam * lam))
    chart2 = (z * z * lam - x * y, y * y - x * z * (lam * lam), x * x * lam - y * z)
    return [chart1, chart2]


# entries -------------------------------------------------------------------------

def _P_components(P):
    return [Component("P^2", None)]


def _P_charts(P):
    x, y, z = _gens(P)
    a = P["alpha"]
    return [[(x, y * a, z * (1 / a))]]


def _P_iterate(P, i):
    x, y, z = _gens(P)
    a = P["alpha"]
    return [(x, y * a ** i, z * (1 / a) ** i)]


def _coord_components(P):
    x, y, z = _gens(P)
    return [Component("V(x)", x), Component("V(y)", y), Component("V(z)", z)]


def _S1_charts(P):
    x, y, z = _gens(P)
    a = P["alpha"]
    return [[(x, y, z * a)], [(x * a, y, z)], [(x, y * a, z)]]


def _S1_iterate(P, i):
    x, y, z = _gens(P)
    ai = P["alpha"] ** i
    return [(x, y, z * ai), (x * ai, y, z), (x, y * ai, z)]


def _theta(v, i):
    """Row vector v times the cyclic permutation matrix, i times."""
    for _ in range(i % 3):
        v = (v[2], v[0], v[1])
    return v


def _S3_charts(P):
    x, y, z = _gens(P)
    a = P["alpha"]
    return [[_theta((x, y, z * a), 1)], [_theta((x * a, y, z), 1)], [_theta((x, y * a, z), 1)]]


def _S3_iterate(P, i):
    x, y, z = _gens(P)
    ai = P["alpha"] ** i
    return [_theta((x, y, z * ai), i), _theta((x * ai, y, z), i), _theta((x, y * ai, z), i)]


def _Sp_components(P):
    x, y, z = _gens(P)
    return [Component("V(x)", x), Component("V(x^2-lam*y*z)", x * x - y * z * P["lam"])]


def _Sp_charts(P):
    x, y, z = _gens(P)
    a = P["alpha"]
    return [[(x, y, z * a)], [(x, y * a, z * (1 / a))]]


def _Sp_iterate(P, i):
    x, y, z = _gens(P)
    a = P["alpha"]
    return [(x, y, z * a ** i), (x, y * a ** i, z * (1 / a) ** i)]


def _T_components(P):
    x, y, z = _gens(P)
    return [Component(n, x * e + y) for n, e in zip(("V(x+y)", "V(eps*x+y)", "V(eps^2*x+y)"), CUBE_ROOTS)]


def _T_chart(P):
    # sigma(a,b,c) = (a, alpha b, -a^2/b + alpha^2 c), scaled by b
    x, y, z = _gens(P)
    a = P["alpha"]
    return (x * y, y * y * a, -x * x + y * z * (a * a))


def _T_charts(P):
    return [[_T_chart(P)] for _ in range(3)]


def _T_iterate(P, i):
    x, y, z = _gens(P)
    a = P["alpha"]
    out = []
    for e in CUBE_ROOTS:
        # on b = -e a: (a, -alpha^i e a, i alpha^(2i-2) e^2 a + alpha^(2i) c)
        out.append((x, -x * (a ** i * e), x * (i * a ** (2 * i - 2) * e * e) + z * a ** (2 * i)))
    return out


def _Tp_components(P):
    x, y, z = _gens(P)
    return [Component("V(y)", y), Component("V(x^2-y*z)", x * x - y * z)]


def _Tp_charts(P):
    x, y, z = _gens(P)
    return [[(x, y, x + z)], [(x - y, y, -2 * x + y + z)]]


def _Tp_iterate(P, i):
    x, y, z = _gens(P)
    return [(x, y, x * i + z), (x - y * i, y, -2 * i * x + y * (i * i) + z)]


def _NC_components(P):
    x, y, z = _gens(P)
    return [Component("V(x^3+y^3-lam*x*y*z)", x ** 3 + y ** 3 - x * y * z * P["lam"])]


def _NC_charts(P):
    return [[_T_chart(P)]]


def _NC_iterate(P, i):
    x, y, z = _gens(P)
    a = P["alpha"]
    kappa = (a ** (3 * i) - 1) / (a ** (i - 1) * (a ** 3 - 1))
    return [(x * y, y * y * a ** i, -x * x * kappa + y * z * a ** (2 * i))]


def _CC_components(P):
    x, y, z = _gens(P)
    return [Component("V(x^3-y^2*z)", x ** 3 - y * y * z)]


def _CC_charts(P):
    return [[_CC_iterate(P, 1)[0]]]


def _CC_iterate(P, i):
    x, y, z = _gens(P)
    return [((x - y * i) * y, y * y, -3 * i * x * x + 3 * i * i * x * y - i ** 3 * y * y + y * z)]


def _TL_components(P):
    x, _, _ = _gens(P)
    return [Component("V(x)", x)]


def _TL_charts(P):
    x, y, z = _gens(P)
    return [[(x, y, z * P["alpha"])]]


def _TL_iterate(P, i):
    x, y, z = _gens(P)
    return [(x, y, z * P["alpha"] ** i)]


def _WL_components(P):
    x, y, _ = _gens(P)
    return [Component("V(x)", x), Component("V(y)", y)]


def _WL_charts(P):
    x, y, z = _gens(P)
    return [[(x, y, z - y)], [(x, y, z)]]


def _WL_iterate(P, i):
    x, y, z = _gens(P)
    return [(x, y, z - y * i), (x, y, z)]


def _EC_components(P):
    return [Component("V(F)", sklyanin_form(P["lam"], P["_ctx"]))]


def _EC_charts(P):
    return [sklyanin_charts(P["lam"], P["_ctx"])]


def _EC_iterate(P, i):
    if i % 2:
        return [sklyanin_charts(P["lam"], P["_ctx"])[0]]
    x, y, z = _gens(P)
    return [(x, y, z)]


def _const(tag):
    return lambda P: tag


def _sym(*names):
    ctx = FieldContext(names)
    return {n: ctx.param(n) for n in names}


_ROOTS3 = tuple({"alpha": e} for e in CUBE_ROOTS)

_P_REL = ("y*z - {alpha}*z*y", "z*x - {alpha}*x*z", "x*y - {alpha}*y*x")
_Sp_REL = ("y*z - {alpha}*z*y + x^2", "z*x - {alpha}*x*z", "x*y - {alpha}*y*x")
_T_REL = ("y*z - {alpha}*z*y + x^2", "z*x - {alpha}*x*z + y^2", "x*y - {alpha}*y*x")

CATALOG = (
    CatalogEntry("P", ("alpha",), _P_REL, "alpha^3 = 1", _P_components, _P_charts, _P_iterate,
                 lambda P: _root_order(P["alpha"]), _ROOTS3, check=_cube_root_of_unity),
    CatalogEntry("S1", ("alpha",), _P_REL, "alpha^3 != 0, 1", _coord_components, _S1_charts, _S1_iterate,
                 lambda P: _root_order(P["alpha"]), (_sym("alpha"), {"alpha": -1}), check=_generic_alpha),
    CatalogEntry("S3", ("alpha",), ("z*y - {alpha}*x^2", "x*z - {alpha}*y^2", "y*x - {alpha}*z^2"),
                 "alpha^3 != 0, 1", _coord_components, _S3_charts, _S3_iterate, _const("other"),
                 (_sym("alpha"), {"alpha": -1}), check=_generic_alpha),
    CatalogEntry("S'", ("alpha",), _Sp_REL, "alpha^3 != 0, 1", _Sp_components, _Sp_charts, _Sp_iterate,
                 lambda P: _root_order(P["alpha"]), (_sym("alpha"), {"alpha": -1}),
                 derived=_lam_from_alpha, check=_generic_alpha),
    CatalogEntry("T", ("alpha",), _T_REL, "alpha^3 = 1", _T_components, _T_charts, _T_iterate,
                 _const("other"), _ROOTS3, check=_cube_root_of_unity),
    CatalogEntry("T'", (), ("y*z - z*y + x*y + y*x", "z*x - x*z + x^2 - y*z - z*y + y^2", "x*y - y*x - y^2"),
                 "none", _Tp_components, _Tp_charts, _Tp_iterate, _const("other"), ({},)),
    CatalogEntry("NC", ("alpha",), _T_REL, "alpha^3 != 0, 1", _NC_components, _NC_charts, _NC_iterate,
                 lambda P: _root_order(P["alpha"]), (_sym("alpha"), {"alpha": -1}),
                 derived=_lam_from_alpha, check=_generic_alpha),
    CatalogEntry("CC", (), ("y*z - z*y + y^2 + 3*x^2", "z*x - x*z + y*x + x*y - y*z - z*y", "x*y - y*x - y^2"),
                 "none", _CC_components, _CC_charts, _CC_iterate, _const("other"), ({},)),
    CatalogEntry("TL", ("alpha",), _Sp_REL, "alpha^3 = 1", _TL_components, _TL_charts, _TL_iterate,
                 lambda P: _root_order(P["alpha"]), _ROOTS3, reduced=False, check=_cube_root_of_unity),
    CatalogEntry("WL", (), ("y*z - z*y + y^2", "z*x - x*z + y*x + x*y", "x*y - y*x"),
                 "none", _WL_components, _WL_charts, _WL_iterate, _const("other"), ({},), reduced=False),
    CatalogEntry("EC", ("lam",), ("y*z + z*y + {lam}*x^2", "z*x + x*z + {lam}*y^2", "x*y + y*x + {lam}*z^2"),
                 "lam^3 != 0, 1, -8", _EC_components, _EC_charts, _EC_iterate, _const("2"),
                 (_sym("lam"), {"lam": 2}), check=_sklyanin_check),
)

# declared |sigma-bar| columns for the generic member of each row
DECLARED_ORDER = {"P": "1", "S1": "other", "S3": "other", "S'": "other", "T": "other", "T'": "other",
                  "NC": "other", "CC": "other", "TL": "1", "WL": "other", "EC": "2"}

# components of the (possibly non-reduced) point variety as printed in the table
E_DISPLAY = {"P": "P^2", "S1": "V(x) u V(y) u V(z)", "S3": "V(x) u V(y) u V(z)",
             "S'": "V(x) u V(x^2 - lam*y*z)", "T": "V(x+y) u V(eps*x+y) u V(eps^2*x+y)",
             "T'": "V(y) u V(x^2 - y*z)", "NC": "V(x^3 + y^3 - lam*x*y*z)", "CC": "V(x^3 - y^2*z)",
             "TL": "V(x^3)", "WL": "V(x^2) u V(y)", "EC": "V(x^3 + y^3 + z^3 - lam'*x*y*z)"}


def catalog():
    return list(CATALOG)


def entry(tag: str) -> CatalogEntry:
    for e in CATALOG:
        if e.tag == tag:
            return e
    raise DomainError(f"unknown catalog type {tag!r}")


# the ambient-table rows as catalog instances
AMBIENT_ROWS = (
    ("P", {"alpha": 1}),
    ("TL", {"alpha": 1}),
    ("S1", {"alpha": -1}),
    ("S'", {"alpha": -1}),
    ("NC", {"alpha": -1}),
    ("EC", {"lam": 2}),
)
