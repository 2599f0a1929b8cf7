"""Conic specifications: which ambient algebra, which central quadric."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DomainError
from ..exactfield.literal import format_field
from ..exactfield.ratfunc import context_of

FAMILIES = ("COMMUTATIVE", "TL", "SKEW", "SKLYANIN")
FAMILY_PARAMS = {"COMMUTATIVE": (), "TL": (), "SKEW": ("alpha", "beta", "gamma"), "SKLYANIN": ("lam",)}
ALIASES = {"lambda": "lam", "a": "alpha", "b": "beta", "c": "gamma"}


@dataclass(frozen=True)
class ConicSpec:
    family: str
    params: dict = field(default_factory=dict)
    f: tuple = (1, 0, 0)
    g: tuple | None = None

    def __post_init__(self):
        fam = str(self.family).upper()
        if fam not in FAMILIES:
            raise DomainError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        object.__setattr__(self, "family", fam)
        names = FAMILY_PARAMS[fam]
        params = {ALIASES.get(k, k): v for k, v in dict(self.params).items()}
        extra = sorted(set(params) - set(names))
        if extra:
            raise DomainError(f"unexpected parameters for {fam}: {', '.join(extra)}")
        missing = [n for n in names if n not in params]
        if missing:
            raise DomainError(f"missing parameters for {fam}: {', '.join(missing)}")
        if len(self.f) != 3:
            raise DomainError("f needs three coefficients (a, b, c)")
        if self.g is not None and len(self.g) != 3:
            raise DomainError("g needs three coefficients")
        ctx = context_of(*params.values(), *self.f, *(self.g or ()))
        object.__setattr__(self, "params", {n: ctx.convert(params[n]) for n in names})
        object.__setattr__(self, "f", tuple(ctx.convert(c) for c in self.f))
        if self.g is not None:
            object.__setattr__(self, "g", tuple(ctx.convert(c) for c in self.g))
        self._validate()

    @property
    def ctx(self):
        return context_of(*self.params.values(), *self.f, *(self.g or ()))

    def _validate(self):
        if not any(self.f):
            raise DomainError("f = 0: a conic needs a nonzero central quadric")
        if self.g is not None and not any(self.g):
            raise DomainError("g = 0")
        if self.family == "SKEW":
            a, b, c = (self.params[n] for n in ("alpha", "beta", "gamma"))
            if a * b * c:
                if not (a == b == c):
                    raise DomainError("parameter constraint violated: SKEW needs alpha*beta*gamma = 0 or alpha = beta = gamma")
                _sklyanin_constraint(a)
        elif self.family == "SKLYANIN":
            _sklyanin_constraint(self.params["lam"])

    # convenience constructors
    @classmethod
    def commutative(cls, f, g=None):
        return cls("COMMUTATIVE", {}, tuple(f), g)

    @classmethod
    def tl(cls, f=(1, 0, 0)):
        return cls("TL", {}, tuple(f))

    @classmethod
    def skew(cls, alpha, beta, gamma, f, g=None):
        return cls("SKEW", {"alpha": alpha, "beta": beta, "gamma": gamma}, tuple(f), g)

    @classmethod
    def sklyanin(cls, lam, f, g=None):
        return cls("SKLYANIN", {"lam": lam}, tuple(f), g)

    def skew_params(self):
        """(alpha, beta, gamma) for the S^(alpha,beta,gamma) presentation."""
        if self.family == "SKEW":
            return tuple(self.params[n] for n in ("alpha", "beta", "gamma"))
        if self.family == "SKLYANIN":
            lam = self.params["lam"]
            return lam, lam, lam
        raise DomainError(f"{self.family} is not an S^(alpha,beta,gamma) family")

    def key(self):
        return (self.family, tuple(format_field(v) for v in self.params.values()),
                tuple(format_field(c) for c in self.f))

    def to_json(self):
        out = {"family": self.family.lower(),
               "parameters": {k: format_field(v) for k, v in self.params.items()},
               "f": [format_field(c) for c in self.f]}
        if self.g is not None:
            out["g"] = [format_field(c) for c in self.g]
        return out


def _sklyanin_constraint(lam):
    c = lam * lam * lam
    if not lam or c == 1 or c == -8:
        raise DomainError("parameter constraint violated: lambda^3 must avoid 0, 1, -8")
