"""The classification tables as data."""
from __future__ import annotations

from dataclasses import dataclass

from ..cliffinite.classes import CAClass
from ..pointgeo.points import INFINITE

UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class CommutativeRow:
    ea: str
    spec_count: int
    ca: CAClass
    types: tuple

    @property
    def label(self):
        return self.ea


@dataclass(frozen=True)
class InvolutionRow:
    ea: object
    spec_count: int
    ca: CAClass
    types: tuple

    @property
    def label(self):
        ea = "inf" if self.ea == INFINITE else str(self.ea)
        return f"({ea},{self.spec_count})"


# |sigma| != 2: commutative conics
COMMUTATIVE_TABLE = (
    CommutativeRow("a double line", 1, CAClass.SKEW_DUAL_NUMBERS, ("P", "TL")),
    CommutativeRow("two lines", 2, CAClass.SKEW_SPLIT, ("P",)),
    CommutativeRow("a smooth conic", 0, CAClass.MAT2, ("P",)),
)

# |sigma| = 2: (#E_A, #E_A!, C(A), ambient types)
INVOLUTION_TABLE = (
    InvolutionRow(INFINITE, 1, CAClass.DUAL_SQUARE, ("S", "S'")),
    InvolutionRow(1, 1, CAClass.JORDAN4, ("S'", "NC")),
    InvolutionRow(2, 2, CAClass.JORDAN3_PLUS_K, ("NC", "EC")),
    InvolutionRow(3, 2, CAClass.DOUBLE_DUAL, ("S", "S'", "NC")),
    InvolutionRow(4, 3, CAClass.DUAL_PLUS_K2, ("S'", "NC", "EC")),
    InvolutionRow(6, 4, CAClass.SPLIT4, ("S", "S'", "NC", "EC")),
)

# the nine example algebras: (family, params, f, C(A), E_A description)
EXAMPLE_TABLE = (
    ("COMMUTATIVE", {}, (1, 0, 0), CAClass.SKEW_DUAL_NUMBERS, "a line"),
    ("COMMUTATIVE", {}, (1, 1, 0), CAClass.SKEW_SPLIT, "two lines"),
    ("COMMUTATIVE", {}, (1, 1, 1), CAClass.MAT2, "a smooth conic"),
    ("SKEW", {"alpha": 0, "beta": 0, "gamma": 0}, (1, 0, 0), CAClass.DUAL_SQUARE, "a line"),
    ("SKEW", {"alpha": 1, "beta": 1, "gamma": 0}, (1, 0, 0), CAClass.JORDAN4, "1 point"),
    ("SKEW", {"alpha": 1, "beta": 1, "gamma": 0}, (3, 3, 4), CAClass.JORDAN3_PLUS_K, "2 points"),
    ("SKEW", {"alpha": 0, "beta": 0, "gamma": 0}, (1, 1, 0), CAClass.DOUBLE_DUAL, "3 points"),
    ("SKEW", {"alpha": 1, "beta": 1, "gamma": 0}, (1, 1, -4), CAClass.DUAL_PLUS_K2, "4 points"),
    ("SKEW", {"alpha": 0, "beta": 0, "gamma": 0}, (1, 1, 1), CAClass.SPLIT4, "6 points"),
)

# ambient types with nonzero degree-2 center: catalog row, sample binding, dim Z(S)_2, |sigma-bar|
AMBIENT_TABLE = (
    ("P", {"alpha": 1}, 6, "1"),
    ("TL", {"alpha": 1}, 1, "1"),
    ("S1", {"alpha": -1}, 3, "2"),
    ("S'", {"alpha": -1}, 3, "2"),
    ("NC", {"alpha": -1}, 3, "2"),
    ("EC", {"lam": 2}, 3, "2"),
)


def commutative_row(ea_kind: str, spec_count: int, ca, ambient: str, table=COMMUTATIVE_TABLE):
    hits = [r for r in table if r.ea == ea_kind and r.spec_count == spec_count and r.ca == ca
            and ambient in r.types]
    return hits[0] if len(hits) == 1 else None


def involution_row(ea, spec_count: int, ca, ambient: str, table=INVOLUTION_TABLE):
    """The unique row matching; an UNKNOWN point count matches on the remaining coordinates."""
    hits = [r for r in table if (ea == UNKNOWN or r.ea == ea) and r.spec_count == spec_count
            and r.ca == ca and ambient in r.types]
    return hits[0] if len(hits) == 1 else None
