"""The verification battery behind `qconic verify-tables`."""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import QconicError
from ..freequad.quadalg import center_basis
from ..pointgeo.catalog import catalog, entry as catalog_entry
from ..pointgeo.geometry import algebra_sigma_order, sigma_order_bar, verify_graph, verify_iterates
from .pipeline import classify
from .spec import ConicSpec
from .tables import EXAMPLE_TABLE, AMBIENT_TABLE, COMMUTATIVE_TABLE, INVOLUTION_TABLE

ITERATE_ROWS = ("P", "S1", "S3", "S'")

# extra specs witnessing the Sklyanin rows of the involution table
EC_WITNESSES = (
    ("SKLYANIN", {"lam": 2}, (-4, 12, 12)),
    ("SKLYANIN", {"lam": 2}, (1, 1, 2)),
    ("SKLYANIN", {"lam": 2}, (1, 1, 1)),
    ("TL", {}, (1, 0, 0)),
)

FAULTS = ("involution", "catalog", "examples")


@dataclass
class Assertion:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class VerifyReport:
    assertions: list = field(default_factory=list)

    def check(self, name, ok, detail=""):
        self.assertions.append(Assertion(name, bool(ok), str(detail)))

    @property
    def ok(self):
        return all(a.ok for a in self.assertions)

    @property
    def failures(self):
        return [a for a in self.assertions if not a.ok]

    def to_json(self):
        return [a.to_json() for a in self.assertions]

    def to_text(self):
        lines = [f"{'PASS' if a.ok else 'FAIL'}  {a.name}" + (f"  [{a.detail}]" if a.detail else "")
                 for a in self.assertions]
        lines.append(f"{len(self.assertions) - len(self.failures)}/{len(self.assertions)} assertions passed")
        return "\n".join(lines)


def _ambient(report):
    for tag, params, dim, order in AMBIENT_TABLE:
        e = catalog_entry(tag)
        P = e.bind(params)
        S = e.algebra(P)
        got = len(center_basis(S, 2))
        report.check(f"ambient {tag} {params} dim Z(S)_2 = {dim}", got == dim, got)
        got = sigma_order_bar(e, P)
        report.check(f"ambient {tag} {params} |sigma-bar| = {order} (catalog)", got == order, got)
        if order == "2":
            got = algebra_sigma_order(S)
            report.check(f"ambient {tag} {params} |sigma-bar| = {order} (relations)", got == order, got)


def _catalog(report, mutate):
    for e in catalog():
        subject = e.mutated() if mutate else e
        r = verify_graph(subject)
        report.check(f"catalog {e.tag} graph of sigma", r.ok, r.failures[:2] if r.failures else r.checked)
    for tag in ITERATE_ROWS:
        e = catalog_entry(tag)
        subject = e.perturbed_iterate() if mutate else e
        r = verify_iterates(subject, 2)
        report.check(f"catalog {tag} sigma^2 closed form", r.ok, r.failures[:2] if r.failures else r.checked)


def _classify(report, family, params, f, label):
    try:
        rec = classify(ConicSpec(family, params, f))
    except QconicError as exc:
        report.check(f"{label} classify", False, exc.message)
        return None
    report.check(f"{label} record consistent", rec.consistent, rec.table_row)
    return rec


def verify_tables(fault: str | None = None) -> VerifyReport:
    """Run every assertion; ``fault`` corrupts one built-in data set (negative control)."""
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    report = VerifyReport()
    _ambient(report)
    _catalog(report, fault == "catalog")

    examples = EXAMPLE_TABLE
    if fault == "examples":
        fam, params, f, ca, desc = examples[4]
        examples = examples[:4] + ((fam, params, f, ca, "2 points"),) + examples[5:]
    records = []
    for fam, params, f, ca, desc in examples:
        label = f"example {fam.lower()} {params} f={list(f)}"
        rec = _classify(report, fam, params, f, label)
        if rec is None:
            continue
        records.append(rec)
        report.check(f"{label} C(A) = {ca}", rec.ca_class == ca, rec.ca_class)
        report.check(f"{label} E_A = {desc}", rec.ea_description == desc, rec.ea_description)
    for fam, params, f in EC_WITNESSES:
        rec = _classify(report, fam, params, f, f"witness {fam.lower()} {params} f={list(f)}")
        if rec is not None:
            records.append(rec)

    involution = INVOLUTION_TABLE
    if fault == "involution":
        involution = tuple(replace(r, spec_count=r.spec_count + 1) if r.ea == 3 else r for r in INVOLUTION_TABLE)
    for row in involution:
        hits = [r for r in records if r.sigma_class == "2" and r.ea_count == row.ea
                and r.spec_count == row.spec_count and r.ca_class == row.ca]
        report.check(f"involution row {row.label} {row.ca} witnessed", hits, len(hits))
    for row in COMMUTATIVE_TABLE:
        hits = [r for r in records if r.sigma_class != "2" and r.table_row == row.ea
                and r.spec_count == row.spec_count and r.ca_class == row.ca]
        report.check(f"commutative row '{row.ea}' {row.ca} witnessed", hits, len(hits))
    for r in records:
        if r.sigma_class == "2" and isinstance(r.ea_count, int):
            inside = any(r.ea_count == row.ea and r.spec_count == row.spec_count and r.ca_class == row.ca
                         for row in involution)
            report.check(f"involution table contains ({r.ea_count},{r.spec_count}) from {r.spec.key()}", inside)
    return report


__all__ = ["Assertion", "VerifyReport", "verify_tables", "FAULTS"]
