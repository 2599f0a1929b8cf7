"""qconic command line: classify conics, run the table battery, inspect the pieces.

Exit codes: 0 ok, 1 parse error, 2 validation or domain error, 3 internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys

import yaml

from .classify import ConicSpec, build_algebra, classify, dual_presentation, verify_tables
from .classify.verify import FAULTS
from .cliffinite import c_algebra, classify_CA, min_poly, radical_power_dims, spec_count
from .cliffinite.findim import abelian_point_count
from .errors import ParseError, QconicError
from .exactfield.literal import LiteralError, format_field, parse_field
from .freequad.quadalg import center_basis, quadratic_dual
from .pointgeo.catalog import entry as catalog_entry
from .pointgeo.geometry import intersect_line_component, point_variety_EA
from .pointgeo.points import INFINITE

EVEN_GENERATORS = ("uv", "vw", "wu")


# spec ingestion ---------------------------------------------------------------------

def _literal(text, where=""):
    try:
        return parse_field(str(text))
    except LiteralError as exc:
        raise ParseError(f"{where}: {exc.message}" if where else exc.message, column=exc.column) from None


def _triple(text, name):
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) != 3:
        raise ParseError(f"--{name} needs three comma-separated field literals")
    return tuple(_literal(p, f"--{name}") for p in parts)


def _scalar(node):
    if not isinstance(node, yaml.ScalarNode):
        raise ParseError("expected a field literal", node.start_mark.line + 1, node.start_mark.column + 1)
    try:
        return parse_field(node.value)
    except LiteralError as exc:
        col = node.start_mark.column + (exc.column or 1)
        raise ParseError(f"line {node.start_mark.line + 1}, column {col}: {exc.message}",
                         node.start_mark.line + 1, col) from None


def _sequence(node, name):
    if not isinstance(node, yaml.SequenceNode) or len(node.value) != 3:
        m = node.start_mark
        raise ParseError(f"line {m.line + 1}: '{name}' must be a list of three field literals", m.line + 1, m.column + 1)
    return tuple(_scalar(item) for item in node.value)


def parse_spec_text(text: str) -> dict:
    """family / parameters / f / g from a YAML document, with line-anchored errors."""
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        line = mark.line + 1 if mark else None
        col = mark.column + 1 if mark else None
        raise ParseError(f"malformed spec file (line {line}, column {col}): {getattr(exc, 'problem', exc)}",
                         line, col) from None
    if not isinstance(root, yaml.MappingNode):
        raise ParseError("spec file must be a mapping with keys family, parameters, f, g", 1, 1)
    out = {"parameters": {}, "g": None}
    for key, value in root.value:
        name = key.value
        m = key.start_mark
        if name == "family":
            if not isinstance(value, yaml.ScalarNode):
                raise ParseError(f"line {m.line + 1}: family must be a string", m.line + 1, m.column + 1)
            out["family"] = value.value
        elif name in ("parameters", "params"):
            if not isinstance(value, yaml.MappingNode):
                raise ParseError(f"line {m.line + 1}: parameters must be a mapping", m.line + 1, m.column + 1)
            out["parameters"] = {k.value: _scalar(v) for k, v in value.value}
        elif name in ("f", "g"):
            out[name] = _sequence(value, name)
        else:
            raise ParseError(f"line {m.line + 1}: unknown key '{name}'", m.line + 1, m.column + 1)
    if "family" not in out:
        raise ParseError("spec file has no 'family' key", 1, 1)
    return out


def _spec_from_args(args, need_f=True) -> ConicSpec:
    if args.spec:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read spec file: {exc.strerror}") from None
        data = parse_spec_text(text)
        family, params, f, g = data["family"], data["parameters"], data.get("f"), data["g"]
    else:
        if not args.family:
            raise ParseError("give --spec PATH or --family")
        family = args.family
        params = {}
        for item in args.param or []:
            if "=" not in item:
                raise ParseError(f"--param expects NAME=VALUE, got {item!r}")
            k, v = item.split("=", 1)
            params[k.strip()] = _literal(v, f"--param {k.strip()}")
        f = _triple(args.f, "f") if args.f else None
        g = _triple(args.g, "g") if getattr(args, "g", None) else None
    if f is None:
        if need_f:
            raise ParseError("no f given (use --f A,B,C or an 'f' key)")
        f = (1, 0, 0)
    return ConicSpec(family, params, f, g)


# commands ---------------------------------------------------------------------------------

def cmd_classify(args):
    rec = classify(_spec_from_args(args))
    return rec.to_json()


def cmd_center(args):
    S, _ = build_algebra(_spec_from_args(args, need_f=False))
    return [str(z) for z in center_basis(S, 2)]


def cmd_dual(args):
    spec = _spec_from_args(args, need_f=False)
    S, _ = build_algebra(spec)
    d = quadratic_dual(S)
    out = {"kind": d.kind, "relations": d.strings()}
    if args.f or args.spec:
        out["conic_dual"] = dual_presentation(spec)
    return out


def _generator(C):
    """First even basis element (then pairwise sums) whose minimal polynomial has degree dim C."""
    candidates = [{g: 1} for g in EVEN_GENERATORS]
    candidates += [{a: 1, b: 1} for i, a in enumerate(EVEN_GENERATORS) for b in EVEN_GENERATORS[i + 1:]]
    for c in candidates:
        p = min_poly(C, C.element(c))
        if p.degree == C.dim:
            return " + ".join(c), p
    return None, None


def cmd_c_algebra(args):
    spec = _spec_from_args(args)
    S, _ = build_algebra(spec)
    C = c_algebra(S, spec.f)
    tag = classify_CA(C)
    out = {"class": str(tag), "presentation": tag.presentation, "commutative": C.is_commutative(),
           "radical_power_dims": radical_power_dims(C),
           "spec_count": spec_count(C) if C.is_commutative() else abelian_point_count(C)}
    gen, p = _generator(C) if C.is_commutative() else (None, None)
    out["generator"] = gen
    out["min_poly"] = p.format("u") if p is not None else None
    out["algebra"] = C.to_json()
    return out


def cmd_geometry(args):
    if not args.g:
        raise ParseError("geometry needs --g A,B,C")
    g = _triple(args.g, "g")
    out = {"g": [format_field(c) for c in g]}
    if args.tag:
        e = catalog_entry(args.tag)
        params = {}
        for item in args.param or []:
            k, v = item.split("=", 1)
            params[k.strip()] = _literal(v, f"--param {k.strip()}")
        P = e.bind(params)
        comps = []
        for comp in e.components(P):
            if comp.form is None:
                comps.append({"component": comp.name, "count": INFINITE, "points": [], "note": "whole plane"})
                continue
            r = intersect_line_component(g, comp.form)
            comps.append({"component": comp.name, **r.to_json()})
        out.update({"tag": e.tag, "components": comps})
        return out
    spec = _spec_from_args(args, need_f=False)
    S, _ = build_algebra(spec)
    out["E_A"] = point_variety_EA(S, g).to_json()
    return out


def cmd_verify_tables(args):
    return verify_tables(fault=args.inject_fault)


# argument parsing ---------------------------------------------------------------------------

def _spec_flags(p, g=True):
    p.add_argument("--spec", metavar="PATH", help="YAML spec file (family, parameters, f, g)")
    p.add_argument("--family", help="commutative | tl | skew | sklyanin")
    p.add_argument("--param", action="append", metavar="NAME=VALUE", help="family parameter (repeatable)")
    p.add_argument("--f", metavar="A,B,C", help="coefficients of f = a x^2 + b y^2 + c z^2")
    if g:
        p.add_argument("--g", metavar="A,B,C", help="linear form g with g^2 ~ f")
    p.add_argument("--json", action="store_true", help="JSON output (the default for this command)")


class _Parser(argparse.ArgumentParser):
    """Usage errors are parse errors (exit 1), not argparse's default 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(json.dumps({"error": "parse", "message": message}), file=sys.stderr)
        sys.exit(1)


def build_parser():
    parser = _Parser(prog="qconic", description="Invariants of noncommutative conics.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("classify", help="compute the invariant record of a conic")
    _spec_flags(p)
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("verify-tables", help="run the table battery")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--text", action="store_true")
    p.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_tables)
    p = sub.add_parser("center", help="basis of the degree-2 center")
    _spec_flags(p, g=False)
    p.set_defaults(func=cmd_center)
    p = sub.add_parser("dual", help="quadratic dual of the ambient algebra (and of the conic with --f)")
    _spec_flags(p, g=False)
    p.set_defaults(func=cmd_dual)
    p = sub.add_parser("c-algebra", help="C(A), its class and a monogenic generator")
    _spec_flags(p, g=False)
    p.set_defaults(func=cmd_c_algebra)
    p = sub.add_parser("geometry", help="line intersections with a catalog point variety, or E_A")
    _spec_flags(p)
    p.add_argument("--tag", help="catalog entry (P, S1, S3, S', T, T', NC, CC, TL, WL, EC)")
    p.set_defaults(func=cmd_geometry)
    return parser


def _error(exc: QconicError):
    kind = {1: "parse", 2: "domain", 3: "inconsistency"}[exc.exit_code]
    out = {"error": kind, "message": exc.message}
    for attr in ("line", "column"):
        v = getattr(exc, attr, None)
        if v is not None:
            out[attr] = v
    if exc.payload is not None:
        out["payload"] = exc.payload
    return out


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except QconicError as exc:
        print(json.dumps(_error(exc), ensure_ascii=False, default=str), file=sys.stderr)
        return exc.exit_code
    if args.command == "verify-tables":
        if args.json:
            print(json.dumps(result.to_json(), indent=2, ensure_ascii=False))
        else:
            print(result.to_text())
        return 0 if result.ok else 3
    print(json.dumps(result, indent=2, ensure_ascii=False, default=str))
    return 0


if __name__ == "__main__":
    sys.exit(main())
