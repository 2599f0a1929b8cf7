"""Field-element literal grammar: parsing and canonical formatting.

Grammar: integers, p/q, zeta, eps (= zeta^4), i (= zeta^3), declared
parameter names, + - * / ^ and parentheses.  Parsing goes through the
stdlib ``ast`` module after mapping ``^`` to ``**``.
"""
from __future__ import annotations

import ast
from fractions import Fraction

from sympy.polys.orderings import grlex

from ..errors import ParseError
from .cyclo import EPS, I_UNIT, ZETA, Cyclo

CONSTANTS = {"zeta": ZETA, "eps": EPS, "i": I_UNIT}


class LiteralError(ParseError, ValueError):
    """Parse error anchored at a 1-based column of the input text."""

    def __init__(self, message: str, column: int | None = None, text: str = ""):
        where = f" at column {column}" if column is not None else ""
        super().__init__(f"{message}{where}", column=column)
        self.text = text


def _tree(text: str) -> ast.AST:
    if not isinstance(text, str):
        text = str(text)
    src = text.replace("^", "**")
    if "**" in text:
        raise LiteralError("'**' is not part of the grammar; use '^'", text.index("**") + 1, text)
    try:
        return ast.parse(src.strip(), mode="eval").body
    except SyntaxError as exc:
        col = max(1, min(exc.offset or 1, len(text)))
        raise LiteralError(f"syntax error: {exc.msg}", col, text) from None


def _col(node) -> int:
    return getattr(node, "col_offset", 0) + 1


def _int_exponent(node, text):
    sign = 1
    while isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        if isinstance(node.op, ast.USub):
            sign = -sign
        node = node.operand
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return sign * node.value
    raise LiteralError("exponent must be an integer", _col(node), text)


def evaluate(text: str, leaf):
    """Walk the expression tree; ``leaf(kind, value, node)`` builds atoms.

    kind is "int" or "name".  Operands must support + - * / and integer powers.
    """
    tree = _tree(text)

    def walk(node):
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = walk(node.left)
                n = _int_exponent(node.right, text)
                try:
                    return base ** n
                except ZeroDivisionError:
                    raise LiteralError("division by zero", _col(node), text) from None
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                try:
                    return left / right
                except ZeroDivisionError:
                    raise LiteralError("division by zero", _col(node), text) from None
                except TypeError as exc:
                    raise LiteralError(str(exc), _col(node), text) from None
            raise LiteralError("unsupported operator", _col(node), text)
        if isinstance(node, ast.UnaryOp):
            if isinstance(node.op, ast.USub):
                return -walk(node.operand)
            if isinstance(node.op, ast.UAdd):
                return walk(node.operand)
            raise LiteralError("unsupported operator", _col(node), text)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int) and not isinstance(node.value, bool):
                return leaf("int", node.value, node)
            raise LiteralError(f"unsupported literal {node.value!r}", _col(node), text)
        if isinstance(node, ast.Name):
            return leaf("name", node.id, node)
        raise LiteralError("unsupported expression", _col(node), text)

    return walk(tree)


def parse_field(text: str, ctx=None):
    """Parse a field literal in the given context (parameter-free by default)."""
    from .ratfunc import FieldContext

    if ctx is None:
        ctx = FieldContext(())

    def leaf(kind, value, node):
        if kind == "int":
            return ctx.convert(value)
        if value in ctx.names:
            return ctx.param(value)
        if value in CONSTANTS:
            return ctx.convert(CONSTANTS[value])
        raise LiteralError(f"unknown symbol '{value}'", _col(node), text)

    return evaluate(text, leaf)


# formatting -----------------------------------------------------------------

def _fmt_q(q) -> str:
    f = Fraction(int(q.numerator), int(q.denominator))
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


_UNITS = ("", "eps", "i", "i*eps")


def _cyclo_terms(x: Cyclo):
    """List of (sign, magnitude string or '', unit string) terms."""
    out = []
    for q, unit in zip(x.eps_coords(), _UNITS):
        if not q:
            continue
        sign = "-" if q < 0 else "+"
        mag = _fmt_q(abs(q))
        out.append((sign, mag, unit))
    return out


def _join(terms) -> str:
    """terms: list of (sign, body).  Produces 'a + b - c'."""
    if not terms:
        return "0"
    parts = []
    for k, (sign, body) in enumerate(terms):
        if k == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def format_cyclo(x: Cyclo) -> str:
    terms = []
    for sign, mag, unit in _cyclo_terms(x):
        if not unit:
            body = mag
        elif mag == "1":
            body = unit
        else:
            body = f"{mag}*{unit}"
        terms.append((sign, body))
    return _join(terms)


def _monomial(names, exps) -> str:
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def format_poly_terms(names, terms) -> str:
    """terms: dict exponent-tuple -> Cyclo.  Monomials in descending graded-lex order."""
    out = []
    for m in sorted(terms, key=grlex, reverse=True):
        c = terms[m]
        mono = _monomial(names, m)
        ct = _cyclo_terms(c)
        if not mono:
            for sign, mag, unit in ct:
                body = mag if not unit else (unit if mag == "1" else f"{mag}*{unit}")
                out.append((sign, body))
            continue
        if len(ct) == 1:
            sign, mag, unit = ct[0]
            if mag == "1":
                coeff = unit
            elif unit:
                coeff = f"{mag}*{unit}"
            else:
                coeff = mag
            body = f"{coeff}*{mono}" if coeff else mono
            out.append((sign, body))
        else:
            out.append(("+", f"({format_cyclo(c)})*{mono}"))
    return _join(out)


def format_ratfunc(x) -> str:
    names = x.ctx.names
    num = format_poly_terms(names, x.numerator_terms())
    if x.den == 1:
        return num
    den = format_poly_terms(names, x.denominator_terms())
    nterms = x.numerator_terms()
    if len(nterms) > 1 or len(_cyclo_terms(next(iter(nterms.values())))) > 1 or num.startswith("-"):
        num = f"({num})"
    if len(x.denominator_terms()) > 1 or "*" in den or "^" in den:
        den = f"({den})"
    return f"{num}/{den}"


def format_field(x) -> str:
    return str(x)
