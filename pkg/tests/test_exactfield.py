from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qconic.exactfield import (
    EPS, I_UNIT, ZETA, Cyclo, FieldContext, LiteralError, MPoly, UniPoly, base_field_roots,
    common_root_count, distinct_root_count, format_field, gcd, parse_field, resultant,
    squarefree_part,
)
from qconic.exactfield.mpoly import divide

small = st.fractions(min_value=-20, max_value=20, max_denominator=9)
cyclos = st.builds(Cyclo, small, small, small, small)
nonzero = cyclos.filter(lambda x: not x.is_zero())


# Q(zeta_12) ----------------------------------------------------------------

def test_zeta_has_order_12():
    assert ZETA ** 12 == Cyclo(1)
    assert all(ZETA ** k != Cyclo(1) for k in range(1, 12))
    assert I_UNIT * I_UNIT == Cyclo(-1)
    assert EPS ** 2 + EPS + Cyclo(1) == Cyclo(0)


@given(cyclos, cyclos, cyclos)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(nonzero)
def test_inverse(a):
    assert a * a.inverse() == Cyclo(1)


@given(nonzero, nonzero)
def test_norm_is_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert a.norm() != 0


@given(cyclos)
def test_format_parse_round_trip(a):
    assert parse_field(format_field(a)) == a


def test_literal_values():
    assert parse_field("3/4") == Cyclo(Fraction(3, 4))
    assert parse_field("i^2") == Cyclo(-1)
    assert parse_field("eps^3") == Cyclo(1)
    assert parse_field("(1 + i)/2") * 2 == Cyclo(1) + I_UNIT


@pytest.mark.parametrize("text", ["1 +", "2**3", "foo", "1/0", "i^x"])
def test_literal_errors(text):
    with pytest.raises(LiteralError) as exc:
        parse_field(text)
    assert exc.value.column is None or exc.value.column >= 1


def test_parametric_context():
    ctx = FieldContext(("lam",))
    lam = ctx.param("lam")
    x = (lam ** 2 - 1) / (lam - 1)
    assert x == lam + 1
    assert x.substitute({"lam": 3}) == Cyclo(4)
    assert ctx.parse("lam^2 - lam") == lam * (lam - 1)


# univariate polynomials -----------------------------------------------------

def _roots():
    pool = [Cyclo(k) for k in range(-3, 4)] + [I_UNIT, EPS, ZETA, Cyclo(Fraction(1, 2))]
    return st.lists(st.sampled_from(pool), min_size=1, max_size=6)


@given(_roots())
def test_distinct_root_count_from_roots(roots):
    p = UniPoly.from_roots(roots)
    assert distinct_root_count(p) == len(set(roots))
    assert squarefree_part(p).degree == len(set(roots))


@given(_roots(), _roots())
def test_gcd_and_common_roots(r1, r2):
    p, q = UniPoly.from_roots(r1), UniPoly.from_roots(r2)
    shared = set(r1) & set(r2)
    assert common_root_count(p, q) == len(shared)
    g = gcd(p, q)
    assert not (p % g) and not (q % g)


@given(_roots(), _roots())
def test_resultant_product_formula(r1, r2):
    p, q = UniPoly.from_roots(r1), UniPoly.from_roots(r2)
    expected = Cyclo(1)
    for a in r1:
        for b in r2:
            expected = expected * (a - b)
    assert resultant(p, q) == expected


def test_base_field_roots_cyclotomic():
    # primitive 8th roots of unity lie outside Q(zeta_12)
    assert base_field_roots(UniPoly([1, 0, 0, 0, 1])) == []
    assert set(base_field_roots(UniPoly([1, 0, 1]))) == {I_UNIT, -I_UNIT}
    q = UniPoly.from_roots([EPS, EPS * EPS, Cyclo(2)])
    assert set(base_field_roots(q)) == {EPS, EPS * EPS, Cyclo(2)}


# multivariate --------------------------------------------------------------

def test_mpoly_division_identity():
    x, y, z = MPoly.gens(("x", "y", "z"))
    f = x ** 3 + 2 * x * y * z - y ** 2 + z
    divisors = [x ** 2 - y, y * z - 1]
    quots, rem = divide(f, divisors)
    recon = rem
    for q, d in zip(quots, divisors):
        recon = recon + q * d
    assert recon == f
