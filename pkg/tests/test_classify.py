import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import elimination_point_count
from qconic.classify import UNKNOWN, ConicSpec, classify, dual_presentation, sylvester_rank
from qconic.classify.ksearch import square_roots
from qconic.cliffinite import CAClass
from qconic.errors import DomainError, InconsistencyError
from qconic.exactfield import parse_field
from qconic.freequad import skew_algebra, square_central

coef = st.fractions(min_value=-9, max_value=9, max_denominator=5)
triples = st.tuples(coef, coef, coef).filter(any)
scalars = st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool)
lams = st.sampled_from([2, 3, -1, Fraction(1, 2), Fraction(-3, 2)])
skew_params = st.sampled_from([(0, 0, 0), (1, 1, 0), (1, 0, 0), (0, 2, 0), (2, 2, 2), (-1, -1, -1)])


def _spec(params, f):
    a, b, c = params
    return ConicSpec.skew(a, b, c, f)


def _invariants(rec):
    return rec.ca_class, rec.spec_count, rec.ea_count, rec.table_row


@settings(max_examples=25)
@given(skew_params, triples, scalars)
def test_scaling_invariance(params, f, t):
    r1 = classify(_spec(params, f))
    r2 = classify(_spec(params, tuple(t * c for c in f)))
    assert _invariants(r1) == _invariants(r2)


@settings(max_examples=25)
@given(skew_params, triples)
def test_cyclic_equivariance(params, f):
    # x -> y -> z -> x carries S^(a,b,c) to S^(c,a,b) and (p,q,r) to (r,p,q)
    a, b, c = params
    p, q, r = f
    r1 = classify(_spec((a, b, c), (p, q, r)))
    r2 = classify(_spec((c, a, b), (r, p, q)))
    assert _invariants(r1) == _invariants(r2)


@settings(max_examples=25)
@given(lams, triples)
def test_sklyanin_records(lam, f):
    rec = classify(ConicSpec.sklyanin(lam, f))
    assert rec.consistent
    assert rec.spec_count in (2, 3, 4)
    if rec.ea_count != UNKNOWN:
        assert (rec.ea_count, rec.spec_count) in {(2, 2), (4, 3), (6, 4)}
    S = skew_algebra(lam, lam, lam)
    fa, fb, fc = (parse_field(str(Fraction(v))) for v in f)
    for g in square_roots((lam, lam, lam), f).roots:
        sa, sb, sc = square_central(S, g)
        # g^2 proportional to f
        assert sa * fb == sb * fa and sb * fc == sc * fb and sa * fc == sc * fa


@settings(max_examples=8)
@given(skew_params, st.tuples(*[st.integers(-4, 4)] * 3).filter(any))
def test_spec_count_matches_elimination(params, f):
    assert classify(_spec(params, f)).spec_count == elimination_point_count(*params, *f)


def test_commutative_sylvester_rank():
    assert sylvester_rank((1, 0, 0)) == 1
    assert sylvester_rank((1, -1, 0)) == 2
    assert sylvester_rank((1, 1, 1)) == 3
    assert sylvester_rank([[0, 1, 0], [1, 0, 0], [0, 0, 0]]) == 2


def test_commutative_records():
    rec = classify(ConicSpec.commutative((1, 1, 1)))
    assert rec.ambient == "P" and rec.ca_class is CAClass.MAT2 and rec.spec_count == 0
    assert rec.table_row == "a smooth conic" and rec.consistent
    tl = classify(ConicSpec.tl((1, 0, 0)))
    assert tl.ambient == "TL" and tl.ca_class is CAClass.SKEW_DUAL_NUMBERS


def test_dual_presentation_shapes():
    d = dual_presentation(ConicSpec.sklyanin(2, (1, 1, 1)))
    assert d["ring"] == "k[x,y,z]" and len(d["relations"]) == 2
    d = dual_presentation(ConicSpec.commutative((1, 1, 0)))
    assert d["ring"] == "k_{-1}[x,y,z]" and len(d["relations"]) == 2


@pytest.mark.parametrize("build", [
    lambda: ConicSpec.skew(0, 0, 0, (0, 0, 0)),
    lambda: ConicSpec.sklyanin(1, (1, 1, 1)),
    lambda: ConicSpec.sklyanin(-2, (1, 1, 1)),
    lambda: ConicSpec.skew(1, 2, 3, (1, 1, 1)),
    lambda: ConicSpec("mystery", {}, (1, 0, 0)),
])
def test_invalid_specs(build):
    with pytest.raises(DomainError):
        classify(build())


def test_non_central_f_rejected():
    with pytest.raises(DomainError):
        classify(ConicSpec.tl((0, 1, 0)))


def test_explicit_g_must_square_to_f():
    assert classify(ConicSpec.skew(0, 0, 0, (1, 1, 1), g=(1, 1, 1))).ea_count == 6
    with pytest.raises(DomainError):
        classify(ConicSpec.skew(0, 0, 0, (1, 1, 1), g=(1, 0, 0)))


def test_record_json_is_stable():
    spec = ConicSpec.sklyanin(2, (1, 1, 1))
    a = json.dumps(classify(spec).to_json(), sort_keys=True, default=str)
    b = json.dumps(classify(spec).to_json(), sort_keys=True, default=str)
    assert a == b
    data = json.loads(a)
    assert data["ca_class"] == "SPLIT4" and data["table_row"] == "(6,4)"
    assert data["witnesses"]["g_search_complete"] is True


def test_inconsistency_error_is_distinct():
    assert InconsistencyError.exit_code == 3 and DomainError.exit_code == 2
