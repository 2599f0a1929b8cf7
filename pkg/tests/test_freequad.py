from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qconic.classify.pipeline import TL_RELATIONS
from qconic.cliffinite import is_clifford_map, theta_from_central
from qconic.cliffinite.clifford import CliffordMap
from qconic.errors import DomainError
from qconic.exactfield import Cyclo
from qconic.freequad import (
    FreeElem, QuadAlgebra, center_basis, commutative_algebra, graded_dim, is_quantum_candidate,
    parse_free, quadratic_dual, skew_algebra, square_central,
)
from qconic.freequad.quadalg import annihilator, same_span
from qconic.pointgeo import catalog


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def _skew(a, b, c):
    return skew_algebra(a, b, c)


def _roundtrip(S):
    dual = quadratic_dual(S)
    back = annihilator(dual.vectors(), S.ctx)
    return same_span(back, [r.to_vector() for r in S.relations])


def test_hilbert_series_of_quantum_planes():
    for S in (commutative_algebra(), _skew(0, 0, 0), _skew(1, 1, 0), _skew(2, 2, 2)):
        assert [graded_dim(S, d) for d in range(5)] == [1, 3, 6, 10, 15]
        assert is_quantum_candidate(S)


def test_degenerate_relations_rejected():
    with pytest.raises(DomainError):
        QuadAlgebra(["x*y", "x*y", "y*z"])


def test_center_dimensions():
    assert len(center_basis(commutative_algebra(), 2)) == 6
    assert [str(z) for z in center_basis(_skew(0, 0, 0), 2)] == ["x^2", "y^2", "z^2"]
    assert len(center_basis(QuadAlgebra(list(TL_RELATIONS)), 2)) == 1


@pytest.mark.parametrize("e", catalog(), ids=lambda e: e.tag)
def test_dual_round_trip_catalog(e):
    for P in e.bindings():
        assert _roundtrip(e.algebra(P))


@given(rationals, rationals, rationals)
def test_dual_round_trip_skew_family(a, b, c):
    assert _roundtrip(_skew(a, b, c))


def test_dual_kinds():
    assert quadratic_dual(commutative_algebra()).kind == "skew"
    assert quadratic_dual(_skew(1, 2, 3)).kind == "commutative"
    assert len(quadratic_dual(_skew(0, 0, 0))) == 6


@given(rationals, rationals, rationals, st.tuples(rationals, rationals, rationals))
def test_square_central_closed_form(a, b, c, g):
    S = _skew(a, b, c)
    if all(v == 0 for v in g):
        return
    fa, fb, fc = square_central(S, g)
    l, m, n = (Cyclo(v) for v in g)
    assert fa == l * l - Cyclo(a) * m * n
    assert fb == m * m - Cyclo(b) * n * l
    assert fc == n * n - Cyclo(c) * l * m


# Clifford maps from central elements -------------------------------------------

AMBIENTS = {
    "commutative": commutative_algebra(),
    "tl": QuadAlgebra(list(TL_RELATIONS)),
    "skew000": _skew(0, 0, 0),
    "skew110": _skew(1, 1, 0),
    "skew100": _skew(1, 0, 0),
    "sklyanin2": _skew(2, 2, 2),
    "sklyanin-1/2": _skew(Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2)),
}
CENTERS = {k: center_basis(S, 2) for k, S in AMBIENTS.items()}


@settings(max_examples=50)
@given(st.sampled_from(sorted(AMBIENTS)), st.lists(st.integers(-5, 5), min_size=6, max_size=6))
def test_theta_f_is_clifford(name, coeffs):
    S = AMBIENTS[name]
    f = None
    for z, c in zip(CENTERS[name], coeffs):
        term = z * Cyclo(c)
        f = term if f is None else f + term
    if f is None or f.is_zero():
        f = CENTERS[name][0]
    dual = quadratic_dual(S)
    assert is_clifford_map(dual, theta_from_central(S, f, dual))


def test_non_central_theta_rejected():
    S = _skew(0, 0, 0)
    with pytest.raises(DomainError):
        theta_from_central(S, parse_free("x*y"))


def test_generic_functional_is_not_clifford():
    S = _skew(0, 0, 0)
    dual = quadratic_dual(S)
    assert not is_clifford_map(dual, CliffordMap(dual, [1, 2, 3, 5, 7, 11]))


def test_free_element_parse_and_print():
    f = parse_free("2*x*y - y*x + z^2")
    assert isinstance(f, FreeElem)
    assert parse_free(str(f)) == f
