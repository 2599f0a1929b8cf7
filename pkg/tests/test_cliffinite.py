from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qconic.classify import ConicSpec, build_algebra
from qconic.classify.tables import EXAMPLE_TABLE
from qconic.cliffinite import (
    CAClass, c_algebra, center_findim, classify_CA, clifford_deformation, even_part, groebner,
    min_poly, radical, radical_power_dims, reference_algebra, spec_count, standard_monomials,
    theta_from_central,
)
from qconic.cliffinite.classes import commutative_two_generator, monogenic, skew_two_generator
from qconic.exactfield import Cyclo, MPoly, UniPoly
from qconic.freequad import quadratic_dual


def associative(A) -> bool:
    basis = [A.basis_vec(k) for k in range(A.dim)]
    for a, b, c in product(basis, repeat=3):
        if A.mul(A.mul(a, b), c) != A.mul(a, A.mul(b, c)):
            return False
    unit = list(A.unit)
    return all(A.mul(unit, e) == e == A.mul(e, unit) for e in basis)


def _intro_specs():
    return [ConicSpec(fam, params, f) for fam, params, f, _, _ in EXAMPLE_TABLE]


@pytest.mark.parametrize("tag", list(CAClass), ids=str)
def test_reference_classifies_to_itself(tag):
    A = reference_algebra(tag)
    assert associative(A)
    assert classify_CA(A) is tag


def test_reference_spec_counts():
    expected = {CAClass.DUAL_SQUARE: 1, CAClass.JORDAN4: 1, CAClass.JORDAN3_PLUS_K: 2,
                CAClass.DOUBLE_DUAL: 2, CAClass.DUAL_PLUS_K2: 3, CAClass.SPLIT4: 4}
    for tag, n in expected.items():
        assert spec_count(reference_algebra(tag)) == n


def test_center_of_skew_dual_numbers():
    Z = center_findim(skew_two_generator(0, 0))
    assert Z.dim == 2
    z = Z.basis_vec(1)
    assert Z.mul(z, z) == Z.zero_vec()


def test_center_of_skew_split():
    assert center_findim(skew_two_generator(0, 1)).dim == 1


def test_matrix_algebra_is_central_simple():
    A = skew_two_generator(1, 1)
    assert center_findim(A).dim == 1
    assert radical(A) == []


@pytest.mark.parametrize("spec", _intro_specs(), ids=lambda s: s.key())
def test_constructed_algebras_are_associative(spec):
    S, _ = build_algebra(spec)
    dual = quadratic_dual(S)
    full = clifford_deformation(dual, theta_from_central(S, spec.f, dual))
    assert full.dim == 8
    assert associative(full)
    C = even_part(full)
    assert C.dim == 4 and associative(C)
    assert associative(c_algebra(S, spec.f))


PATTERNS = {(1, 1, 1, 1): CAClass.SPLIT4, (2, 1, 1): CAClass.DUAL_PLUS_K2, (2, 2): CAClass.DOUBLE_DUAL,
            (3, 1): CAClass.JORDAN3_PLUS_K, (4,): CAClass.JORDAN4}
distinct_roots = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=4), min_size=4,
                          max_size=4, unique=True)


@given(st.sampled_from(sorted(PATTERNS)), distinct_roots)
def test_monogenic_class_depends_on_multiplicities(pattern, roots):
    rs = []
    for r, m in zip(roots, pattern):
        rs += [Cyclo(r)] * m
    A = monogenic(UniPoly.from_roots(rs))
    assert classify_CA(A) is PATTERNS[pattern]
    assert min_poly(A, A.basis_vec(1)) == UniPoly.from_roots(rs)
    assert spec_count(A) == len(pattern)


@given(st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(bool),
       st.fractions(min_value=-9, max_value=9, max_denominator=4).filter(bool))
def test_two_generator_families(a, b):
    assert classify_CA(skew_two_generator(a, b)) is CAClass.MAT2
    assert classify_CA(commutative_two_generator(a, b)) is CAClass.SPLIT4
    assert radical_power_dims(commutative_two_generator(0, b)) == [2]


def test_groebner_standard_monomials():
    x, y = MPoly.gens(("x", "y"))
    G = groebner([x * x - y, y * y - 1])
    assert len(standard_monomials(G, 2)) == 4
