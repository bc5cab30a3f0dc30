import itertools
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl213.cyclofield import CycloElem, gauss_sqrt13, zeta_power
from sl213.grouprep import GMatrix, build_generators
from sl213.invariants import build_forms
from sl213.polyring import (
    MPoly,
    deserialize,
    evaluate,
    evaluate_rational,
    serialize,
    substitute_linear,
    variables,
)

z1, z2, z3, z4, z5, z6 = variables()

monomials = st.tuples(*[st.integers(0, 2)] * 6)
small_polys = st.dictionaries(monomials, st.integers(-5, 5), max_size=4).map(MPoly)
small_ints = st.integers(-3, 3)
int_matrices = st.lists(st.lists(small_ints, min_size=6, max_size=6), min_size=6, max_size=6)
int_points = st.lists(st.integers(-9, 9), min_size=6, max_size=6)


def as_gmatrix(rows):
    return GMatrix([[CycloElem.rational(x) for x in row] for row in rows])


def test_multiply_by_zero():
    assert (z1 * z2 + 3) * MPoly() == MPoly()


def test_binomial_square():
    assert (z1 + z2) ** 2 == z1**2 + 2 * z1 * z2 + z2**2


def test_a0_cubed_multinomial_coefficient():
    A0 = build_forms().A[0]
    cube = A0**3
    assert cube.degree() == 6
    # z1z4 * z2z5 * z3z6 arises in 3! orders
    assert cube.coefficient((1, 1, 1, 1, 1, 1)) == CycloElem.rational(factorial(3))


def test_degree_of_product():
    p, q = z1**2 + z3, z4**3 * z2 - z6
    assert (p * q).degree() == p.degree() + q.degree()


def test_identity_substitution():
    A3 = build_forms().A[3]
    assert substitute_linear(A3, GMatrix.identity()) == A3


def test_a0_invariant_under_t():
    A0 = build_forms().A[0]
    assert substitute_linear(A0, build_generators().T) == A0


def test_a0_under_s_is_sum_of_quadratics():
    f = build_forms()
    lhs = substitute_linear(f.A[0], build_generators().S) * gauss_sqrt13()
    assert lhs == sum(f.A[1:], f.A[0])


@given(small_polys, int_matrices, int_matrices)
def test_substitution_composes(p, m, n):
    M, N = as_gmatrix(m), as_gmatrix(n)
    assert substitute_linear(p, M @ N) == substitute_linear(substitute_linear(p, M), N)


@given(small_polys, int_matrices, int_points)
def test_substitution_agrees_with_evaluation(p, m, x):
    M = as_gmatrix(m)
    xc = [CycloElem.rational(v) for v in x]
    assert evaluate(substitute_linear(p, M), xc) == evaluate(p, M.apply(xc))


@given(small_polys, small_polys, small_polys)
def test_multiplication_commutative_associative(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


def test_substitution_with_cyclotomic_matrix_preserves_degree():
    D5 = build_forms().D[5]
    img = substitute_linear(D5, build_generators().S)
    assert img.degree() == 3 and img.is_homogeneous()
    assert not img.is_rational()


def test_evaluation_anchors():
    f = build_forms()
    assert evaluate(f.A[0], [1] * 6) == CycloElem.rational(3)
    assert evaluate(f.D[0], [2, 1, 1, 0, 0, 0]) == CycloElem.rational(2)
    assert evaluate(f.G[0], [1] * 6) == CycloElem.rational(2)


def test_evaluate_rational_fast_path():
    p = 3 * z1**2 * z6 - Fraction(1, 2) * z2
    assert evaluate_rational(p, [1, 4, 0, 0, 0, 2]) == Fraction(4)
    with pytest.raises(ValueError):
        evaluate_rational(p * zeta_power(1), [1] * 6)


def test_evaluate_wrong_arity():
    with pytest.raises(ValueError):
        evaluate(z1, [1, 2])


def test_serialize_roundtrip():
    A3 = build_forms().A[3]
    assert deserialize(serialize(A3)) == A3
    p = z1 * zeta_power(3) + Fraction(2, 7) * z4**5
    assert deserialize(serialize(p)) == p


def test_serialize_zero():
    assert serialize(MPoly()) == b"MPOLY v1 6 0\n"
    assert deserialize(serialize(MPoly())).is_zero()


def test_serialization_is_canonical():
    terms = [z1 * z2, -3 * z6**2, z3 * z4 * 5, z5]
    forward = sum(terms, MPoly())
    backward = sum(reversed(terms), MPoly())
    assert serialize(forward) == serialize(backward)


def test_serialization_orders_graded_lex():
    lines = serialize(z6 + z1**2 + z2 * z3).decode().splitlines()[1:]
    exps = [tuple(int(e) for e in ln.split()[:6]) for ln in lines]
    assert exps == [(2, 0, 0, 0, 0, 0), (0, 1, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1)]


@pytest.mark.parametrize(
    "text",
    [
        "MPOLY v2 6 0\n",
        "MPOLY v1 5 0\n",
        "MPOLY v1 6 1\n",
        "MPOLY v1 6 1\n1 0 0 0 0 0 2/4" + " 0/1" * 11 + "\n",
        "MPOLY v1 6 1\n1 0 0 0 0 0 1/1\n",
        "",
    ],
)
def test_deserialize_rejects_malformed(text):
    with pytest.raises(ValueError):
        deserialize(text.encode())


def test_to_string():
    D11 = build_forms().D[11]
    assert D11.to_string() == "-z1*z2*z4 + z1*z5^2 + 2*z2^2*z5 - 3*z2*z3*z6 - z3^3"
    assert MPoly().to_string() == "0"
    assert MPoly.constant(-2).to_string() == "-2"


def test_terms_and_coefficients():
    p = 4 * z1 * z2 - z3
    assert p.num_terms() == 2
    assert p.coefficient((1, 1, 0, 0, 0, 0)) == CycloElem.rational(4)
    assert p.coefficient((0, 0, 0, 0, 0, 1)).is_zero()
    assert not p.is_homogeneous()


def test_powers_of_forms_are_homogeneous():
    for g in build_forms().G[:4]:
        assert g.is_homogeneous() and g.degree() == 6
    for combo in itertools.combinations(build_forms().A, 2):
        assert (combo[0] * combo[1]).degree() == 4
