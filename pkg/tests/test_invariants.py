import random
from fractions import Fraction

import pytest

from sl213.cyclofield import CycloElem
from sl213.grouprep import build_generators, build_word_elements
from sl213.invariants import (
    INF,
    NORMALIZATION,
    NU_INDICES,
    RECOMPUTED_NORMALIZATION,
    BudgetError,
    InvariantSpec,
    NotAPermutation,
    SampledInvariant,
    build_forms,
    build_fourteen_points,
    build_invariant,
    build_parametrized,
    compute_group_permutation,
    find_radical_signs,
    power_sum_literal,
    power_sum_polynomial,
    random_parameters,
    verify_A_transformation,
    verify_D_transformation,
    verify_G_transformation,
    verify_invariance,
)
from sl213.polyring import MPoly, evaluate, substitute_linear


@pytest.fixture(scope="module")
def forms():
    return build_forms()


def test_form_anchors(forms):
    z = [MPoly.var(i) for i in range(1, 7)]
    assert forms.A[5] == -(z[3] ** 2) - 2 * z[0] * z[5]
    assert forms.D[11].to_string() == "-z1*z2*z4 + z1*z5^2 + 2*z2^2*z5 - 3*z2*z3*z6 - z3^3"
    assert forms.G[0] == forms.D[0] ** 2 + forms.D[INF] ** 2


def test_form_degrees(forms):
    assert all(a.degree() == 2 and a.is_rational() for a in forms.A)
    assert all(d.degree() == 3 for d in forms.D.values())
    assert all(g.degree() == 6 and g.is_homogeneous() for g in forms.G)


def test_infinity_points(forms):
    pts = build_fourteen_points()
    assert pts.w[INF] == forms.A[0] ** 2 * 13
    assert pts.delta[INF] == forms.G[0] * 169
    assert pts.phi[INF] * pts.phi[INF] == pts.w[INF]


@pytest.mark.parametrize("nu", [0, 5, 12])
def test_a_law(nu):
    assert verify_A_transformation(nu).ok


def test_a_law_negative_control():
    assert not verify_A_transformation(3, shift=1).ok


@pytest.mark.parametrize("nu", [0, 7])
def test_d_law(nu):
    assert all(c.ok for c in verify_D_transformation(nu))


@pytest.mark.parametrize("nu", [0, 4])
def test_g_law(nu):
    assert verify_G_transformation(nu).ok


def test_radical_signs_unique_and_positive():
    assert find_radical_signs() == (1, 1, 1, 1)


def test_phi01_vanishes():
    assert power_sum_polynomial(0, 1).is_zero()


@pytest.mark.parametrize("mn", [(1, 0), (2, 0), (0, 1), (1, 1)])
def test_group_ring_power_sum_matches_literal_sum(mn):
    assert power_sum_polynomial(*mn) == power_sum_literal(*mn)


def test_power_sums_are_rational_and_homogeneous():
    for m, n in [(1, 0), (3, 0), (0, 2), (2, 1)]:
        p = power_sum_polynomial(m, n)
        assert p.is_rational()
        assert p.is_zero() or (p.is_homogeneous() and p.degree() == 4 * m + 6 * n)


def test_permutation_of_t():
    perm = compute_group_permutation(build_generators().T)
    assert perm.sigma[INF] == INF
    assert perm.cycle_type() == [13, 1]


def test_permutation_of_s():
    perm = compute_group_permutation(build_generators().S)
    assert perm.sigma[0] == INF and perm.sigma[INF] == 0
    assert perm.cycle_type() == [2, 2, 2, 2, 2, 2, 1, 1]
    assert {nu for nu, s in perm.phi_signs.items() if s == -1} == {2, 5, 6, 7, 8, 11}


def test_permutation_of_h():
    perm = compute_group_permutation(build_word_elements().H)
    assert perm.cycle_type() == [6, 6, 1, 1]


def test_non_group_matrix_is_rejected():
    from sl213.grouprep import GMatrix

    rows = [[CycloElem.rational(int(i == j) * (2 if i == 0 else 1)) for j in range(6)] for i in range(6)]
    with pytest.raises(NotAPermutation):
        compute_group_permutation(GMatrix(rows))


def test_symbolic_invariance_degree_4():
    p = build_invariant(InvariantSpec.of(1, 0))
    assert all(c.ok for c in verify_invariance(p))


def test_sampled_invariance_high_degree():
    p = build_invariant(InvariantSpec.of(11, 0), strategy="sampled")
    assert isinstance(p, SampledInvariant)
    assert all(c.ok for c in verify_invariance(p, strategy="points", points=3))


def test_sampled_matches_symbolic():
    spec = InvariantSpec.of(3, 0)
    sym = build_invariant(spec)
    smp = build_invariant(spec, strategy="sampled")
    for x in [(1, 2, 0, -1, 3, 1), (0, 0, 1, 1, -2, 5)]:
        assert smp.evaluate(x) == evaluate(sym, x)


def test_non_invariant_polynomial_detected():
    z1 = MPoly.var(1)
    results = verify_invariance(z1 * z1)
    assert not all(c.ok for c in results)


def test_budget_error():
    with pytest.raises(BudgetError):
        build_invariant(InvariantSpec.of(11, 0))
    assert build_invariant(InvariantSpec.of(1, 0), degree_budget=4).degree() == 4


def test_normalization_tables():
    assert NORMALIZATION[(3, 0)] == Fraction(-1, 390)
    assert NORMALIZATION[(11, 0)] == Fraction(1, 13 * 146905)
    changed = {k for k in NORMALIZATION if NORMALIZATION[k] != RECOMPUTED_NORMALIZATION[k]}
    assert changed == {(3, 3), (5, 2), (2, 4), (3, 5), (6, 3), (9, 1)}
    assert InvariantSpec.of(3, 3, "recomputed").normalization == Fraction(-1, 13 * 96)
    assert InvariantSpec.of(1, 0).normalization == 1
    assert InvariantSpec.of(2, 3).degree == 26


def test_parametrized_endpoints():
    combos = build_parametrized("E8", [1, 0, 1, 0])
    assert combos["Phi12"].coefficients() == {(3, 0): 1, (0, 2): 0}
    assert combos["Phi30"].coefficients() == {(0, 5): 1, (3, 3): 0, (6, 1): 0}
    combos = build_parametrized("Q18E20", [0, 0, 0, 0, 0, 0])
    assert combos["Phi42"].coefficients()[(9, 1)] == 1
    assert combos["Phi32"].coefficients()[(2, 4)] == 1


def test_parametrized_rejects_bad_arity():
    with pytest.raises(ValueError):
        build_parametrized("E8", [1, 2])
    with pytest.raises(ValueError):
        build_parametrized("E7", [1, 2, 3, 4])


def test_random_parameters_are_seeded():
    a = random_parameters(6, random.Random(5))
    b = random_parameters(6, random.Random(5))
    assert a == b
    assert all(abs(x.numerator) <= 9 and 0 < x.denominator <= 9 for x in a)


def test_phi_values_sum_over_all_points():
    # the identity sum_nu phi_nu = 13 A_0 (orthogonality) at a random point
    pts = build_fourteen_points()
    x = (2, -1, 3, 0, 1, -2)
    total = sum((evaluate(pts.phi[nu], x) for nu in range(13)), CycloElem())
    assert total == evaluate(build_forms().A[0], x) * 13
    assert len(NU_INDICES) == 14


def test_invariant_under_h_symbolically():
    p = build_invariant(InvariantSpec.of(1, 0))
    assert substitute_linear(p, build_word_elements().H) == p
