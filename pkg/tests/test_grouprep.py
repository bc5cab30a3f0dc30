import pytest

from sl213.cyclofield import CycloElem, gauss_sqrt13, zeta_combination, zeta_power
from sl213.grouprep import (
    GMatrix,
    ResourceLimitError,
    build_generators,
    build_word_elements,
    compare_matrix,
    expected_H,
    generate_group,
    lift_word_2x2,
    negated_generators,
    verify_lift,
    verify_projective_relations,
    verify_relations,
    verify_word_elements,
)

I = GMatrix.identity()


@pytest.fixture(scope="module")
def gens():
    return build_generators()


@pytest.fixture(scope="module")
def words():
    return build_word_elements()


@pytest.fixture(scope="module")
def group():
    return generate_group()


def test_generator_entries(gens):
    assert gens.T[0, 0] == zeta_power(7)
    assert gens.S[0, 0] == -zeta_combination([(1, 12), (-1, 1)]) / gauss_sqrt13()


def test_s_is_symmetric(gens):
    assert gens.S == gens.S.transpose()


def test_basic_relations(gens):
    assert gens.S @ gens.S == -I
    assert gens.T**13 == I
    assert gens.S_inv @ gens.S == I
    assert gens.T_inv @ gens.T == I


def test_st_cubed_is_minus_identity(gens):
    # the sign of S is a convention; with this S the relation holds only up to the centre
    assert (gens.S @ gens.T) ** 3 == -I


def test_negated_s_satisfies_st_cubed():
    g = negated_generators()
    assert g.S @ g.S == -I
    assert (g.S @ g.T) ** 3 == I


def test_group_order(group):
    assert group.order == 2184


def test_group_table_closed(group, gens):
    for g in group.elements[::97]:
        assert g @ gens.S in group
        assert g @ gens.T in group


def test_minus_identity_central(group):
    minus = -I
    assert minus in group
    for g in group.elements[::61]:
        assert minus @ g == g @ minus


def test_cyclic_subgroup_orders(gens, words):
    assert generate_group([gens.T]).order == 13
    assert generate_group([words.H, gens.T]).order == 156


def test_group_cap():
    with pytest.raises(ResourceLimitError):
        generate_group(cap=100)


def test_h_word_against_printed_matrix(words):
    H = words.H
    assert H.is_signed_permutation()
    assert H == -expected_H()


def test_h_with_negated_s_matches_printed_matrix():
    assert build_word_elements(negated_generators()).H == expected_H()


def test_h_order(words):
    # H^6 is the central element -I; H has order 12 in SL and 6 in PSL
    assert words.H**6 == -I
    assert words.H**12 == I


def test_h_conjugates_t(gens, words):
    H = words.H
    assert H**11 == H.transpose()
    assert H.transpose() @ gens.T @ H == gens.T_power(4)


def test_q3p4_cubed(words):
    assert ((words.Q**3) @ (words.P**4)) ** 3 == I


def test_integer_lift():
    h = lift_word_2x2()
    assert h[0][0] == 4428249
    assert h[0][1] == -10547030
    assert h[0][1] % 13 == 0 and h[1][0] % 13 == 0
    assert h.det() == 1


def test_verify_lift_all_pass():
    assert all(c.ok for c in verify_lift())


def test_verify_relations_reports_negative():
    results = {c.name: c for c in verify_relations()}
    assert results["S^2 = -I"].ok and results["T^13 = I"].ok
    assert not results["(ST)^3 = I"].ok
    assert "NEGATIVE" in results["(ST)^3 = I"].witness


def test_verify_word_elements_statuses():
    statuses = {c.name: c.ok for c in verify_word_elements()}
    assert statuses == {
        "H equals the signed permutation matrix": False,
        "H^6 = I": False,
        "H^-1 T H = -T^4": False,
        "(Q^3 P^4)^3 = -I": False,
    }


def test_projective_relations_pass():
    assert all(c.ok for c in verify_projective_relations())


def test_compare_matrix_witness():
    M = GMatrix.identity()
    ok, w = compare_matrix(M, M, "M")
    assert ok
    rows = [[CycloElem.rational(int(i == j)) for j in range(6)] for i in range(6)]
    rows[2][4] = CycloElem.rational(5)
    ok, w = compare_matrix(GMatrix(rows), M, "M")
    assert not ok and "(3,5)" in w


def test_group_dump_format():
    table = generate_group([build_generators().T])
    lines = table.dump().splitlines()
    assert lines[0] == "GTBL v1 13"
    assert len(lines) == 14
    assert len(lines[1].split(" | ")) == 36
