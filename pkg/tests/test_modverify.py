import json
from fractions import Fraction

import pytest

from sl213.invariants import NORMALIZATION
from sl213.modverify import (
    SUITES,
    VerifyConfig,
    check_core_identifications,
    check_vanishing_ideals,
    expand_selection,
    find_constant,
    klein_forms,
    modular_data,
    run_suites,
    solve_membership,
    suite_icosahedral,
    suite_theta_transformations,
    translation_residues,
)
from sl213.qseries import QExp

ORDER = 6


@pytest.fixture(scope="module")
def md():
    return modular_data(ORDER)


def test_find_constant_recovers_delta_multiple(md):
    c, ok, w = find_constant(md, md.raw(3, 0), md.targets["Delta"])
    assert ok and c == -13 * 30
    assert "verified to order" in w


def test_find_constant_reports_valuation_mismatch(md):
    c, ok, w = find_constant(md, md.raw(3, 0), md.targets["Delta E6"] * md.eta)
    assert c is None and not ok and "valuation" in w


@pytest.mark.parametrize("mn,expected", [
    ((8, 2), (Fraction(857779, 864), Fraction(-902707, 864))),
    ((5, 4), (Fraction(15197, 54), Fraction(-20813, 54))),
    ((2, 6), (Fraction(-106925, 216), Fraction(73229, 216))),
])
def test_membership_pairs(md, mn, expected):
    pair, ok, _ = solve_membership(md, md.raw(*mn))
    assert ok
    assert pair == expected


def test_membership_of_zero(md):
    pair, ok, _ = solve_membership(md, QExp.zero(md.ctx))
    assert ok and pair == (0, 0)


def test_recomputed_constant_for_phi33(md):
    c, ok, _ = find_constant(md, md.raw(3, 3), md.targets["Delta^2 E6"])
    assert ok and c == -13 * 96
    assert NORMALIZATION[(3, 3)] == Fraction(-1, 13 * 27)


def test_core_identifications_recomputed_all_pass_except_literal_constant(md):
    results = check_core_identifications(md, "recomputed")
    failing = [c.name for c in results if c.status == "fail"]
    assert failing == ["un-normalized Phi_{3,3}(x) = -13*27 Delta^2 E6"]


def test_stated_table_failure_has_witness(md):
    results = {c.name: c for c in check_core_identifications(md, "stated")}
    bad = results["Phi_{3,3}(x) = Delta^2 E6 [normalization -1/351]"]
    assert not bad.ok and bad.witness.startswith("first mismatch at q^2")


def test_vanishing_ideal_negative_control(md):
    results = check_vanishing_ideals(md)
    assert all(c.ok for c in results)
    assert any("negative control" in c.name for c in results)


def test_klein_forms():
    f, H, T, hessian, jac = klein_forms()
    assert hessian == H
    assert jac == -T
    assert T**2 + H**3 - 1728 * f**5 == 0


def test_icosahedral_suite_statuses():
    results = {c.name: c.ok for c in suite_icosahedral(VerifyConfig(order=4))}
    assert [n for n, ok in results.items() if not ok] == ["Jacobian formula -(1/20) Jac(f, H) reproduces T"]


def test_translation_residues():
    for k, got, want in translation_residues(3):
        assert got == want == (65 + 8 * k) % 104


def test_theta_transformation_suite():
    assert all(c.ok for c in suite_theta_transformations(VerifyConfig(order=3)))


def test_expand_selection():
    assert expand_selection(["all"]) == list(SUITES)
    assert expand_selection(["prop32", "group", "group"]) == ["group", "prop32"]
    with pytest.raises(ValueError):
        expand_selection(["nope"])


def test_report_is_deterministic_without_timings():
    cfg = VerifyConfig(order=3)
    a = run_suites(["icosahedral", "prop32"], cfg).to_json(timings=False)
    b = run_suites(["icosahedral", "prop32"], cfg).to_json(timings=False)
    assert a == b
    data = json.loads(a)
    assert data["version"] == "sl213-report 1"
    assert data["parameters"]["truncation_order"] == 3
    assert "timings_ms" not in data
    assert all("millis" not in c for c in data["checks"])


def test_report_markdown_lists_groups():
    report = run_suites(["icosahedral"], VerifyConfig(order=3))
    md_text = report.to_markdown()
    assert "## icosahedral baseline" in md_text
    assert md_text.rstrip().endswith("skipped.")
    assert not report.passed


def test_failed_check_requires_witness():
    from sl213.report import CheckResult

    with pytest.raises(ValueError):
        CheckResult("x", "fail", "")
    with pytest.raises(ValueError):
        CheckResult("x", "maybe", "w")


def test_timings_kept_out_of_check_records():
    report = run_suites(["prop32"], VerifyConfig(order=3))
    data = json.loads(report.to_json())
    assert len(data["timings_ms"]) == len(data["checks"])
    assert all(set(c) == {"name", "status", "witness", "citations"} for c in data["checks"])
