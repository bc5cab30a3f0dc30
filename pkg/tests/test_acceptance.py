"""End-to-end acceptance run: one test per criterion, each printing a status line.

Criteria whose printed claims disagree with exact computation are marked
xfail(strict=True): they run in full, report FAIL with the witness, and would
turn the suite red if they ever started passing.  Each has a companion test
that checks the corrected statement.
"""

import time

import pytest

from sl213 import grouprep
from sl213.modverify import VerifyConfig, run_suites

from .conftest import CRITERIA_LINES

pytestmark = pytest.mark.slow


class Runs:
    def __init__(self):
        self.checks = {}
        self.seconds = {}

    def run(self, suite, normalization="stated"):
        key = (suite, normalization)
        if key not in self.checks:
            t0 = time.perf_counter()
            report = run_suites([suite], VerifyConfig(normalization=normalization))
            self.seconds[key] = time.perf_counter() - t0
            self.checks[key] = report.checks
        return self.checks[key]


@pytest.fixture(scope="session")
def runs():
    return Runs()


def select(checks, groups=None, names=None, prefixes=(), contains=(), exclude=()):
    out = []
    for c in checks:
        if groups is not None and c.group not in groups:
            continue
        if names is not None or prefixes or contains:
            hit = (names is not None and c.name in names) or c.name.startswith(tuple(prefixes)) \
                or any(s in c.name for s in contains)
            if not hit:
                continue
        if any(s in c.name for s in exclude):
            continue
        out.append(c)
    return out


def record(label, checks, tolerance, expected_count=None, runtime=None):
    """Print one status line and assert every selected check passed."""
    failed = [c for c in checks if c.status != "pass"]
    problems = []
    if expected_count is not None and len(checks) != expected_count:
        problems.append(f"expected {expected_count} checks, found {len(checks)}")
    if runtime is not None:
        seconds, limit = runtime
        if seconds > limit:
            problems.append(f"runtime {seconds:.1f}s over the {limit}s target")
    ok = not failed and not problems and checks
    timing = f", {runtime[0]:.1f}s (target < {runtime[1]}s)" if runtime else ""
    line = f"{label}: {'PASS' if ok else 'FAIL'} ({len(checks) - len(failed)}/{len(checks)} checks, {tolerance}{timing})"
    for c in failed[:4]:
        line += f"\n      {c.status}: {c.name} -- {c.witness[:110]}"
    if len(failed) > 4:
        line += f"\n      ... and {len(failed) - 4} more"
    for p in problems:
        line += f"\n      {p}"
    CRITERIA_LINES.append(line)
    assert ok, line


@pytest.mark.xfail(strict=True, reason="(ST)^3 = -I with the printed S; holds only modulo the centre")
def test_c01_group_relations_and_order(runs):
    checks = select(runs.run("group"), names={
        "S^2 = -I", "T^13 = I", "(ST)^3 = I", "BFS closure of <S,T> has 2184 elements"})
    record("criterion 1  group relations, |<S,T>| = 2184", checks, "exact", 4,
           (runs.seconds[("group", "stated")], 120))


@pytest.mark.xfail(strict=True, reason="word H, H^6, H^-1 T H and (Q^3 P^4)^3 hold only modulo the centre")
def test_c02_word_elements_and_integer_lift():
    grouprep._default_word_elements.cache_clear()
    t0 = time.perf_counter()
    checks = grouprep.verify_word_elements() + grouprep.verify_lift()
    seconds = time.perf_counter() - t0
    checks = [c for c in checks if c.name != "det h = 1"]
    record("criterion 2  H word, H^6, conjugation, (Q^3 P^4)^3, integer lift", checks, "exact", 7, (seconds, 1))


def test_c01_c02_relations_modulo_centre(runs):
    checks = select(runs.run("group"), contains=("+-",)) + select(
        runs.run("group"), names={"S^2 = -I [with -S]", "(ST)^3 = I [with -S]",
                                  "H equals the signed permutation matrix [with -S]", "(Q^3 P^4)^3 = -I [with -S]"})
    record("criterion 1-2 (supplementary)  relations in PSL(2,13); -S convention", checks, "exact", 9)


def test_c03_transformation_laws(runs):
    checks = select(runs.run("forms"), prefixes=("A-law nu=", "D-law", "G-law", "radical sign"))
    record("criterion 3  A-, D-, G-transformation laws for nu = 0..12", checks, "exact", 13 + 26 + 13 + 1,
           (runs.seconds[("forms", "stated")], 60))


def test_c04_phi01_vanishes(runs):
    checks = select(runs.run("invariance"), names={"Phi_{0,1} is the zero polynomial"})
    record("criterion 4  Phi_{0,1} = 0", checks, "exact", 1)


def test_c05_point_permutations_and_invariance(runs):
    checks = select(runs.run("invariance"), names={
        "T permutes the fourteen points", "S permutes the fourteen points", "H permutes the fourteen points"},
        contains=("(symbolic)",))
    record("criterion 5  S, T, H permute the fourteen points; symbolic spot checks", checks, "exact", 3 + 6)


def test_c06_leading_terms(runs):
    checks = select(runs.run("forms"), prefixes=("leading term of",))
    record("criterion 6  leading terms of A, D, G and A-product series", checks, "exact", 7 + 14 + 13 + 13)


@pytest.mark.xfail(strict=True, reason="Phi_{3,3} constant is -13*96, not -13*27")
def test_c07_core_identifications(runs):
    checks = select(runs.run("modular"), groups={"core identifications (degrees 4-30)"})
    # the runtime target covers the whole default pipeline
    suites = ("group", "forms", "invariance", "modular", "singularities", "icosahedral", "prop32")
    for suite in suites:
        runs.run(suite)
    total = sum(runs.seconds[(s, "stated")] for s in suites)
    record("criterion 7  thirteen identifications and proof constants", checks, "exact through q^12",
           runtime=(total, 600))


def test_c07_core_identifications_recomputed(runs):
    checks = select(runs.run("modular", "recomputed"), groups={"core identifications (degrees 4-30)"},
                    exclude=("-13*27",))
    record("criterion 7 (supplementary)  recomputed normalization", checks, "exact through q^12")


def test_c08_delta_e6_identifications(runs):
    checks = select(runs.run("modular"), groups={"Delta E6 identifications (degrees 18-34)"})
    record("criterion 8  seven Delta E6 identities", checks, "exact through q^12", 7)


@pytest.mark.xfail(strict=True, reason="five stated normalization constants disagree with the expansions")
def test_c09_high_degree_identifications(runs):
    checks = select(runs.run("modular"), groups={"high-degree identifications (degrees 32-44)"})
    record("criterion 9  eight identities and three memberships", checks, "exact through q^12", 11)


def test_c09_high_degree_recomputed(runs):
    checks = select(runs.run("modular", "recomputed"), groups={"high-degree identifications (degrees 32-44)"})
    record("criterion 9 (supplementary)  recomputed normalization", checks, "exact through q^12", 11)


def test_c10_vanishing_ideal(runs):
    checks = select(runs.run("modular"), groups={"vanishing on the curve"})
    record("criterion 10  eleven generators vanish; negative control", checks, "exact through q^12", 12)


@pytest.mark.xfail(strict=True, reason="the Phi_30 and Phi_42 families inherit the wrong stated constants")
def test_c11_singularities_and_j(runs):
    checks = select(runs.run("singularities"), groups={"singularity equations", "j decomposition"})
    record("criterion 11  E8, Q18, E20 and j-decomposition over seeded draws", checks, "exact through q^12")


def test_c11_singularities_recomputed(runs):
    checks = select(runs.run("singularities", "recomputed"), groups={"singularity equations", "j decomposition"})
    record("criterion 11 (supplementary)  recomputed normalization", checks, "exact through q^12")


@pytest.mark.xfail(strict=True, reason="-(1/20) Jac(f, H) equals -T; the sign of the displayed formula is off")
def test_c12_icosahedral_baseline(runs):
    checks = select(runs.run("icosahedral"), exclude=("sign analysis",))
    record("criterion 12  icosahedral invariants and order-5 series", checks, "exact through q^12", 9)


def test_c12_icosahedral_sign_corrected(runs):
    checks = select(runs.run("icosahedral"), exclude=("Jacobian formula -(1/20)",))
    record("criterion 12 (supplementary)  +(1/20) Jac(f, H) = T", checks, "exact through q^12", 9)


def test_c13_translation_and_inversion(runs):
    checks = select(runs.run("prop32"))
    record("criterion 13  translation classes; inversion at i and 0.3+0.8i", checks, "exact; numeric < 1e-9", 9)
