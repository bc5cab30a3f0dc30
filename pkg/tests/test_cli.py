import json

import pytest

from sl213.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_theta_quadratic(capsys):
    code, out, _ = run(capsys, "expand", "A0", "--order", "1")
    assert code == 0
    assert out.splitlines()[0] == "q^{1/4}: 1"


def test_expand_phi01_is_zero(capsys):
    code, out, _ = run(capsys, "expand", "Phi:0,1", "--order", "2")
    assert code == 0 and out.strip() == "0"


def test_expand_j(capsys):
    code, out, _ = run(capsys, "expand", "j", "--order", "3")
    assert out.splitlines()[:3] == ["q^{-1}: 1", "q^0: 744", "q^1: 196884"]


def test_expand_poly(capsys):
    code, out, _ = run(capsys, "expand", "D11", "--poly")
    assert code == 0
    assert out.strip() == "-z1*z2*z4 + z1*z5^2 + 2*z2^2*z5 - 3*z2*z3*z6 - z3^3"


def test_order_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SL213_ORDER", "2")
    _, out, _ = run(capsys, "expand", "eta")
    assert out.splitlines() == ["q^{1/24}: 1", "q^{25/24}: -1"]


@pytest.mark.parametrize("argv", [
    ["expand", "A9"],
    ["expand", "nonsense"],
    ["expand", "Phi:0,0"],
    ["expand", "A0", "--order", "0"],
    ["verify", "bogus"],
    ["verify", "group", "--draws", "0"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_bad_order_environment(capsys, monkeypatch):
    monkeypatch.setenv("SL213_ORDER", "twelve")
    code, _, err = run(capsys, "expand", "A0")
    assert code == 2 and "SL213_ORDER" in err


def test_cache_lifecycle(capsys, tmp_path):
    d = str(tmp_path / "c")
    code, out, _ = run(capsys, "cache", "warm", "--degree-budget", "12", "--cache-dir", d)
    assert code == 0 and out.startswith("stored 6 power sums")
    code, out, _ = run(capsys, "cache", "status", "--cache-dir", d)
    assert code == 0 and "6 entries" in out
    (tmp_path / "c" / "powersum_m1_n0_raw.mpoly").write_text("garbage")
    code, _, err = run(capsys, "cache", "status", "--cache-dir", d)
    assert code == 3 and "corrupt" in err
    code, out, _ = run(capsys, "cache", "clear", "--cache-dir", d)
    assert code == 0 and out.startswith("removed 6")


def test_cache_directory_unusable(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, err = run(capsys, "cache", "warm", "--degree-budget", "4", "--cache-dir", str(blocker / "x"))
    assert code == 3 and "cannot" in err


def test_budget_error_exit_code(capsys):
    code, _, err = run(capsys, "expand", "Phi:11,0", "--poly")
    assert code == 3 and "budget" in err


def test_verify_group_reports_sign_failures(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "group", "--out", str(out_file), "--no-timings")
    assert code == 1
    data = json.loads(out_file.read_text())
    closure = [c for c in data["checks"] if "2184" in c["name"]]
    assert closure and closure[0]["status"] == "pass"
    assert "failed" in err


def test_verify_markdown_to_stdout(capsys):
    code, out, _ = run(capsys, "verify", "prop32", "--format", "markdown", "--order", "3")
    assert code == 0
    assert out.startswith("# Verification report")


def test_verify_byte_identical_without_timings(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "verify", "icosahedral", "--order", "3", "--no-timings", "--out", str(path))
    assert a.read_bytes() == b.read_bytes()
