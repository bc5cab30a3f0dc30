import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("sl213", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "sl213"))

# filled by tests/test_acceptance.py, printed after the run
CRITERIA_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in CRITERIA_LINES:
        terminalreporter.write_line(line)


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # never touch the user's real cache directory from tests
    monkeypatch.setenv("SL213_CACHE_DIR", str(tmp_path / "cache"))
