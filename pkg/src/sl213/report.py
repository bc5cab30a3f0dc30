"""Check results and run reports (JSON and markdown renderings)."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

REPORT_VERSION = "sl213-report 1"

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    witness: str
    citations: list[str] = field(default_factory=list)
    millis: int = 0
    group: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and not self.witness:
            raise ValueError(f"failing check {self.name!r} needs a witness")

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "witness": self.witness,
            "citations": list(self.citations),
        }


def check(name: str, ok: bool, witness: str, citations=(), group: str = "") -> CheckResult:
    return CheckResult(name, PASS if ok else FAIL, witness, list(citations), 0, group)


@contextmanager
def timed(results: list, start_index: int | None = None):
    """Attribute the elapsed wall time to the results appended inside the block."""
    n0 = len(results) if start_index is None else start_index
    t0 = time.perf_counter()
    yield
    ms = int((time.perf_counter() - t0) * 1000)
    added = results[n0:]
    for r in added:
        r.millis = ms // max(len(added), 1)


@dataclass
class Report:
    parameters: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def as_dict(self, timings: bool = True) -> dict:
        # wall-clock times live in their own block so "checks" stays reproducible
        d = {
            "version": REPORT_VERSION,
            "parameters": dict(self.parameters),
            "checks": [c.as_dict() for c in self.checks],
        }
        if timings:
            d["timings_ms"] = [c.millis for c in self.checks]
        return d

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.as_dict(timings), indent=2, sort_keys=False) + "\n"

    def to_markdown(self) -> str:
        lines = ["# Verification report", ""]
        lines.append("| parameter | value |")
        lines.append("|---|---|")
        for k, v in self.parameters.items():
            lines.append(f"| {k} | {v} |")
        groups: dict[str, list[CheckResult]] = {}
        for c in self.checks:
            groups.setdefault(c.group or "checks", []).append(c)
        for g, items in groups.items():
            lines += ["", f"## {g}", "", "| check | status | witness | ms |", "|---|---|---|---|"]
            for c in items:
                w = c.witness.replace("|", "\\|").replace("\n", " ")
                lines.append(f"| {c.name} | {c.status} | {w} | {c.millis} |")
        n_pass = sum(c.status == PASS for c in self.checks)
        n_skip = sum(c.status == SKIPPED for c in self.checks)
        lines += ["", f"{n_pass}/{len(self.checks)} checks passed, {n_skip} skipped."]
        return "\n".join(lines) + "\n"
