"""Uniform result records for the identity verifications.

Every verify_* operation returns a :class:`VerificationReport`: a flat
list of named checks, each exact pass/fail with a detail string carrying
the first counterexample when one exists.  Reports serialize to the JSON
shape the command-line tool emits.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    target: str
    scope: str
    n_max: int
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, ok, detail))

    def note(self, text: str) -> None:
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "scope": self.scope,
            "n_max": self.n_max,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "ok": c.ok, "detail": c.detail} for c in self.checks
            ],
            "notes": list(self.notes),
        }

    def lines(self) -> list[str]:
        out = [f"{self.target} [{self.scope}] n_max={self.n_max}: "
               f"{'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok " if c.ok else "FAIL"
            detail = f" -- {c.detail}" if c.detail else ""
            out.append(f"  [{mark}] {c.name}{detail}")
        for n in self.notes:
            out.append(f"  note: {n}")
        return out
