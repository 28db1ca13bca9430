"""Structured verdicts shared by the checks, the CLI and the tests."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class Clause:
    name: str
    verdict: str
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "verdict": self.verdict, "detail": self.detail}


@dataclass
class Report:
    """A list of clauses plus the computed objects they refer to.

    The overall verdict fails if any clause fails, is not-applicable when
    every clause is, and passes otherwise.
    """

    task: str
    clauses: list[Clause] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def check(self, name: str, ok: bool, **detail) -> bool:
        self.clauses.append(Clause(name, PASS if ok else FAIL, detail))
        return bool(ok)

    def skip(self, name: str, **detail) -> None:
        self.clauses.append(Clause(name, NOT_APPLICABLE, detail))

    def clause(self, name: str) -> Clause:
        return next(c for c in self.clauses if c.name == name)

    @property
    def verdict(self) -> str:
        if any(c.verdict == FAIL for c in self.clauses):
            return FAIL
        if self.clauses and all(c.verdict == NOT_APPLICABLE for c in self.clauses):
            return NOT_APPLICABLE
        return PASS

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def as_dict(self) -> dict:
        return {
            "task": self.task,
            "verdict": self.verdict,
            "clauses": [c.as_dict() for c in self.clauses],
            "data": self.data,
        }
