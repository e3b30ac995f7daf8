"""Pass / fail / not-applicable verdicts with optional witnesses.

Checks in this package never raise on a mathematical failure; they return a
Verdict so callers (and the CLI report) can surface the witness.  Exceptions
are reserved for misuse: wrong dimensions, invalid arguments, broken files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class Verdict:
    name: str
    status: str
    witness: Any = None
    detail: str = ""

    @classmethod
    def passed(cls, name, detail=""):
        return cls(name, PASS, None, detail)

    @classmethod
    def failed(cls, name, witness=None, detail=""):
        return cls(name, FAIL, witness, detail)

    @classmethod
    def na(cls, name, detail=""):
        return cls(name, NOT_APPLICABLE, None, detail)

    @property
    def ok(self):
        return self.status == PASS

    @property
    def applicable(self):
        return self.status != NOT_APPLICABLE

    @property
    def acceptable(self):
        """True when the verdict should not trip a failing exit code."""
        return self.status in (PASS, NOT_APPLICABLE)

    def __bool__(self):
        return self.ok
