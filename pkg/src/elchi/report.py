"""Structured pass/fail records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class Discrepancy:
    """One failing basis key: what was expected, what was computed."""

    key: Any
    expected: Any = None
    actual: Any = None
    note: str = ""

    @property
    def difference(self):
        if self.expected is None or self.actual is None:
            return None
        try:
            return self.actual - self.expected
        except TypeError:
            return None


@dataclass
class VerificationReport:
    identity: str
    window: Dict[str, Any] = field(default_factory=dict)
    discrepancies: List[Discrepancy] = field(default_factory=list)
    checked: int = 0
    details: Dict[str, Any] = field(default_factory=dict)
    # informational reports are emitted but never gate the exit status
    informational: bool = False

    @property
    def passed(self) -> bool:
        return not self.discrepancies

    def expect_equal(self, key, expected, actual, note: str = "") -> bool:
        self.checked += 1
        if expected == actual:
            return True
        self.discrepancies.append(Discrepancy(key, expected, actual, note))
        return False

    def expect_true(self, key, ok: bool, note: str = "") -> bool:
        self.checked += 1
        if not ok:
            self.discrepancies.append(Discrepancy(key, note=note))
        return ok

    def merge(self, other: "VerificationReport") -> None:
        self.checked += other.checked
        self.discrepancies.extend(other.discrepancies)

    def summary(self) -> str:
        flag = "PASS" if self.passed else ("INFO" if self.informational else "FAIL")
        out = f"[{flag}] {self.identity}: {self.checked} checks"
        if self.discrepancies:
            first = self.discrepancies[0]
            out += f", {len(self.discrepancies)} discrepancies (first at {first.key})"
        return out


@dataclass
class EigenReport(VerificationReport):
    """Report for an eigenvalue statement; ``eigenvalue`` is a ParamScalar."""

    eigenvalue: Optional[Any] = None


@dataclass
class LimitReport(VerificationReport):
    """Coefficient comparison of a classical limit against an oracle series."""

    order: int = 0

    @property
    def mismatches(self) -> List[Discrepancy]:
        return self.discrepancies
