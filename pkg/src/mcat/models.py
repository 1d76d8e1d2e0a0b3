from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from . import __version__


class StructuralError(ValueError):
    """A table references an id that was never declared, or is malformed."""


class BoundaryError(ValueError):
    """Adjacent factors of a composite do not compose."""

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message)
        self.position = position


class ArgumentError(ValueError):
    pass


class RejectedInputError(ValueError):
    """Input failed the validation an operation requires before it runs."""

    def __init__(self, message: str, report: Optional["ValidationReport"] = None):
        super().__init__(message)
        self.report = report


class BudgetExceededError(RuntimeError):
    pass


Witness = Tuple[str, ...]


def _witness(items: Iterable[Any]) -> Witness:
    return tuple(str(x) for x in items)


@dataclass
class CheckRecord:
    """One axiom family: pass/fail over every instance, with the first failing witness."""
    name: str
    anchor: str
    status: str = "pass"  # pass | fail | error
    witness: Optional[Witness] = None
    instances: int = 0
    detail: Optional[str] = None

    def observe(self, ok: bool, witness: Sequence[Any] = ()) -> bool:
        self.instances += 1
        if not ok and self.status == "pass":
            self.status = "fail"
            self.witness = _witness(witness)
        return ok

    def fail(self, witness: Sequence[Any] = (), detail: Optional[str] = None) -> None:
        self.instances += 1
        if self.status == "pass":
            self.status = "fail"
            self.witness = _witness(witness)
            self.detail = detail

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "witness": list(self.witness) if self.witness is not None else None,
            "instances": self.instances,
        }
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class ValidationReport:
    structure: str
    checks: Dict[str, CheckRecord] = field(default_factory=dict)
    tool_version: str = __version__

    def check(self, name: str, anchor: str = "") -> CheckRecord:
        rec = self.checks.get(name)
        if rec is None:
            rec = CheckRecord(name=name, anchor=anchor)
            self.checks[name] = rec
        return rec

    def error(self, name: str, message: str) -> None:
        rec = self.check(name, "suite")
        rec.status = "error"
        rec.detail = message

    def merge(self, other: "ValidationReport", prefix: str = "") -> "ValidationReport":
        for name, rec in other.checks.items():
            key = f"{prefix}{name}"
            mine = self.checks.get(key)
            if mine is None:
                self.checks[key] = CheckRecord(
                    name=key, anchor=rec.anchor, status=rec.status,
                    witness=rec.witness, instances=rec.instances, detail=rec.detail,
                )
                continue
            mine.instances += rec.instances
            if mine.status == "pass" and rec.status != "pass":
                mine.status = rec.status
                mine.witness = rec.witness
                mine.detail = rec.detail
        return self

    @property
    def ok(self) -> bool:
        return all(rec.status == "pass" for rec in self.checks.values())

    def failures(self) -> List[CheckRecord]:
        return [self.checks[k] for k in sorted(self.checks) if self.checks[k].status != "pass"]

    def get(self, name: str) -> CheckRecord:
        return self.checks[name]

    def summary(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "error": 0}
        for rec in self.checks.values():
            counts[rec.status] = counts.get(rec.status, 0) + 1
        counts["total"] = len(self.checks)
        return counts

    def to_dict(self) -> Dict[str, Any]:
        return {
            "structure": self.structure,
            "tool_version": self.tool_version,
            "checks": [self.checks[k].to_dict() for k in sorted(self.checks)],
            "summary": self.summary(),
        }
