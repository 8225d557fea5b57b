"""Result record shared by every identity checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass
class CheckReport:
    """Outcome of one exact identity check.

    A failing report always carries a counterexample.
    """

    identity: str
    bound: int
    passed: bool
    cases: int = 0
    counterexample: Any = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError(f"failing report for {self.identity} lacks a counterexample")

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "bound": self.bound,
            "passed": self.passed,
            "cases": self.cases,
            "counterexample": _jsonable(self.counterexample),
        }
        if self.details:
            out["details"] = _jsonable(self.details)
        return out


def _jsonable(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return obj.to_json()
    return str(obj)


def combine(identity: str, bound: int, parts: list[CheckReport]) -> CheckReport:
    """Conjunction of sub-reports; the first failure supplies the counterexample."""
    failed = next((p for p in parts if not p.passed), None)
    return CheckReport(
        identity,
        bound,
        failed is None,
        cases=sum(p.cases for p in parts),
        counterexample=None if failed is None else {"check": failed.identity, "witness": failed.counterexample},
        details={p.identity: p.passed for p in parts},
    )
