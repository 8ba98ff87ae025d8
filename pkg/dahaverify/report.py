"""
Verification reports.

A Report is a flat list of named checks with a status each, plus summary
tallies. Suites collect checks through a ReportBuilder, which times each
check and turns library exceptions into statuses.
"""

import json
import time
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from .errors import (
    DahaVerifyError,
    EigenvalueCollision,
    ExhaustedDraws,
    PochhammerPole,
    WindowTooSmall,
)
from .logs import get_logger

log = get_logger(__name__)

SCHEMA_VERSION = 1


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    SKIPPED = "skipped"


class CheckResult(BaseModel):
    name: str
    status: CheckStatus
    witness: Optional[str] = None
    millis: float = 0.0


class Summary(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    passed: int = Field(0, alias="pass")
    fail: int = 0
    inconclusive: int = 0
    skipped: int = 0


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    suite: str
    params: Dict[str, Any] = Field(default_factory=dict)
    checks: List[CheckResult] = Field(default_factory=list)
    summary: Summary = Field(default_factory=Summary)

    @property
    def ok(self) -> bool:
        return self.summary.fail == 0

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def check(self, name: str) -> CheckResult:
        for entry in self.checks:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def statuses(self) -> Dict[str, CheckStatus]:
        return {c.name: c.status for c in self.checks}

    def without_timing(self) -> "Report":
        return self.model_copy(update={"checks": [c.model_copy(update={"millis": 0.0}) for c in self.checks]})

    def to_dict(self, include_timing: bool = True) -> Dict[str, Any]:
        data = self.model_dump(by_alias=True, mode="json", exclude_none=True)
        if not include_timing:
            for entry in data["checks"]:
                entry.pop("millis", None)
        return data

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=True)


Outcome = Union[bool, CheckStatus, Tuple[Union[bool, CheckStatus], Optional[str]]]


class ReportBuilder:
    """Collects checks for one suite run."""

    def __init__(self, suite: str, params: Optional[Dict[str, Any]] = None):
        self.suite = suite
        self.params = dict(params or {})
        self._checks: List[CheckResult] = []

    def add(self, name: str, status: CheckStatus, witness: Optional[str] = None, millis: float = 0.0) -> None:
        self._checks.append(CheckResult(name=name, status=status, witness=witness, millis=round(millis, 3)))
        log.debug("check.done", suite=self.suite, check=name, status=status.value, millis=round(millis, 3))

    def record(self, name: str, passed: bool, witness: Optional[str] = None, millis: float = 0.0) -> None:
        self.add(name, CheckStatus.PASS if passed else CheckStatus.FAIL, None if passed else witness, millis)

    def run(self, name: str, fn: Callable[[], Outcome]) -> CheckStatus:
        """Run one check; exceptions become statuses."""
        start = time.perf_counter()
        witness: Optional[str] = None
        try:
            outcome = fn()
            if isinstance(outcome, tuple):
                outcome, witness = outcome
            if isinstance(outcome, CheckStatus):
                status = outcome
            else:
                status = CheckStatus.PASS if outcome else CheckStatus.FAIL
            if status == CheckStatus.PASS:
                witness = None
        except WindowTooSmall as exc:
            status, witness = CheckStatus.SKIPPED, str(exc)
        except (EigenvalueCollision, PochhammerPole, ExhaustedDraws) as exc:
            status, witness = CheckStatus.INCONCLUSIVE, str(exc)
        except DahaVerifyError as exc:
            status, witness = CheckStatus.FAIL, f"{type(exc).__name__}: {exc}"
        except Exception as exc:
            log.error("check.crashed", suite=self.suite, check=name, error=repr(exc))
            status, witness = CheckStatus.FAIL, f"{type(exc).__name__}: {exc}"
        millis = (time.perf_counter() - start) * 1000.0
        self.add(name, status, witness, millis)
        return status

    def extend(self, report: Report, prefix: str = "") -> None:
        for entry in report.checks:
            self._checks.append(entry.model_copy(update={"name": prefix + entry.name}))

    def build(self) -> Report:
        checks = sorted(self._checks, key=lambda c: c.name)
        summary = Summary(
            passed=sum(c.status == CheckStatus.PASS for c in checks),
            fail=sum(c.status == CheckStatus.FAIL for c in checks),
            inconclusive=sum(c.status == CheckStatus.INCONCLUSIVE for c in checks),
            skipped=sum(c.status == CheckStatus.SKIPPED for c in checks),
        )
        log.info(
            "suite.done",
            suite=self.suite,
            passed=summary.passed,
            fail=summary.fail,
            inconclusive=summary.inconclusive,
            skipped=summary.skipped,
        )
        return Report(suite=self.suite, params=self.params, checks=checks, summary=summary)
