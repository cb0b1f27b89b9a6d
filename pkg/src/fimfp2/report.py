"""Result record shared by every exhaustive checker."""
from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterator

# counterexample lists are truncated to keep reports readable
MAX_COUNTEREXAMPLES = 50


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    checked: int = 0
    counterexamples: list[Any] = field(default_factory=list)
    failures: int = 0
    elapsed_ms: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def tick(self, n: int = 1) -> None:
        self.checked += n

    def fail(self, example: Any) -> None:
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(example)

    def expect(self, condition: bool, example: Any) -> bool:
        """Count one check; record ``example`` when ``condition`` is false."""
        self.checked += 1
        if not condition:
            self.fail(example)
        return condition

    @contextmanager
    def timed(self) -> Iterator["VerificationReport"]:
        start = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed_ms = int(round((time.perf_counter() - start) * 1000))

    def to_json(self, timings: bool = True) -> dict[str, Any]:
        data = {
            "check": self.check,
            "params": self.params,
            "pass": self.passed,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "elapsed_ms": self.elapsed_ms if timings else 0,
        }
        if self.details:
            data["details"] = self.details
        return data

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.check} [{params}] checked={self.checked} failures={self.failures}"
