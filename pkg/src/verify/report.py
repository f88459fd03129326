#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import Dict, List, NamedTuple, Optional

__all__ = ["Counterexample", "CheckResult", "VerifyReport"]


class Counterexample(NamedTuple):
    """Everything needed to replay a failed trial"""

    seed: int
    combination: str
    trial: int
    inputs: Dict[str, str]
    message: str

    def as_dict(self) -> dict:
        return self._asdict()


class CheckResult(NamedTuple):
    id: str
    combinations: List[str]
    trials: int = 0
    passes: int = 0
    failures: int = 0
    skips: int = 0
    skipped: bool = False  # the whole check, e.g. exact identities under the float backend
    counterexample: Optional[Counterexample] = None
    notes: List[dict] = []

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def as_dict(self) -> dict:
        result = self._asdict()
        result["counterexample"] = None if self.counterexample is None else self.counterexample.as_dict()
        return result


class VerifyReport(NamedTuple):
    seed: int
    trials: int
    backend: str
    results: List[CheckResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> int:
        return sum(r.failures for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def as_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "backend": self.backend,
            "ok": self.ok,
            "results": [r.as_dict() for r in self.results],
        }

    def summary(self) -> List[str]:
        """One line per check, then the counterexamples"""
        lines = []
        for r in self.results:
            if r.skipped:
                status = "SKIP"
            else:
                status = "ok" if r.ok else "FAIL"
            lines.append(
                f"{r.id:<40} {status:<4} combinations={len(r.combinations)} "
                f"passes={r.passes} failures={r.failures} skipped={r.skips}"
            )

        for r in self.results:
            if r.counterexample is not None:
                c = r.counterexample
                lines.append(f"{r.id}: seed={c.seed} [{c.combination}] trial {c.trial}: {c.message}")
                lines.extend(f"    {k} = {v}" for k, v in c.inputs.items())
            for note in r.notes:
                lines.append(f"{r.id}: note {note}")

        lines.append(f"{len(self.results)} checks, {self.failures} failures")
        return lines
