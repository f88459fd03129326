#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# The identity suite. Checks register themselves with the combinations
# of signs they cover; every (check, combination) pair draws from its
# own generator, seeded from the suite seed, the check id and the
# combination index, so each one replays independently of the others.
# ----------------------------------------------------------------------

import zlib

from typing import Callable, Dict, Iterable, List, NamedTuple, Optional

import numpy as np

from src.api import errmsg
from src.api.constants import BACKEND
from src.api.debug import __DEBUG__, timed
from src.cycles.context import CycleContext
from .report import CheckResult, Counterexample, VerifyReport

__all__ = [
    "Check",
    "CHECKS",
    "SkipTrial",
    "CheckFailed",
    "register_check",
    "expect",
    "combo_label",
    "run_check",
    "run_suite",
]


class SkipTrial(Exception):
    """The random sample is degenerate for this check"""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class CheckFailed(Exception):
    def __init__(self, message: str, inputs: Dict[str, object]):
        super().__init__(message)
        self.message = message
        self.inputs = inputs


class Check(NamedTuple):
    id: str
    func: Callable
    combos: tuple
    weight: float = 1.0
    fixed: Optional[int] = None
    exact: bool = True

    def trials(self, trials: int) -> int:
        if self.fixed is not None:
            return self.fixed
        return max(1, round(trials * self.weight))


CHECKS: Dict[str, Check] = {}


def register_check(check_id: str, combos: Iterable = (None,), weight: float = 1.0, fixed: Optional[int] = None, exact: bool = True) -> Callable:
    """Registers func(rng, combo) as a check. It raises CheckFailed (see
    expect) or SkipTrial, and may return a note for the report.
    """
    assert check_id not in CHECKS, f"Duplicated check '{check_id}'"

    def decorator(func: Callable) -> Callable:
        CHECKS[check_id] = Check(check_id, func, tuple(combos), weight, fixed, exact)
        return func

    return decorator


def expect(condition: bool, message: str, **inputs) -> None:
    if not condition:
        raise CheckFailed(message, inputs)


def combo_label(combo) -> str:
    if combo is None:
        return "-"
    if isinstance(combo, CycleContext):
        return ",".join(f"{k}={v}" for k, v in combo.as_dict().items())
    if type(combo) is tuple:
        return ",".join(str(int(x)) if isinstance(x, int) else str(x) for x in combo)
    return str(int(combo)) if isinstance(combo, int) else str(combo)


def _generator(seed: int, check_id: str, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed % 2**32, zlib.crc32(check_id.encode()), index]))


def run_check(check: Check, seed: int, trials: int) -> CheckResult:
    labels = [combo_label(c) for c in check.combos]
    passes = failures = skips = 0
    counterexample = None
    notes: List[dict] = []

    for index, combo in enumerate(check.combos):
        rng = _generator(seed, check.id, index)
        for trial in range(check.trials(trials)):
            try:
                note = check.func(rng, combo)
            except SkipTrial as e:
                skips += 1
                errmsg.warning_trial_skipped(check.id, e.reason)
                continue
            except CheckFailed as e:
                failures += 1
                if counterexample is None:
                    inputs = {k: str(v) for k, v in e.inputs.items()}
                    counterexample = Counterexample(seed, labels[index], trial, inputs, e.message)
                continue
            except Exception as e:
                failures += 1
                if counterexample is None:
                    counterexample = Counterexample(seed, labels[index], trial, {}, f"{type(e).__name__}: {e}")
                continue

            passes += 1
            if note is not None and note not in notes:
                notes.append(note)

    return CheckResult(check.id, labels, passes + failures + skips, passes, failures, skips, False, counterexample, notes)


def run_suite(seed: int, trials: int, backend=BACKEND.EXACT, only: Optional[str] = None) -> VerifyReport:
    """Runs every registered check (or those whose id starts with only).
    Under the float backend the exact identity checks are reported as
    skipped. Results are sorted by check id.
    """
    from . import checks  # noqa: F401 registers the checks

    backend = BACKEND(backend)
    results = []
    if trials > 0:
        for check_id in sorted(CHECKS):
            if only and not check_id.startswith(only):
                continue

            check = CHECKS[check_id]
            if check.exact and backend == BACKEND.FLOAT:
                results.append(CheckResult(check_id, [combo_label(c) for c in check.combos], skipped=True, notes=[]))
                continue

            with timed(f"verify {check_id}"):
                result = run_check(check, seed, trials)
            __DEBUG__(f"{check_id}: {result.passes} passes, {result.failures} failures, {result.skips} skipped", 1)
            results.append(result)

    return VerifyReport(seed, trials, backend.value, results)
