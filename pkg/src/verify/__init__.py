#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .report import CheckResult, Counterexample, VerifyReport
from .suite import CHECKS, Check, CheckFailed, SkipTrial, expect, register_check, run_check, run_suite


__all__ = [
    "CheckResult",
    "Counterexample",
    "VerifyReport",
    "CHECKS",
    "Check",
    "CheckFailed",
    "SkipTrial",
    "expect",
    "register_check",
    "run_check",
    "run_suite",
    "verify_suite",
]


def verify_suite(seed: int, trials: int, backend="exact") -> VerifyReport:
    return run_suite(seed, trials, backend)
