#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Copyleft (K), EPH geometry kernel contributors
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

from functools import wraps

from typing import Callable

from src.api import global_
from src.api import config


# Exports only these functions. Others
__all__ = ["error", "info", "is_valid_warning_code", "warning", "register_warning"]


WARNING_PREFIX: str = ""  # will be prepended to warning messages
ERROR_PREFIX: str = ""  # will be prepended to error messages


def msg_output(msg: str) -> None:
    if msg in global_.error_msg_cache:
        return

    config.console_stderr().write("%s\n" % msg)
    global_.error_msg_cache.add(msg)


def info(msg: str) -> None:
    if config.OPTIONS.debug_level < 1:
        return
    config.console_stderr().write("info: %s\n" % msg)


def error(msg: str, command: str = "eph") -> None:
    """Generic error routine"""
    msg = "%s: error:%s %s" % (command, ERROR_PREFIX, msg)
    msg_output(msg)
    global_.has_errors += 1


def warning(msg: str, command: str = "eph") -> None:
    """Generic warning routine"""
    global_.has_warnings += 1
    msg = "%s: %s %s" % (command, WARNING_PREFIX or "warning:", msg)
    msg_output(msg)


def is_valid_warning_code(code: str) -> bool:
    return code in global_.ENABLED_WARNINGS


def assert_is_valid_warning_code(code: str):
    assert is_valid_warning_code(code), f"Invalid warning code '{code}'"


def enable_warning(code: str):
    assert_is_valid_warning_code(code)
    global_.ENABLED_WARNINGS[code] = True


def disable_warning(code: str):
    assert_is_valid_warning_code(code)
    global_.ENABLED_WARNINGS[code] = False


def register_warning(code: str) -> Callable:
    assert code not in global_.ENABLED_WARNINGS, f"Duplicated warning code '{code}'"
    global_.ENABLED_WARNINGS[code] = True

    def decorator(func: Callable) -> Callable:
        def wrapper(*args, **kwargs):
            global WARNING_PREFIX
            if global_.ENABLED_WARNINGS.get(code, True):
                if not config.OPTIONS.hide_warning_codes:
                    WARNING_PREFIX = f"warning: [W{code}]"
                func(*args, **kwargs)
                WARNING_PREFIX = ""

        return wraps(func)(wrapper)

    return decorator


# region [Warnings]
@register_warning("100")
def warning_inexact_sqrt(value):
    """Warning: exact square root not available, float used"""
    warning(f"'{value}' has no exact square root; falling back to float")


@register_warning("110")
def warning_sign_convention(printed, transported):
    """Warning: printed parabolic Cayley cycle formula disagrees with point transport"""
    warning(f"printed parabolic Cayley cycle {printed} disagrees with point transport {transported}")


@register_warning("120")
def warning_trial_skipped(check_id: str, reason: str):
    """Warning: degenerate random sample skipped"""
    if config.OPTIONS.debug_level > 1:
        warning(f"{check_id}: trial skipped ({reason})")


@register_warning("130")
def warning_element_skipped(figure: str, reason: str):
    """Warning: figure element not drawn"""
    warning(f"figure '{figure}': element skipped ({reason})")


# endregion
