#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim:ts=4:sw=4:et:

# Simple debugging module

import os
import time
import inspect

from contextlib import contextmanager

from .config import OPTIONS, console_stderr

__all__ = ["__DEBUG__", "timed"]


def __DEBUG__(msg, level=1):
    if level > OPTIONS.debug_level:
        return

    line = inspect.getouterframes(inspect.currentframe())[1][2]
    fname = os.path.basename(inspect.getouterframes(inspect.currentframe())[1][1])
    console_stderr().write("debug: %s:%i %s\n" % (fname, line, msg))


@contextmanager
def timed(label: str, level: int = 1):
    """Reports the elapsed wall time of the enclosed block"""
    start = time.perf_counter()
    try:
        yield
    finally:
        if level <= OPTIONS.debug_level:
            console_stderr().write("debug: %s took %.3fs\n" % (label, time.perf_counter() - start))
