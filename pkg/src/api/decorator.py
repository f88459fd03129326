#!/usr/bin/env python
# -*- coding: utf-8 -*-

from functools import wraps
from inspect import signature
from typing import Callable


class classproperty:
    """Decorator for class properties.
    Use @classproperty instead of @property to add properties
    to the class object.
    """

    def __init__(self, fget: Callable):
        self.fget = fget

    def __get__(self, owner_self, owner_cls):
        return self.fget(owner_cls)


def check_signs(*names: str) -> Callable:
    """Coerces the named arguments into Sign values (raising InvalidSign
    for anything outside -1, 0, 1) before calling the function.
    """

    def decorator(func: Callable) -> Callable:
        sig = signature(func)

        def wrapper(*args, **kwargs):
            from src.clifford.sign import Sign

            bound = sig.bind(*args, **kwargs)
            for name in names:
                if name in bound.arguments and bound.arguments[name] is not None:
                    bound.arguments[name] = Sign.of(bound.arguments[name])
            return func(*bound.args, **bound.kwargs)

        return wraps(func)(wrapper)

    return decorator
