#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Scalar backends: exact rationals (fractions.Fraction) and IEEE doubles.
# ----------------------------------------------------------------------

import math

from decimal import Decimal, InvalidOperation
from fractions import Fraction
from numbers import Rational
from typing import Union

import numpy as np

from src.api import errmsg
from src.api import global_
from src.api.constants import BACKEND
from src.api.errors import InvalidInputError, NegativeRadicand, NotExact

__all__ = [
    "Scalar",
    "as_scalar",
    "exact_sqrt",
    "is_exact",
    "is_zero",
    "isclose",
    "parse_scalar",
    "scalar_sqrt",
    "scalar_to_json",
    "to_float",
]

Scalar = Union[Fraction, float]


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def as_scalar(x, backend: BACKEND = BACKEND.EXACT) -> Scalar:
    """Converts numbers into the requested backend"""
    if backend == BACKEND.FLOAT:
        return float(x)

    if isinstance(x, Fraction):
        return x

    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))

    if isinstance(x, (float, np.floating)):
        if not math.isfinite(x):
            raise InvalidInputError(f"Non finite value '{x}'")
        return Fraction(float(x))

    return parse_scalar(x, backend)


def parse_scalar(text: Union[str, int, float], backend: BACKEND = BACKEND.EXACT) -> Scalar:
    """Parses '3/4', '-2', '0.125' or '1e-3'. Decimals are converted exactly
    in the exact backend.
    """
    if not isinstance(text, str):
        return as_scalar(text, backend)

    text = text.strip()
    try:
        if "/" in text:
            value = Fraction(text)
        else:
            value = Fraction(Decimal(text))
    except (ValueError, ZeroDivisionError, InvalidOperation, OverflowError):
        raise InvalidInputError(f"Invalid number '{text}'")

    if backend == BACKEND.FLOAT:
        return float(value)

    return value


def scalar_to_json(x: Scalar) -> Union[str, float]:
    """Rationals serialize as 'p/q' strings, floats as JSON numbers"""
    if isinstance(x, Rational):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    return float(x)


def to_float(x) -> float:
    return float(x)


def is_zero(x, atol: float = global_.FLOAT_ATOL) -> bool:
    if is_exact(x):
        return x == 0
    return abs(x) <= atol


def isclose(a, b, rtol: float = global_.FLOAT_RTOL, atol: float = global_.FLOAT_ATOL) -> bool:
    """Exact equality for rationals, relative tolerance otherwise"""
    if is_exact(a) and is_exact(b):
        return a == b
    return math.isclose(float(a), float(b), rel_tol=rtol, abs_tol=atol)


def exact_sqrt(x: Fraction) -> Fraction:
    """Exact square root of a non negative rational, NotExact otherwise"""
    x = Fraction(x)
    if x < 0:
        raise NegativeRadicand(x)

    num, den = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if num * num != x.numerator or den * den != x.denominator:
        raise NotExact(x)

    return Fraction(num, den)


def scalar_sqrt(x: Scalar, strict: bool = False) -> Scalar:
    """Square root in the backend of x. Exact rationals without
    a rational root degrade to float (warning W100) unless strict.
    """
    if x < 0:
        raise NegativeRadicand(x)

    if not is_exact(x):
        return math.sqrt(x)

    try:
        return exact_sqrt(x)
    except NotExact:
        if strict:
            raise
        errmsg.warning_inexact_sqrt(x)
        return math.sqrt(x)
