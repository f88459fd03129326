#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Random samples for the verify suite. Everything is drawn from a numpy
# Generator so a (seed, check, combination) triple replays exactly.
# ----------------------------------------------------------------------

from fractions import Fraction
from typing import Tuple

import numpy as np

from src.clifford.cliffnum import CliffNum
from src.clifford.sign import Sign
from src.cycles.cycle import Cycle
from src.moebius.points import Point
from src.moebius.sl2 import SL2Elem

__all__ = [
    "rational",
    "nonzero_rational",
    "positive_rational",
    "sign",
    "cliffnum",
    "sl2",
    "sl2_float",
    "point",
    "point_float",
    "cycle",
    "cycle_float",
    "through",
    "direction",
]

MAX_NUMERATOR = 9
MAX_DENOMINATOR = 6
FLOAT_RANGE = 3.0


def rational(rng: np.random.Generator, bound: int = MAX_NUMERATOR) -> Fraction:
    return Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, MAX_DENOMINATOR + 1)))


def nonzero_rational(rng: np.random.Generator, bound: int = MAX_NUMERATOR) -> Fraction:
    while True:
        x = rational(rng, bound)
        if x:
            return x


def positive_rational(rng: np.random.Generator, bound: int = MAX_NUMERATOR) -> Fraction:
    return abs(nonzero_rational(rng, bound))


def sign(rng: np.random.Generator) -> Sign:
    return Sign(int(rng.integers(-1, 2)))


def cliffnum(rng: np.random.Generator, sigma: Sign) -> CliffNum:
    return CliffNum(*(rational(rng) for _ in range(4)), sigma)


def sl2(rng: np.random.Generator) -> SL2Elem:
    """a, b, c random rationals with a != 0 and d = (1 + bc)/a"""
    a = nonzero_rational(rng, 4)
    b, c = rational(rng, 4), rational(rng, 4)
    return SL2Elem(a, b, c, (1 + b * c) / a)


def sl2_float(rng: np.random.Generator) -> SL2Elem:
    return sl2(rng).to_float()


def point(rng: np.random.Generator, upper: bool = False) -> Point:
    return Point(rational(rng), positive_rational(rng) if upper else rational(rng))


def point_float(rng: np.random.Generator, upper: bool = False) -> Point:
    u = float(rng.uniform(-FLOAT_RANGE, FLOAT_RANGE))
    v = float(rng.uniform(0.1, FLOAT_RANGE)) if upper else float(rng.uniform(-FLOAT_RANGE, FLOAT_RANGE))
    return Point(u, v)


def cycle(rng: np.random.Generator, flat: bool = False) -> Cycle:
    """A random quadruple; k != 0 unless flat"""
    k = Fraction(0) if flat else nonzero_rational(rng)
    l, n, m = (rational(rng) for _ in range(3))
    if flat and not (l or n):
        n = Fraction(1)
    return Cycle(k, l, n, m)


def cycle_float(rng: np.random.Generator) -> Cycle:
    k = float(rng.choice([-1.0, 1.0]) * rng.uniform(0.25, 2.0))
    return Cycle(k, *(float(x) for x in rng.uniform(-FLOAT_RANGE, FLOAT_RANGE, 3)))


def through(C: Cycle, p, sigma: Sign) -> Cycle:
    """C with m moved so that it passes through p"""
    k, l, n, _ = C
    u, v = p
    return Cycle(k, l, n, -(k * (u * u - sigma * v * v) - 2 * l * u - 2 * n * v))


def direction(rng: np.random.Generator) -> Tuple[Fraction, Fraction]:
    while True:
        du, dv = rational(rng, 3), rational(rng, 3)
        if du or dv:
            return du, dv
