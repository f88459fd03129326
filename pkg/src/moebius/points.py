#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from fractions import Fraction
from typing import NamedTuple, Optional, Tuple, Union

from src.clifford.scalar import Scalar, is_exact, is_zero, isclose

__all__ = ["Point", "Ideal", "ExtendedPoint", "normalize_direction", "as_point"]


class Point(NamedTuple):
    """A finite point (u, v) of the plane"""

    u: Scalar
    v: Scalar

    def isclose(self, other, rtol: float = 1e-9, atol: float = 1e-9) -> bool:
        if not isinstance(other, Point):
            return False
        return isclose(self.u, other.u, rtol, atol) and isclose(self.v, other.v, rtol, atol)

    def to_float(self) -> "Point":
        return Point(float(self.u), float(self.v))

    @property
    def is_exact(self) -> bool:
        return is_exact(self.u) and is_exact(self.v)


class Ideal(NamedTuple):
    """A point at infinity: the image (a cycle with k = 0) of a zero radius
    cycle, with its direction (l, n) normalized so the first nonzero
    coordinate is 1. Direction is None for the zero radius cycle at
    infinity (0, 0, 0, 1).
    """

    cycle: "object"
    direction: Optional[Tuple[Scalar, Scalar]]

    def isclose(self, other, rtol: float = 1e-9, atol: float = 1e-9) -> bool:
        """Ideal points with one direction may still differ (the parabolic
        horizontal lines), so the cycles are compared
        """
        if not isinstance(other, Ideal):
            return False
        return self.cycle.isclose(other.cycle, rtol, atol)


ExtendedPoint = Union[Point, Ideal]


def normalize_direction(l: Scalar, n: Scalar) -> Optional[Tuple[Scalar, Scalar]]:
    if not is_zero(l):
        return l / l, n / l
    if not is_zero(n):
        return l * 0, n / n
    return None


def as_point(p) -> Point:
    if isinstance(p, (Point, Ideal)):
        return p
    u, v = p
    if not is_exact(u) or not is_exact(v):
        return Point(float(u), float(v))
    return Point(Fraction(u), Fraction(v))
