#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import NamedTuple

from src.clifford.cliffnum import CliffNum, cliff_inverse, scalar_cliff
from src.clifford.sign import Sign

__all__ = ["CliffMatrix"]


class CliffMatrix(NamedTuple):
    """A 2x2 matrix [[a, b], [c, d]] with entries in Cl(sigma)"""

    a: CliffNum
    b: CliffNum
    c: CliffNum
    d: CliffNum

    @property
    def sigma(self) -> Sign:
        return self.a.sigma

    @classmethod
    def identity(cls, sigma: Sign) -> "CliffMatrix":
        one, zero = scalar_cliff(1, sigma), scalar_cliff(0, sigma)
        return cls(one, zero, zero, one)

    def __mul__(self, other):
        if isinstance(other, CliffMatrix):
            return CliffMatrix(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        return CliffMatrix(self.a * other, self.b * other, self.c * other, self.d * other)

    def __rmul__(self, other):
        return CliffMatrix(other * self.a, other * self.b, other * self.c, other * self.d)

    def trace(self) -> CliffNum:
        return self.a + self.d

    def apply(self, w: CliffNum) -> CliffNum:
        """The linear fractional action (a w + b)(c w + d)^-1"""
        return (self.a * w + self.b) * cliff_inverse(self.c * w + self.d)

    def isclose(self, other: "CliffMatrix", rtol: float = 1e-9, atol: float = 1e-9) -> bool:
        return all(x.isclose(y, rtol, atol) for x, y in zip(self, other))

    def is_diagonal(self) -> bool:
        return self.b == 0 and self.c == 0
