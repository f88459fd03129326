#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Two generator Clifford algebra Cl(sigma): e0^2 = -1, e1^2 = sigma,
# e0 e1 = -e1 e0. Basis 1, e0, e1, e01 = e0 e1.
# ----------------------------------------------------------------------

from fractions import Fraction
from numbers import Number
from typing import Tuple

from src.api.errors import SignatureMismatch, ZeroDivisor
from src.clifford.scalar import Scalar, is_exact, is_zero, isclose
from src.clifford.sign import Sign

__all__ = ["CliffNum", "cliff_mul", "cliff_inverse", "vector_to_cliff", "scalar_cliff"]


class CliffNum:
    """An immutable element c1 + c_e0 e0 + c_e1 e1 + c_e01 e0e1 of Cl(sigma)"""

    __slots__ = ("c1", "c_e0", "c_e1", "c_e01", "sigma")

    def __init__(self, c1: Scalar, c_e0: Scalar, c_e1: Scalar, c_e01: Scalar, sigma: Sign):
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c_e0", c_e0)
        object.__setattr__(self, "c_e1", c_e1)
        object.__setattr__(self, "c_e01", c_e01)
        object.__setattr__(self, "sigma", Sign.of(sigma))

    def __setattr__(self, key, value):
        raise AttributeError("CliffNum is immutable")

    @property
    def coefficients(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return self.c1, self.c_e0, self.c_e1, self.c_e01

    @property
    def is_exact(self) -> bool:
        return all(is_exact(x) for x in self.coefficients)

    def _check(self, other: "CliffNum"):
        if self.sigma != other.sigma:
            raise SignatureMismatch(self.sigma, other.sigma)

    def _coerce(self, other) -> "CliffNum":
        if isinstance(other, CliffNum):
            self._check(other)
            return other
        if isinstance(other, Number):
            return scalar_cliff(other, self.sigma)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CliffNum(*(x + y for x, y in zip(self.coefficients, other.coefficients)), self.sigma)

    __radd__ = __add__

    def __neg__(self):
        return CliffNum(*(-x for x in self.coefficients), self.sigma)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return CliffNum(*(x * other for x in self.coefficients), self.sigma)
        if isinstance(other, CliffNum):
            return cliff_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Number):
            return CliffNum(*(other * x for x in self.coefficients), self.sigma)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Number):
            if is_zero(other):
                raise ZeroDivisor(other)
            if isinstance(other, int):
                other = Fraction(other)
            return CliffNum(*(x / other for x in self.coefficients), self.sigma)
        return self * cliff_inverse(other)

    def __eq__(self, other):
        if isinstance(other, Number):
            other = scalar_cliff(other, self.sigma)
        if not isinstance(other, CliffNum):
            return NotImplemented
        return self.sigma == other.sigma and all(x == y for x, y in zip(self.coefficients, other.coefficients))

    def __hash__(self):
        return hash((self.coefficients, int(self.sigma)))

    def __repr__(self):
        return f"CliffNum({', '.join(str(x) for x in self.coefficients)}; sigma={int(self.sigma)})"

    def isclose(self, other: "CliffNum", rtol: float = 1e-9, atol: float = 1e-9) -> bool:
        self._check(other)
        return all(isclose(x, y, rtol, atol) for x, y in zip(self.coefficients, other.coefficients))

    def conjugate(self) -> "CliffNum":
        """Clifford conjugation: x * conjugate(x) = norm(x)"""
        return CliffNum(self.c1, -self.c_e0, -self.c_e1, -self.c_e01, self.sigma)

    def norm(self) -> Scalar:
        a0, a1, a2, a3 = self.coefficients
        return a0 * a0 + a1 * a1 - self.sigma * (a2 * a2 + a3 * a3)

    def is_vector(self) -> bool:
        return is_zero(self.c1) and is_zero(self.c_e01)

    def is_scalar(self) -> bool:
        return is_zero(self.c_e0) and is_zero(self.c_e1) and is_zero(self.c_e01)


def scalar_cliff(x: Scalar, sigma: Sign) -> CliffNum:
    zero = x * 0
    return CliffNum(x, zero, zero, zero, sigma)


def vector_to_cliff(u: Scalar, v: Scalar, sigma: Sign) -> CliffNum:
    """The vector w = u e0 + v e1"""
    zero = u * 0
    return CliffNum(zero, u, v, zero, sigma)


def cliff_mul(x: CliffNum, y: CliffNum) -> CliffNum:
    if x.sigma != y.sigma:
        raise SignatureMismatch(x.sigma, y.sigma)

    s = x.sigma
    a0, a1, a2, a3 = x.coefficients
    b0, b1, b2, b3 = y.coefficients
    return CliffNum(
        a0 * b0 - a1 * b1 + s * a2 * b2 + s * a3 * b3,
        a0 * b1 + a1 * b0 - s * a2 * b3 + s * a3 * b2,
        a0 * b2 + a2 * b0 - a1 * b3 + a3 * b1,
        a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        s,
    )


def cliff_inverse(x: CliffNum) -> CliffNum:
    """x^-1 = conjugate(x) / norm(x). The regular representation has
    determinant norm(x)^2, so this covers every invertible element.
    """
    n = x.norm()
    if is_zero(n):
        raise ZeroDivisor(x)

    if isinstance(n, int):
        n = Fraction(n)

    return x.conjugate() / n
