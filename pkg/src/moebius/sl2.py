#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# SL(2,R) elements and their one-parameter subgroups
# ----------------------------------------------------------------------

import math

from fractions import Fraction
from typing import NamedTuple

from src.api.constants import FAMILY
from src.api.decorator import check_signs
from src.api.errors import InvalidInputError, NotSL2
from src.clifford.cliffnum import CliffNum, scalar_cliff
from src.clifford.matrix import CliffMatrix
from src.clifford.scalar import Scalar, as_scalar, is_exact, isclose
from src.clifford.sign import Sign

__all__ = [
    "SL2Elem",
    "IDENTITY",
    "subgroup_element",
    "rational_subgroup_element",
    "fix_subgroup_element",
]

FLOAT_DET_TOLERANCE = 1e-12


class SL2Elem(NamedTuple):
    """A real matrix [[a, b], [c, d]] with ad - bc = 1"""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    @classmethod
    def make(cls, a, b, c, d) -> "SL2Elem":
        """Builds an element checking its determinant"""
        g = cls(a, b, c, d)
        det = g.det()
        if all(is_exact(x) for x in g):
            if det != 1:
                raise NotSL2(det)
        elif abs(det - 1) > FLOAT_DET_TOLERANCE * max(1.0, max(abs(float(x)) for x in g) ** 2):
            raise NotSL2(det)
        return g

    def det(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "SL2Elem") -> "SL2Elem":
        if not isinstance(other, SL2Elem):
            return NotImplemented
        a, b, c, d = self
        e, f, g, h = other
        return SL2Elem(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "SL2Elem":
        return SL2Elem(self.d, -self.b, -self.c, self.a)

    def to_float(self) -> "SL2Elem":
        return SL2Elem(*(float(x) for x in self))

    def isclose(self, other: "SL2Elem", rtol: float = 1e-9, atol: float = 1e-12) -> bool:
        return all(isclose(x, y, rtol, atol) for x, y in zip(self, other))

    def clifford_matrix(self, sigma: Sign) -> CliffMatrix:
        """The Clifford form [[a, b e0], [-c e0, d]] over Cl(sigma)"""
        zero = self.a * 0
        return CliffMatrix(
            scalar_cliff(self.a, sigma),
            CliffNum(zero, self.b, zero, zero, sigma),
            CliffNum(zero, -self.c, zero, zero, sigma),
            scalar_cliff(self.d, sigma),
        )

    def clifford_inverse(self, sigma: Sign) -> CliffMatrix:
        """[[d, -b e0], [c e0, a]], the inverse of the Clifford form"""
        return self.inverse().clifford_matrix(sigma)


IDENTITY = SL2Elem(Fraction(1), Fraction(0), Fraction(0), Fraction(1))


def subgroup_element(family: FAMILY, t: Scalar, sigma: Sign = Sign.ELLIPTIC) -> SL2Elem:
    """Element of a one-parameter subgroup. A uses alpha = e^t; shifts
    keep exact parameters exact, the other families are float.
    """
    family = FAMILY(family)

    if family == FAMILY.N:
        t = as_scalar(t) if is_exact(t) else float(t)
        return SL2Elem(t * 0 + 1, t, t * 0, t * 0 + 1)

    if family == FAMILY.N_p_fix:
        t = as_scalar(t) if is_exact(t) else float(t)
        return SL2Elem(t * 0 + 1, t * 0, -t, t * 0 + 1)

    t = float(t)
    if family == FAMILY.A:
        alpha = math.exp(t)
        return SL2Elem(1 / alpha, 0.0, 0.0, alpha)

    if family == FAMILY.K:
        return SL2Elem(math.cos(t), math.sin(t), -math.sin(t), math.cos(t))

    if family == FAMILY.A_h_fix:
        return SL2Elem(math.cosh(t), math.sinh(t), math.sinh(t), math.cosh(t))

    return fix_subgroup_element(t, sigma)


@check_signs("sigma")
def fix_subgroup_element(t: Scalar, sigma: Sign) -> SL2Elem:
    """The fix group of e1: [[a, -sigma*beta], [-beta, a]] with
    (a, beta) = (cos t, sin t), (1, t), (cosh t, sinh t)
    """
    if sigma == Sign.PARABOLIC:
        return subgroup_element(FAMILY.N_p_fix, t)

    t = float(t)
    if sigma == Sign.ELLIPTIC:
        a, beta = math.cos(t), math.sin(t)
    else:
        a, beta = math.cosh(t), math.sinh(t)

    return SL2Elem(a, -sigma * beta, -beta, a)


def rational_subgroup_element(family: FAMILY, q: Scalar, sigma: Sign = Sign.ELLIPTIC) -> SL2Elem:
    """Exact points of the subgroups through the rational parametrisations
    cos = (1-q^2)/(1+q^2), sin = 2q/(1+q^2) and
    cosh = (1+q^2)/(1-q^2), sinh = 2q/(1-q^2) (|q| < 1).
    A uses alpha = q > 0 and N uses nu = q.
    """
    family = FAMILY(family)
    q = as_scalar(q)
    one, zero = Fraction(1), Fraction(0)

    if family == FAMILY.A:
        if q <= 0:
            raise InvalidInputError(f"Dilation parameter must be positive, got {q}")
        return SL2Elem(1 / q, zero, zero, q)

    if family in (FAMILY.N, FAMILY.N_p_fix):
        return subgroup_element(family, q)

    if family == FAMILY.FIX:
        sigma = Sign.of(sigma)
        if sigma == Sign.PARABOLIC:
            return SL2Elem(one, zero, -q, one)
        a, beta = _rational_trig(q) if sigma == Sign.ELLIPTIC else _rational_hyp(q)
        return SL2Elem(a, -sigma * beta, -beta, a)

    if family == FAMILY.K:
        cos, sin = _rational_trig(q)
        return SL2Elem(cos, sin, -sin, cos)

    cosh, sinh = _rational_hyp(q)
    return SL2Elem(cosh, sinh, sinh, cosh)


def _rational_trig(q: Fraction):
    den = 1 + q * q
    return (1 - q * q) / den, 2 * q / den


def _rational_hyp(q: Fraction):
    if abs(q) >= 1:
        raise InvalidInputError(f"Hyperbolic rational parameter must satisfy |q| < 1, got {q}")
    den = 1 - q * q
    return (1 + q * q) / den, 2 * q / den
