#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# l-perpendicularity: CD is perpendicular to AB when the length
# l(A, B + eps CD) is stationary at eps = 0. The perpendicular directions
# are the orthogonal complements of the gradient of l^2 in B.
# ----------------------------------------------------------------------

import math

from typing import Tuple

from src.api.constants import LENGTH
from src.api.errors import DegenerateDenominator, InvalidInputError
from src.clifford.scalar import Scalar, is_zero
from src.clifford.sign import Sign
from src.metric.lengths import LengthKind, focal_parameter
from src.moebius.points import Point, as_point

__all__ = [
    "length_gradient",
    "perpendicular_direction",
    "is_perpendicular",
    "DIFF_STEP",
    "PERPENDICULAR_TOL",
    "EXTREMUM_STEP",
]

DIFF_STEP = 1e-6
PERPENDICULAR_TOL = 1e-7
EXTREMUM_STEP = 1e-5
EXTREMUM_NOISE = 1e-14


def length_gradient(kind: LengthKind, A, B, sigma: Sign, sigma_breve: Sign) -> Tuple[Scalar, Scalar]:
    """Gradient of the squared length l^2(A, B) in B, up to a nonzero factor
    for lengths from a focus
    """
    sigma, sigma_breve = Sign.of(sigma), Sign.of(sigma_breve)
    (u, v), (u1, v1) = as_point(A), as_point(B)

    if kind.kind == LENGTH.FROM_CENTRE:
        return 2 * (u1 - u), 2 * (kind.varsigma * v - sigma * v1)

    if kind.kind == LENGTH.FROM_FOCUS:
        p = focal_parameter(A, B, sigma, kind.varsigma, kind.branch)
        return u1 - u, -(p + sigma * v1)

    du, dv = u - u1, v - v1
    if sigma == Sign.PARABOLIC:
        return -2 * du, du * 0

    # l^2 = N Q / D
    q = du * du - sigma * dv * dv
    n = sigma_breve * q + 4 * (1 - sigma * sigma_breve) * v * v1
    d = sigma_breve * du * du - dv * dv
    if is_zero(d):
        raise DegenerateDenominator("distance gradient")

    dq = (-2 * du, 2 * sigma * dv)
    dn = (sigma_breve * dq[0], sigma_breve * dq[1] + 4 * (1 - sigma * sigma_breve) * v)
    dd = (-2 * sigma_breve * du, 2 * dv)
    return tuple((dn[i] * q + n * dq[i]) / d - n * q * dd[i] / (d * d) for i in range(2))


def perpendicular_direction(kind: LengthKind, A, B, sigma: Sign, sigma_breve: Sign) -> Tuple[Scalar, Scalar]:
    """A direction CD with AB l-perpendicular to CD, unnormalized"""
    A, B = as_point(A), as_point(B)
    if A == B:
        raise InvalidInputError("Perpendicular to a zero vector")

    gu, gv = length_gradient(kind, A, B, sigma, sigma_breve)
    return -gv, gu


def is_perpendicular(kind: LengthKind, A, B, CD, sigma: Sign, sigma_breve: Sign, tol: float = PERPENDICULAR_TOL) -> bool:
    """Central difference test of eps -> l^2(A, B + eps CD) at eps = 0,
    then a second difference over a wider step: at an extremum l^2 moves
    the same way on both sides of B, at an inflection it does not. A
    constant l^2 counts as stationary.
    """
    cu, cv = (float(x) for x in CD)
    norm = math.hypot(cu, cv)
    if norm == 0:
        raise InvalidInputError("CD must be a nonzero vector")

    A, B = as_point(A).to_float(), as_point(B).to_float()
    h = DIFF_STEP

    def f(eps):
        return float(kind.length_sq(A, Point(B.u + eps * cu, B.v + eps * cv), sigma, sigma_breve))

    f0 = f(0.0)
    scale = max(1.0, abs(f0))
    slope = (f(h) - f(-h)) / (2 * h * norm)
    if abs(slope) > tol * scale:
        return False

    step = EXTREMUM_STEP / norm
    up, down = f(step) - f0, f(-step) - f0
    return abs(up - down) <= abs(up + down) + EXTREMUM_NOISE * scale
