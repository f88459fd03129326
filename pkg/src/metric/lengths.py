#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Radii, distances and lengths between two points of the sigma-plane.
# A length is the sigma_breve-radius of a sigma-cycle; the distance is
# the extremal diameter over the cycles through both points.
# ----------------------------------------------------------------------

from typing import NamedTuple, Optional, Union

from src.api.constants import BRANCH, LENGTH
from src.api.errors import (
    CoincidentOrdinates,
    DegenerateDenominator,
    FlatCycle,
    NegativeRadicand,
    UndefinedParabolicCentreLength,
)
from src.clifford.scalar import Scalar, is_zero, scalar_sqrt
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import Cycle
from src.cycles.fsc import det_cycle
from src.moebius.points import as_point

__all__ = [
    "LengthKind",
    "FocalLength",
    "radius_sq",
    "distance_sq",
    "critical_point",
    "length_from_centre_sq",
    "centre_auxiliary_cycle",
    "focal_parameter",
    "length_from_focus_sq",
    "focal_auxiliary_cycle",
]


class FocalLength(NamedTuple):
    len_sq: Scalar
    p: Scalar  # focal parameter of the auxiliary cycle


class LengthKind(NamedTuple):
    """Distance, length from a varsigma-centre or from a varsigma-focus.
    branch selects the sign of the focal parameter (upward or downward
    parabola); it only matters for lengths from a focus with varsigma != 0.
    """

    kind: LENGTH = LENGTH.DISTANCE
    varsigma: Sign = Sign.ELLIPTIC
    branch: BRANCH = BRANCH.PLUS

    @classmethod
    def make(cls, kind: Union[LENGTH, str], varsigma=Sign.ELLIPTIC, branch: Union[BRANCH, str] = BRANCH.PLUS) -> "LengthKind":
        return cls(LENGTH(kind), Sign.of(varsigma), BRANCH(branch))

    def length_sq(self, p1, p2, sigma: Sign, sigma_breve: Sign) -> Scalar:
        if self.kind == LENGTH.DISTANCE:
            return distance_sq(p1, p2, sigma, sigma_breve)

        if self.kind == LENGTH.FROM_CENTRE:
            return length_from_centre_sq(p1, p2, sigma, sigma_breve, self.varsigma)

        return length_from_focus_sq(p1, p2, sigma, sigma_breve, self.varsigma, self.branch).len_sq

    def __str__(self):
        if self.kind == LENGTH.DISTANCE:
            return self.kind.value
        return f"{self.kind.value}({int(self.varsigma)}{self.branch.value if self.kind == LENGTH.FROM_FOCUS else ''})"


def radius_sq(C: Cycle, ctx: CycleContext) -> Scalar:
    """(l^2 - sigma_breve n^2 - k m) / k^2"""
    if is_zero(C.k):
        raise FlatCycle(C)
    return det_cycle(C, ctx, s=Sign.HYPERBOLIC) / (C.k * C.k)


def distance_sq(p1, p2, sigma: Sign, sigma_breve: Sign) -> Scalar:
    """Squared extremal sigma_breve-diameter of the sigma-cycles through
    both points. The parabolic point space gives (u - u')^2.
    """
    sigma, sigma_breve = Sign.of(sigma), Sign.of(sigma_breve)
    (u, v), (u1, v1) = as_point(p1), as_point(p2)
    du, dv = u - u1, v - v1

    if sigma == Sign.PARABOLIC:
        return du * du

    if is_zero(dv):
        if sigma_breve == Sign.PARABOLIC:
            raise DegenerateDenominator("distance between points of equal height for sigma_breve = 0")
        # the cycles through both points are parametrized by n
        return du * du + 4 * (sigma_breve - sigma) * v * v

    quadratic = du * du - sigma * dv * dv
    den = du * du * sigma_breve - dv * dv
    if is_zero(den):
        raise DegenerateDenominator("distance")

    return (sigma_breve * quadratic + 4 * (1 - sigma * sigma_breve) * v * v1) / den * quadratic


def critical_point(p1, p2, sigma: Sign, sigma_breve: Sign) -> Scalar:
    """The coefficient l of the extremal cycle through both points.
    It is the midpoint whenever sigma * sigma_breve = 1.
    """
    sigma, sigma_breve = Sign.of(sigma), Sign.of(sigma_breve)
    (u, v), (u1, v1) = as_point(p1), as_point(p2)
    midpoint = (u + u1) / 2

    if sigma == Sign.PARABOLIC or is_zero(v - v1):
        return midpoint

    den = (u1 - u) ** 2 * sigma_breve - (v - v1) ** 2
    if is_zero(den):
        raise DegenerateDenominator("critical point")

    return midpoint + (sigma_breve * sigma - 1) * (u1 - u) * (v * v - v1 * v1) / (2 * den)


def length_from_centre_sq(p1, p2, sigma: Sign, sigma_breve: Sign, varsigma: Sign) -> Scalar:
    """sigma_breve-radius^2 of the sigma-cycle with varsigma-centre p1
    passing through p2: (u - u')^2 - sigma v'^2 + 2 varsigma v v' - sigma_breve v^2
    """
    sigma, sigma_breve, varsigma = Sign.of(sigma), Sign.of(sigma_breve), Sign.of(varsigma)
    if sigma == Sign.PARABOLIC and varsigma == Sign.PARABOLIC:
        raise UndefinedParabolicCentreLength()

    (u, v), (u1, v1) = as_point(p1), as_point(p2)
    return (u - u1) ** 2 - sigma * v1 * v1 + 2 * varsigma * v * v1 - sigma_breve * v * v


def centre_auxiliary_cycle(p1, p2, sigma: Sign, varsigma: Sign) -> Cycle:
    """The sigma-cycle (1, u, -varsigma v, m) with varsigma-centre p1
    through p2. A 0-centre always lies on the real line, so varsigma != 0.
    """
    sigma, varsigma = Sign.of(sigma), Sign.of(varsigma)
    if varsigma == Sign.PARABOLIC:
        raise UndefinedParabolicCentreLength()

    (u, v), (u1, v1) = as_point(p1), as_point(p2)
    n = -varsigma * v
    m = -(u1 * u1 - sigma * v1 * v1) + 2 * u * u1 + 2 * n * v1
    return Cycle(1, u, n, m)


def focal_parameter(p1, p2, sigma: Sign, varsigma: Sign, branch: BRANCH) -> Scalar:
    """p solving varsigma p^2 + 2 p (v' - v) - (u' - u)^2 + sigma v'^2 = 0"""
    (u, v), (u1, v1) = as_point(p1), as_point(p2)

    if varsigma == Sign.PARABOLIC:
        if is_zero(v1 - v):
            raise CoincidentOrdinates()
        return ((u1 - u) ** 2 - sigma * v1 * v1) / (2 * (v1 - v))

    radicand = varsigma * (u1 - u) ** 2 + (v1 - v) ** 2 - sigma * varsigma * v1 * v1
    if radicand < 0:
        raise NegativeRadicand(radicand)

    return varsigma * (-(v1 - v) + BRANCH(branch).sign * scalar_sqrt(radicand))


def length_from_focus_sq(
    p1, p2, sigma: Sign, sigma_breve: Sign, varsigma: Sign, branch: BRANCH = BRANCH.PLUS
) -> FocalLength:
    """sigma_breve-radius^2 of the sigma-cycle with varsigma-focus p1
    passing through p2: (varsigma - sigma_breve) p^2 - 2 v p
    """
    sigma, sigma_breve, varsigma = Sign.of(sigma), Sign.of(sigma_breve), Sign.of(varsigma)
    p = focal_parameter(p1, p2, sigma, varsigma, branch)
    v = as_point(p1).v
    return FocalLength((varsigma - sigma_breve) * p * p - 2 * v * p, p)


def focal_auxiliary_cycle(
    p1, p2, sigma: Sign, sigma_breve: Sign, varsigma: Sign, branch: BRANCH = BRANCH.PLUS, p: Optional[Scalar] = None
) -> Cycle:
    """(1, u, p, 2 p v' - u'^2 + 2 u u' + sigma v'^2). Passes through p2,
    has its varsigma-focus at p1 and sigma_breve-radius^2 equal to the
    length from focus.
    """
    sigma = Sign.of(sigma)
    if p is None:
        p = length_from_focus_sq(p1, p2, sigma, sigma_breve, varsigma, branch).p

    (u, _), (u1, v1) = as_point(p1), as_point(p2)
    return Cycle(1, u, p, 2 * p * v1 - u1 * u1 + 2 * u * u1 + sigma * v1 * v1)
