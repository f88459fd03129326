#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Conformality: how a Moebius map rescales lengths near a point
# ----------------------------------------------------------------------

import math

from fractions import Fraction

from src.api.constants import BRANCH
from src.api.errors import DegenerateDenominator, InvalidInputError
from src.clifford.scalar import Scalar, is_zero
from src.clifford.sign import Sign
from src.metric.lengths import LengthKind, focal_parameter
from src.moebius import action
from src.moebius.points import Point, as_point
from src.moebius.sl2 import SL2Elem

__all__ = [
    "signed_sqrt",
    "conformal_ratio",
    "parabolic_focus_limit",
    "direction_dependent_limit",
    "direction_limit_closed_form",
]

FAR_HEIGHT = 10**12
SHIFT_STEP = Fraction(1, 10**9)


def signed_sqrt(r: Scalar) -> float:
    """sign(r) sqrt|r|: lengths from squared lengths of either sign"""
    return math.copysign(math.sqrt(abs(float(r))), float(r))


def _shifted(y: Point, direction, t: Scalar) -> Point:
    du, dv = direction
    return Point(y.u + t * du, y.v + t * dv)


def conformal_ratio(kind: LengthKind, g: SL2Elem, y, direction, t: Scalar, sigma: Sign, sigma_breve: Sign) -> float:
    """l(g y, g (y + t y')) / l(y, y + t y')"""
    if is_zero(t):
        raise InvalidInputError("The shift step must be nonzero")

    y = as_point(y)
    y_t = _shifted(y, direction, t)
    den = kind.length_sq(y, y_t, sigma, sigma_breve)
    if is_zero(den):
        raise DegenerateDenominator("conformal ratio")

    num = kind.length_sq(action.moebius_apply(g, y, sigma), action.moebius_apply(g, y_t, sigma), sigma, sigma_breve)
    return signed_sqrt(num / den)


def parabolic_focus_limit(g: SL2Elem, y, u_far: Scalar, sigma_breve: Sign, v_far: Scalar = FAR_HEIGHT) -> float:
    """Ratio of parabolic lengths from the 0-focus at y to (u_far, v_far)
    before and after g, for a large v_far. Tends to 1/(c u + d)^2 with a
    relative error of order (u_far - u)^2 / (v v_far), so the default
    height sits well above 10^6. A far point straight above y has focal
    length 0 and is moved one unit sideways.
    """
    kind = LengthKind.make("from_focus", varsigma=Sign.PARABOLIC)
    y = as_point(y)
    if u_far == y.u:
        u_far = next(y.u + step for step in (1, -1) if not is_zero(g.c * (y.u + step) + g.d))
    far = as_point((u_far, v_far))
    return conformal_ratio(kind, g, y, (far.u - y.u, far.v - y.v), 1, Sign.PARABOLIC, sigma_breve)


def direction_dependent_limit(g: SL2Elem, y0, direction, sigma: Sign = Sign.PARABOLIC, t: Scalar = SHIFT_STEP) -> Scalar:
    """Ratio of the parabolic focal parameters from y0 to y0 + t y before
    and after g, for a small t. Depends on K = u/v of the direction y.
    """
    if Sign.of(sigma) != Sign.PARABOLIC:
        raise InvalidInputError("The directional focal limit is taken in the parabolic point space")

    y0 = as_point(y0)
    y_t = _shifted(y0, direction, t)
    before = focal_parameter(y0, y_t, Sign.PARABOLIC, Sign.PARABOLIC, BRANCH.PLUS)
    if is_zero(before):
        raise DegenerateDenominator("directional focal limit")

    after = focal_parameter(
        action.moebius_apply(g, y0, Sign.PARABOLIC),
        action.moebius_apply(g, y_t, Sign.PARABOLIC),
        Sign.PARABOLIC,
        Sign.PARABOLIC,
        BRANCH.PLUS,
    )
    return after / before


def direction_limit_closed_form(g: SL2Elem, y0, K: Scalar, sigma: Sign) -> Scalar:
    """1 / ((d + c u0)^2 + sigma c^2 v0^2 - 2 K c v0 (d + c u0))"""
    u0, v0 = as_point(y0)
    c, d = g.c, g.d
    den = (d + c * u0) ** 2 + sigma * c * c * v0 * v0 - 2 * K * c * v0 * (d + c * u0)
    if is_zero(den):
        raise DegenerateDenominator("directional focal limit")
    return 1 / den
