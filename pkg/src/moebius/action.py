#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Moebius action of SL(2,R) on the point space of Cl(sigma)
#     w -> (a w + b e0)(-c e0 w + d)^-1,   w = u e0 + v e1
# ----------------------------------------------------------------------

from src.clifford.cliffnum import CliffNum, cliff_inverse, vector_to_cliff
from src.clifford.matrix import CliffMatrix
from src.clifford.scalar import is_zero
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import Cycle, zero_radius_cycle
from src.cycles.fsc import sl2_transform
from src.moebius.points import ExtendedPoint, Ideal, Point, normalize_direction
from src.moebius.sl2 import SL2Elem

__all__ = ["moebius_apply", "clifford_apply", "point_from_zero_cycle"]


def point_from_zero_cycle(C: Cycle) -> ExtendedPoint:
    """The point represented by a zero radius cycle (1, u, v, ...); cycles
    with k = 0 are points at infinity
    """
    k, l, n, _ = C
    if is_zero(k):
        return Ideal(C.canonical(), normalize_direction(l, n))
    return Point(l / k, n / k)


def moebius_apply(g: SL2Elem, p: ExtendedPoint, sigma: Sign) -> ExtendedPoint:
    """Image of p under g. Singular denominators (the light cone of the
    pole) and points at infinity are carried through the zero radius
    cycles, so the action is total.
    """
    sigma = Sign.of(sigma)
    ctx = CycleContext.make(sigma=sigma, s=1)

    if isinstance(p, Ideal):
        return point_from_zero_cycle(sl2_transform(p.cycle, g, ctx))

    G = g.clifford_matrix(sigma)
    w = vector_to_cliff(p[0], p[1], sigma)
    den = G.c * w + G.d
    if is_zero(den.norm()):
        return point_from_zero_cycle(sl2_transform(zero_radius_cycle(p, sigma), g, ctx))

    image = (G.a * w + G.b) * cliff_inverse(den)
    return Point(image.c_e0, image.c_e1)


def clifford_apply(G: CliffMatrix, w: CliffNum) -> Point:
    """(A w + B)(C w + D)^-1 for a matrix with Clifford entries. The result
    is reported by its e0, e1 parts.
    """
    image = G.apply(w)
    return Point(image.c_e0, image.c_e1)
