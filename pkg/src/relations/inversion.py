#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Inversions and reflections in cycles
# ----------------------------------------------------------------------

from typing import NamedTuple, Optional, Tuple

from src.api.constants import BRANCH
from src.api.errors import InvalidInputError, NegativeDiscriminant
from src.clifford.cliffnum import CliffNum, cliff_inverse, vector_to_cliff
from src.clifford.scalar import Scalar, is_zero, scalar_sqrt
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import INFINITY, Cycle
from src.cycles.fsc import det_cycle, reflect
from src.moebius.points import ExtendedPoint, Ideal, Point, as_point, normalize_direction

__all__ = [
    "RealLineImage",
    "cycle_moebius_point",
    "cycle_conjugate",
    "reflection_aux_cycle",
    "second_kind_inversion",
    "second_kind_inversion_cycles",
    "second_kind_via_three_inversions",
    "real_line_inversion_image",
]


class RealLineImage(NamedTuple):
    quadruple: Tuple[Scalar, Scalar, Scalar, Scalar]
    is_real_line: bool


def cycle_moebius_point(C: Cycle, p: ExtendedPoint, sigma: Sign, sigma_breve: Optional[Sign] = None) -> ExtendedPoint:
    """Inversion of p in C: (L w + m)(k w - L)^-1 with L = l e0 - sigma_breve n e1.
    For k != 0 this is p -> c + rho (p - c) / |p - c|^2, c the sigma_breve
    centre of C and rho = |c|^2 - m / k, norms taken in the sigma plane.
    sigma_breve defaults to sigma, where the fixed points are C itself
    (sigma = +-1) or the vertical lines through its roots (sigma = 0).
    Points on the light cone of the centre go to infinity, points at
    infinity go to the centre.
    """
    sigma = Sign.of(sigma)
    sigma_breve = sigma if sigma_breve is None else Sign.of(sigma_breve)
    k, l, n, m = C
    zero = k * 0

    if isinstance(p, Ideal):
        if is_zero(k):
            return p
        return Point(l / k, -sigma_breve * n / k)

    L = CliffNum(zero, l, -sigma_breve * n, zero, sigma)
    w = vector_to_cliff(p[0], p[1], sigma)
    den = k * w - L
    if is_zero(den.norm()):
        return _image_at_infinity(den)

    image = (L * w + m) * cliff_inverse(den)
    return Point(image.c_e0, image.c_e1)


def _image_at_infinity(den: CliffNum) -> Ideal:
    du, dv = den.c_e0, den.c_e1
    direction = normalize_direction(du, dv)
    if direction is None:
        return Ideal(INFINITY, None)
    return Ideal(Cycle(0, du, dv, 0).canonical(), direction)


def cycle_conjugate(mirror: Cycle, C: Cycle, ctx: CycleContext, s_mirror: Optional[Sign] = None) -> Cycle:
    """M_mirror M_C M_mirror"""
    return reflect(mirror, C, ctx, s_mirror=s_mirror)


def reflection_aux_cycle(C: Cycle, ctx: CycleContext, branch: BRANCH = BRANCH.PLUS) -> Cycle:
    """(k, l, n +- sqrt(-det/sigma_breve), m), det taken with s = 1. Its
    conjugation swaps C and the real line.
    """
    sigma_breve = ctx.sigma_breve
    if sigma_breve == Sign.PARABOLIC:
        raise InvalidInputError("The reflection auxiliary cycle needs sigma_breve != 0")

    radicand = -det_cycle(C, ctx, s=Sign.HYPERBOLIC) / sigma_breve
    if radicand < 0:
        raise NegativeDiscriminant(radicand)

    k, l, n, m = C
    return Cycle(k, l, n + BRANCH(branch).sign * scalar_sqrt(radicand), m)


def second_kind_inversion(k: Scalar, l: Scalar, m: Scalar, p) -> Point:
    """(u, v) -> (u, 2(k(u - l)^2 + m) - v): the parabola v = k(u - l)^2 + m
    bisects the vertical segment from a point to its image
    """
    if is_zero(k):
        raise InvalidInputError("Inversion of the second kind needs k != 0")
    u, v = as_point(p)
    return Point(u, 2 * (k * (u - l) ** 2 + m) - v)


def second_kind_inversion_cycles(k: Scalar, l: Scalar, m: Scalar) -> Tuple[Cycle, Cycle]:
    """The two parabolic cycles u^2 - 2lu - 4mv + l^2 + m/k = 0 and
    u^2 - 2lu + l^2 + m/k = 0. Inverting in them in turn (sigma = 0, centres
    read with sigma_breve = -1) and then mirroring in the real line gives the
    inversion of the second kind.
    """
    if is_zero(k) or is_zero(m):
        raise InvalidInputError("The decomposition needs k != 0 and m != 0")
    constant = l * l + m / k
    return Cycle(1, l, 2 * m, constant), Cycle(1, l, 0, constant)


def second_kind_via_three_inversions(k: Scalar, l: Scalar, m: Scalar, p) -> ExtendedPoint:
    first, second = second_kind_inversion_cycles(k, l, m)
    q = cycle_moebius_point(first, as_point(p), Sign.PARABOLIC, Sign.ELLIPTIC)
    if isinstance(q, Ideal):
        return q
    q = cycle_moebius_point(second, q, Sign.PARABOLIC, Sign.ELLIPTIC)
    if isinstance(q, Ideal):
        return q
    return Point(q.u, -q.v)


def real_line_inversion_image(C1: Cycle, ctx: CycleContext, s: Sign, s1: Sign) -> RealLineImage:
    """Image of the real line (multiplier s) under the inversion in C1
    (multiplier s1): (2 s s1 sb k n, 2 s s1 sb l n, s^2 (l^2 + sb n^2 - m k), 2 s s1 sb m n)
    """
    s, s1 = Sign.of(s), Sign.of(s1)
    sb = ctx.sigma_breve
    k, l, n, m = C1
    factor = 2 * s * s1 * sb * n
    quadruple = (factor * k, factor * l, s * s * (l * l + sb * n * n - m * k), factor * m)

    det = det_cycle(C1, ctx, s=s1)
    is_real_line = not is_zero(s * det) and (is_zero(s1 * n) or sb == Sign.PARABOLIC)
    return RealLineImage(quadruple, is_real_line)
