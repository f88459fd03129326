#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# FSC matrices of cycles
#     M = [[L, m], [k, -L]],  L = l e0 + s n e1  over Cl(sigma_breve)
# and the invariants read from them.
# ----------------------------------------------------------------------

from typing import NamedTuple, Optional, Union

from src.api.constants import NORM
from src.api.errors import FocusUndefined, NotNormalizable
from src.clifford.cliffnum import CliffNum, scalar_cliff
from src.clifford.matrix import CliffMatrix
from src.clifford.scalar import Scalar, is_zero, scalar_sqrt
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import Cycle
from src.moebius.points import ExtendedPoint, Ideal, Point, normalize_direction
from src.moebius.sl2 import SL2Elem

__all__ = [
    "Inner",
    "Focus",
    "fsc_matrix",
    "cycle_from_matrix",
    "sl2_transform",
    "det_cycle",
    "inner",
    "inner_re",
    "normalize",
    "center",
    "focus",
    "reflect",
]


class Inner(NamedTuple):
    full: CliffNum
    re: Scalar


class Focus(NamedTuple):
    point: Point
    focal_length: Scalar


def fsc_matrix(C: Cycle, ctx: CycleContext, s: Optional[Sign] = None) -> CliffMatrix:
    s = ctx.s if s is None else s
    sb = ctx.sigma_breve
    k, l, n, m = C
    zero = k * 0
    L = CliffNum(zero, l, s * n, zero, sb)
    return CliffMatrix(L, scalar_cliff(m, sb), scalar_cliff(k, sb), -L)


def cycle_from_matrix(M: CliffMatrix, s: Sign) -> Cycle:
    """k from entry (2,1), m from entry (1,2), l and n from the e0 and e1
    parts of entry (1,1). The n part needs s != 0.
    """
    return Cycle(M.c.c1, M.a.c_e0, M.a.c_e1 / s, M.b.c1)


def sl2_transform(C: Cycle, g: SL2Elem, ctx: Optional[CycleContext] = None) -> Cycle:
    """The cycle g M g^-1. The quadruple does not depend on sigma_breve
    nor on s, so an internal s = 1 matrix is used.
    """
    ctx = ctx or CycleContext()
    sb = ctx.sigma_breve
    M = fsc_matrix(C, ctx, s=Sign.HYPERBOLIC)
    image = g.clifford_matrix(sb) * M * g.clifford_inverse(sb)
    return cycle_from_matrix(image, Sign.HYPERBOLIC)


def det_cycle(C: Cycle, ctx: CycleContext, s: Optional[Sign] = None) -> Scalar:
    """l^2 - sigma_breve s^2 n^2 - m k of the given representative"""
    s = ctx.s if s is None else s
    k, l, n, m = C
    return l * l - ctx.sigma_breve * s * s * n * n - m * k


def inner(C1: Cycle, C2: Cycle, ctx: CycleContext) -> Inner:
    """tr(M1 M2) and its scalar part"""
    full = (fsc_matrix(C1, ctx) * fsc_matrix(C2, ctx)).trace()
    return Inner(full, full.c1)


def inner_re(C1: Cycle, C2: Cycle, ctx: CycleContext, s1: Optional[Sign] = None, s2: Optional[Sign] = None) -> Scalar:
    """Scalar part of the inner product in closed form, with possibly
    different multipliers on each side
    """
    s1 = ctx.s if s1 is None else s1
    s2 = ctx.s if s2 is None else s2
    k1, l1, n1, m1 = C1
    k2, l2, n2, m2 = C2
    return 2 * (-l1 * l2 + ctx.sigma_breve * s1 * s2 * n1 * n2) + m1 * k2 + k1 * m2


def normalize(C: Cycle, mode: Union[NORM, str], ctx: CycleContext) -> Cycle:
    mode = NORM(mode)

    if mode == NORM.CANONICAL:
        return C.canonical()

    if mode == NORM.K:
        if is_zero(C.k):
            raise NotNormalizable("k = 0")
        return C.scale(1 / C.k)

    det = det_cycle(C, ctx)
    if is_zero(det) or det < 0:
        raise NotNormalizable(f"determinant {det} is not positive")
    return C.scale(1 / scalar_sqrt(det))


def center(C: Cycle, varsigma: Sign) -> ExtendedPoint:
    """(l/k, -varsigma n/k); lines have their centre at infinity"""
    k, l, n, _ = C
    if is_zero(k):
        return Ideal(C.canonical(), normalize_direction(l, n))
    return Point(l / k, -varsigma * n / k)


def focus(C: Cycle, varsigma: Sign) -> Focus:
    """(l/k, (mk - l^2 + varsigma n^2) / (2nk)) and the focal length n/(2k)"""
    k, l, n, m = C
    if is_zero(n) or is_zero(k):
        raise FocusUndefined(C)
    v = (m * k - l * l + varsigma * n * n) / (2 * n * k)
    return Focus(Point(l / k, v), n / (2 * k))


def reflect(mirror: Cycle, C: Cycle, ctx: CycleContext, s_mirror: Optional[Sign] = None) -> Cycle:
    """The cycle of M_mirror M_C M_mirror. Read with the context s; for
    s = 0 the closed form re<A,C> A + det(A) C is used.
    """
    s_mirror = ctx.s if s_mirror is None else s_mirror

    if ctx.s != Sign.PARABOLIC:
        A = fsc_matrix(mirror, ctx, s=s_mirror)
        return cycle_from_matrix(A * fsc_matrix(C, ctx) * A, ctx.s)

    re = inner_re(mirror, C, ctx, s1=s_mirror)
    det = det_cycle(mirror, ctx, s=s_mirror)
    return Cycle(*(re * a + det * c for a, c in zip(mirror, C)))
