#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import List

from src.clifford.scalar import Scalar, is_zero
from src.cycles.context import CycleContext
from src.cycles.cycle import REAL_LINE, Cycle
from src.cycles.fsc import det_cycle, fsc_matrix, inner

__all__ = [
    "orthogonal",
    "orthogonal_form",
    "f_orthogonality_trace",
    "f_orthogonal",
    "f_orthogonal_closed_form",
    "f_orthogonal_form",
]


def orthogonal(C1: Cycle, C2: Cycle, ctx: CycleContext) -> bool:
    """Real part of the inner product vanishes"""
    return is_zero(inner(C1, C2, ctx).re)


def orthogonal_form(A: Cycle, ctx: CycleContext) -> List[Scalar]:
    """Coefficients over (k, l, n, m) of the linear form D -> re<A, D>"""
    k, l, n, m = A
    return [m, -2 * l, 2 * ctx.sigma_breve * ctx.s * ctx.s * n, k]


def f_orthogonality_trace(C1: Cycle, C2: Cycle, ctx: CycleContext) -> Scalar:
    """Re tr(M1 M2 M1 R) with R the real line"""
    M1 = fsc_matrix(C1, ctx)
    product = M1 * fsc_matrix(C2, ctx) * M1 * fsc_matrix(REAL_LINE, ctx)
    return product.trace().c1


def f_orthogonal(C1: Cycle, C2: Cycle, ctx: CycleContext) -> bool:
    """C1 is f-orthogonal to C2 (not symmetric)"""
    return is_zero(f_orthogonality_trace(C1, C2, ctx))


def f_orthogonal_closed_form(C1: Cycle, C2: Cycle, ctx: CycleContext) -> Scalar:
    """n2 det(C1) + n1 re<C1, C2>; the trace above is 2 sigma_breve s^2 times this"""
    return C2.n * det_cycle(C1, ctx) + C1.n * inner(C1, C2, ctx).re


def f_orthogonal_form(A: Cycle, ctx: CycleContext) -> List[Scalar]:
    """Coefficients over (k, l, n, m) of the linear form
    D -> n_D det(A) + n_A re<A, D>
    """
    form = [A.n * x for x in orthogonal_form(A, ctx)]
    form[2] += det_cycle(A, ctx)
    return form
