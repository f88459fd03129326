#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from src.api.errors import GhostUndefined
from src.clifford.scalar import is_zero
from src.clifford.sign import Sign, chi
from src.cycles.context import CycleContext
from src.cycles.cycle import REAL_LINE, Cycle
from src.cycles.fsc import reflect

__all__ = ["ghost_cycle", "f_ghost_cycle"]


def ghost_cycle(C: Cycle, ctx: CycleContext) -> Cycle:
    """The cycle whose chi(sigma)-centre is the sigma_breve-centre of C and
    whose determinant (s = 1, cycle space sigma) is that of C at
    s = chi(sigma_breve): (k, l, chi(sigma) sigma_breve n, m). For
    sigma_breve = 0 with sigma != 0 and n != 0 the two conditions move m
    and the result no longer shares the roots of C, so GhostUndefined is
    raised.
    """
    k, l, n, m = C
    if is_zero(k):
        raise GhostUndefined("the cycle is flat (k = 0)")

    sigma, sigma_breve = ctx.sigma, ctx.sigma_breve
    if sigma_breve == Sign.PARABOLIC and sigma != Sign.PARABOLIC and not is_zero(n):
        # the solution exists but no longer shares the roots of C
        raise GhostUndefined("centre and determinant conditions lose the roots of C for sigma_breve = 0")

    return Cycle(k, l, chi(sigma) * sigma_breve * n, m)


def f_ghost_cycle(C: Cycle, ctx: CycleContext) -> Cycle:
    """Reflection of the real line (s = sigma_breve) in C taken with
    s = chi(sigma). Shares the roots of C; its chi(sigma)-centre is the
    (-sigma_breve)-focus of C.
    """
    sigma_breve = ctx.sigma_breve
    s_mirror = chi(ctx.sigma)

    if sigma_breve != Sign.PARABOLIC:
        return reflect(C, REAL_LINE, ctx.with_(s=sigma_breve), s_mirror=s_mirror)

    # parabolic cycle space: the projective limit of the above
    k, l, n, m = C
    scale = 2 * s_mirror * n
    return Cycle(scale * k, scale * l, l * l - m * k, scale * m)
