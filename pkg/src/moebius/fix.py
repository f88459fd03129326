#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import NamedTuple

from src.api.decorator import check_signs
from src.api.errors import NotFactorable
from src.clifford.scalar import is_zero, scalar_sqrt
from src.clifford.sign import Sign
from src.moebius.sl2 import SL2Elem

__all__ = ["FixFactors", "factor_via_fix_subgroup"]


class FixFactors(NamedTuple):
    """g = h f with h upper triangular (the ax + b group) and f in the fix
    group of e1
    """

    h: SL2Elem
    f: SL2Elem

    def recompose(self) -> SL2Elem:
        return self.h * self.f


@check_signs("sigma")
def factor_via_fix_subgroup(g: SL2Elem, sigma: Sign) -> FixFactors:
    """The fix group element is f = [[lambda d, sigma lambda c], [lambda c, lambda d]]
    with lambda = 1/sqrt(d^2 - sigma c^2), which clears the lower left entry
    of g f^-1. No such f exists when d^2 - sigma c^2 <= 0: e1 is sent to
    infinity or, for sigma = 1, below the real line.
    """
    _, _, c, d = g
    radicand = d * d - sigma * c * c
    if is_zero(radicand) or radicand < 0:
        raise NotFactorable()

    lam = 1 / scalar_sqrt(radicand)
    f = SL2Elem(lam * d, sigma * lam * c, lam * c, lam * d)
    h = g * f.inverse()
    return FixFactors(SL2Elem(h.a, h.b, h.c * 0, h.d), f)
