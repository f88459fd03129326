#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import math

from typing import NamedTuple

from src.moebius.sl2 import SL2Elem

__all__ = ["IwasawaFactors", "iwasawa"]


class IwasawaFactors(NamedTuple):
    """g = A(alpha) N(nu) K(phi) with A(alpha) = diag(1/alpha, alpha)"""

    alpha: float
    nu: float
    phi: float

    def a(self) -> SL2Elem:
        return SL2Elem(1 / self.alpha, 0.0, 0.0, self.alpha)

    def n(self) -> SL2Elem:
        return SL2Elem(1.0, self.nu, 0.0, 1.0)

    def k(self) -> SL2Elem:
        return SL2Elem(math.cos(self.phi), math.sin(self.phi), -math.sin(self.phi), math.cos(self.phi))

    def recompose(self) -> SL2Elem:
        return self.a() * self.n() * self.k()


def iwasawa(g: SL2Elem) -> IwasawaFactors:
    """alpha = sqrt(c^2 + d^2), nu = ac + bd, phi = atan2(-c, d) in (-pi, pi]"""
    a, b, c, d = (float(x) for x in g)
    phi = math.atan2(-c, d)
    if phi == -math.pi:  # c = 0.0 gives -c = -0.0
        phi = math.pi
    return IwasawaFactors(math.hypot(c, d), a * c + b * d, phi)
