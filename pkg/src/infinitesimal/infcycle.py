#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Infinitesimal radius cycles: quadruples of eps-jets with
# determinant -eps^2 and a given varsigma-focus.
# ----------------------------------------------------------------------

from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from src.api.errors import DivisionLeadingZero, InvalidInputError, NonPositiveV
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import Cycle
from src.cycles.fsc import det_cycle, inner_re
from src.infinitesimal.jet import JET_ORDER, Jet, jet_ratio, jet_sqrt
from src.moebius.points import Point, as_point
from src.moebius.sl2 import SL2Elem

__all__ = [
    "InfCycle",
    "InfOrthogonality",
    "infinitesimal_cycle",
    "point_on_inf_cycle",
    "inf_orthogonality_conditions",
    "f_residual",
    "reverse_f_residual",
]

# Extra orders kept when dividing by n, which starts at eps^2
DIVISION_HEADROOM = 2


class InfCycle(NamedTuple):
    k: Jet
    l: Jet
    n: Jet
    m: Jet
    ctx: CycleContext
    focus: Optional[Point] = None

    @property
    def quadruple(self) -> Tuple[Jet, Jet, Jet, Jet]:
        return self.k, self.l, self.n, self.m

    @property
    def order(self) -> int:
        return min(x.order for x in self.quadruple)

    def det(self) -> Jet:
        return det_cycle(self.quadruple, self.ctx, s=Sign.HYPERBOLIC)

    def _derived(self, k: Jet, l: Jet, n: Jet, m: Jet) -> "InfCycle":
        image = InfCycle(k, l, n, m, self.ctx)
        try:
            u, v = image.focus_jets(self.ctx.varsigma)
        except DivisionLeadingZero:
            return image
        return image._replace(focus=Point(u.c0, v.c0))

    def sl2_image(self, g: SL2Elem) -> "InfCycle":
        """g M g^-1 written out on the quadruple, valid for any sigma_breve"""
        a, b, c, d = g
        k, l, n, m = self.quadruple
        return self._derived(
            d * d * k + 2 * c * d * l + c * c * m,
            b * d * k + (a * d + b * c) * l + a * c * m,
            n,
            b * b * k + 2 * a * b * l + a * a * m,
        )

    def conjugate(self, mirror: Cycle) -> "InfCycle":
        """mirror M mirror = re<mirror, M> mirror + det(mirror) M"""
        re = inner_re(mirror, self.quadruple, self.ctx, s1=Sign.HYPERBOLIC, s2=Sign.HYPERBOLIC)
        det = det_cycle(mirror, self.ctx, s=Sign.HYPERBOLIC)
        return self._derived(*(re * a + det * x for a, x in zip(mirror, self.quadruple)))

    def focus_jets(self, varsigma: Optional[Sign] = None) -> Tuple[Jet, Jet]:
        """(l/k, (mk - l^2 + varsigma n^2) / (2nk)) as jets"""
        varsigma = self.ctx.varsigma if varsigma is None else Sign.of(varsigma)
        k, l, n, m = self.quadruple
        return l / k, jet_ratio(m * k - l * l + varsigma * n * n, 2 * n * k)

    def focal_length(self) -> Jet:
        return self.n / (2 * self.k)

    def value_at(self, u, v) -> Jet:
        k, l, n, m = self.quadruple
        return k * (u * u - self.ctx.sigma * v * v) - 2 * l * u - 2 * n * v + m


class InfOrthogonality(NamedTuple):
    ortho: Jet
    f_residual: Jet


def infinitesimal_cycle(u0, v0, ctx: CycleContext, order: int = JET_ORDER) -> InfCycle:
    """The cycle (1, u0, n, u0^2 + 2 n v0 - varsigma n^2) with varsigma-focus
    (u0, v0) and determinant -eps^2, which fixes
        (varsigma - sigma_breve) n^2 - 2 v0 n + eps^2 = 0
    on the root vanishing with eps.
    """
    u0, v0 = as_point((u0, v0))
    if not isinstance(v0, Fraction):
        raise InvalidInputError("Infinitesimal cycles need an exact focus")
    if v0 <= 0:
        raise NonPositiveV((u0, v0))

    eps2 = Jet.eps(2, order)
    delta = ctx.varsigma - ctx.sigma_breve
    if delta == 0:
        n = eps2 / (2 * v0)
    else:
        n = (v0 - jet_sqrt(v0 * v0 - delta * eps2)) / delta

    k = Jet.constant(1, order)
    l = Jet.constant(u0, order)
    m = u0 * u0 + 2 * v0 * n - ctx.varsigma * n * n
    return InfCycle(k, l, n, m, ctx, Point(u0, v0))


def point_on_inf_cycle(ic: InfCycle, u) -> Tuple[Jet, Jet]:
    """The point of ic at horizontal offset eps u from the focus. In the
    parabolic plane the cycle equation gives
        v = v0 + eps^2 u^2 / (2n) - varsigma n / 2
    exactly.
    """
    if ic.ctx.sigma != Sign.PARABOLIC:
        raise InvalidInputError("Points of infinitesimal cycles are expanded in the parabolic plane")
    if ic.focus is None or ic.k != 1:
        raise InvalidInputError("Expected an infinitesimal cycle built from its focus")

    order = ic.order
    u0, v0 = ic.focus
    wide = infinitesimal_cycle(u0, v0, ic.ctx, order + DIVISION_HEADROOM)
    n = wide.n

    x = Fraction(u)
    U = u0 + x * Jet.eps(1, order)
    V = v0 + jet_ratio(x * x * Jet.eps(2, wide.order), 2 * n) - ic.ctx.varsigma * n / 2
    return U, V.truncate(order)


def f_residual(C1, C2, ctx: CycleContext) -> Jet:
    """n2 det(C1) + n1 re<C1, C2> with the common powers of eps in n1
    cancelled; either argument may carry jets
    """
    n1, n2 = C1[2], C2[2]
    det = det_cycle(C1, ctx, s=Sign.HYPERBOLIC)
    re = inner_re(C1, C2, ctx, s1=Sign.HYPERBOLIC, s2=Sign.HYPERBOLIC)
    return jet_ratio(Jet.of(n2 * det + n1 * re), Jet.of(n1))


def reverse_f_residual(C1, C2, ctx: CycleContext) -> Jet:
    """n1 det(C2) + n2 re<C2, C1>: the condition for C2 being f-orthogonal to C1"""
    n1 = C1[2]
    det = det_cycle(C2, ctx, s=Sign.HYPERBOLIC)
    re = inner_re(C2, C1, ctx, s1=Sign.HYPERBOLIC, s2=Sign.HYPERBOLIC)
    return Jet.of(n1 * det + C2[2] * re)


def inf_orthogonality_conditions(ic: InfCycle, C: Cycle) -> InfOrthogonality:
    """Residuals of ic orthogonal to C and of ic f-orthogonal to C. Their
    leading terms are
        k u0^2 - 2 l u0 + m          (C has the root u0)
        k u0^2 - 2 l u0 - 2 n v0 + m (C passes the focus)
    """
    if not C.is_exact:
        raise InvalidInputError("Infinitesimal conditions need an exact cycle")

    ortho = inner_re(ic.quadruple, C, ic.ctx, s1=Sign.HYPERBOLIC, s2=Sign.HYPERBOLIC)
    return InfOrthogonality(Jet.of(ortho), f_residual(ic.quadruple, C, ic.ctx))
