#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# The zero radius cycle at infinity and the compactification of the
# point space: points of the light cone u^2 - sigma v^2 = 0 at the origin
# are sent to infinity by the inversion in the unit cycle.
# ----------------------------------------------------------------------

from typing import NamedTuple

from src.clifford.cliffnum import vector_to_cliff
from src.clifford.scalar import is_zero
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import INFINITY, UNIT_CYCLE, Cycle, zero_radius_cycle
from src.cycles.fsc import inner_re, reflect

__all__ = ["Compactification", "compactification_predicates", "unit_inversion"]

ORIGIN = (0, 0)


class Compactification(NamedTuple):
    on_zero_cycle: bool
    orthogonal_to_zero: bool
    inversion_singular: bool
    image_orthogonal_to_infinity: bool

    @property
    def agree(self) -> bool:
        return len(set(self)) == 1


def unit_inversion(C: Cycle, sigma_breve: Sign) -> Cycle:
    """Conjugation by the unit cycle (1, 0, 0, -1): swaps k and m"""
    return reflect(UNIT_CYCLE, C, CycleContext.make(sigma=sigma_breve, s=1))


def compactification_predicates(p, sigma: Sign) -> Compactification:
    """Four descriptions of the points sent to infinity by the unit
    inversion. All of them hold exactly when u^2 - sigma v^2 = 0.
    """
    sigma = Sign.of(sigma)
    ctx = CycleContext.make(sigma=sigma, s=1)
    zero = zero_radius_cycle(ORIGIN, sigma)
    zp = zero_radius_cycle(p, sigma)

    on_zero_cycle = is_zero(zero.value_at(p, sigma))
    orthogonal_to_zero = is_zero(inner_re(zp, zero, ctx))
    # inversion in the unit cycle divides by w
    inversion_singular = is_zero(vector_to_cliff(p[0], p[1], sigma).norm())
    image_orthogonal_to_infinity = is_zero(inner_re(unit_inversion(zp, sigma), INFINITY, ctx))

    return Compactification(on_zero_cycle, orthogonal_to_zero, inversion_singular, image_orthogonal_to_infinity)
