#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import NamedTuple, Tuple, Union

from src.api.constants import FAMILY
from src.api.decorator import check_signs
from src.api.errors import DegenerateCurvature, InvalidInputError
from src.clifford.scalar import Scalar, as_scalar, is_exact, is_zero
from src.clifford.sign import Sign
from src.cycles.cycle import Cycle
from src.moebius.points import as_point

__all__ = ["KOrbit", "vector_field", "k_orbit_cycle", "fix_orbit_cycle"]


class KOrbit(NamedTuple):
    """The K-orbit through (0, t). Its curvature is undefined when the
    orbit collapses to the fixed point (1 + sigma t^2 = 0)
    """

    cycle: Cycle
    t: Scalar
    sigma: Sign

    @property
    def degenerate(self) -> bool:
        return is_zero(1 + self.sigma * self.t * self.t)

    @property
    def curvature(self) -> Scalar:
        if self.degenerate:
            raise DegenerateCurvature(self.t, self.sigma)
        return 2 * self.t / (1 + self.sigma * self.t * self.t)


@check_signs("sigma")
def vector_field(family: Union[FAMILY, str], p, sigma: Sign) -> Tuple[Scalar, Scalar]:
    """Derived action of the subgroup generators at p = (u, v)"""
    family = FAMILY(family)
    u, v = p

    if family == FAMILY.A:
        return 2 * u, 2 * v
    if family == FAMILY.N:
        return u * 0 + 1, v * 0
    if family == FAMILY.K:
        return 1 + u * u + sigma * v * v, 2 * u * v
    if family == FAMILY.FIX:
        return u * u + sigma * (v * v - 1), 2 * u * v

    raise InvalidInputError(f"Family '{family.value}' has no vector field")


@check_signs("sigma")
def k_orbit_cycle(t: Scalar, sigma: Sign) -> KOrbit:
    """The K-orbit through (0, t): (1, 0, (1/t - sigma t)/2, 1)"""
    if is_zero(t):
        raise InvalidInputError("K-orbit parameter t must be nonzero")
    t = as_scalar(t) if is_exact(t) else float(t)
    return KOrbit(Cycle(1, 0, (1 / t - sigma * t) / 2, 1), t, sigma)


@check_signs("sigma")
def fix_orbit_cycle(p, sigma: Sign) -> Cycle:
    """Orbit of the fix group of e1 through p = (u, v), v != 0:
    (1, 0, l, -sigma) with l = (u^2 - sigma v^2 - sigma) / (2v)
    """
    u, v = as_point(p)
    if is_zero(v):
        raise InvalidInputError("Fix group orbits are taken through points off the real line")
    return Cycle(1, 0, (u * u - sigma * v * v - sigma) / (2 * v), -sigma)
