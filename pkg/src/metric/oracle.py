#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Brute force extremal diameter over the one-parameter family of
# sigma-cycles through two points (float)
# ----------------------------------------------------------------------

from typing import Callable, NamedTuple

import numpy as np

from scipy import optimize

from src.api.errors import GeometryError
from src.clifford.sign import Sign
from src.moebius.points import as_point

__all__ = ["Extremum", "distance_extremum_oracle", "GRID_SAMPLES"]

GRID_SAMPLES = 4096
BOUNDED_XTOL = 1e-10


class Extremum(NamedTuple):
    parameter: float  # l, or n for points of equal height
    value: float  # squared diameter
    at_boundary: bool


def distance_extremum_oracle(p1, p2, sigma: Sign, sigma_breve: Sign) -> Extremum:
    """Samples the squared sigma_breve-diameter of the cycles (1, l, n, m)
    through both points, then refines the extremal sample by a bounded
    Brent search between its neighbours. The parabolic point space takes
    the value at the flip of the family, l = (u + u')/2.
    """
    sigma, sigma_breve = Sign.of(sigma), Sign.of(sigma_breve)
    (u, v), (u1, v1) = as_point(p1).to_float(), as_point(p2).to_float()
    a, a1 = u * u - sigma * v * v, u1 * u1 - sigma * v1 * v1
    midpoint = (u + u1) / 2

    def diameter_sq(l, n):
        m = -a + 2 * l * u + 2 * n * v
        return 4 * (l * l - sigma_breve * n * n - m)

    if v == v1:
        radius = 10 * (1 + abs(v) + abs(v1))
        return _extremum(lambda n: diameter_sq(midpoint, n), 0.0, radius)

    def through_both(l):
        n = (a - a1 - 2 * l * (u - u1)) / (2 * (v - v1))
        return diameter_sq(l, n)

    if sigma == Sign.PARABOLIC:
        return Extremum(midpoint, float(through_both(midpoint)), True)

    radius = 10 * (1 + abs(u) + abs(u1))
    return _extremum(through_both, midpoint, radius)


def _extremum(f: Callable, centre: float, radius: float) -> Extremum:
    grid = np.linspace(centre - radius, centre + radius, GRID_SAMPLES)
    values = f(grid)

    # the family is quadratic in its parameter: one extremum, min or max
    curvature = np.sum(np.diff(values, 2))
    sign = 1.0 if curvature >= 0 else -1.0
    i = int(np.argmin(sign * values))

    if i == 0 or i == GRID_SAMPLES - 1:
        return Extremum(float(grid[i]), float(values[i]), True)

    # the minimum lies between the neighbours of the lowest sample
    result = optimize.minimize_scalar(
        lambda x: sign * f(x),
        bounds=(grid[i - 1], grid[i + 1]),
        method="bounded",
        options={"xatol": BOUNDED_XTOL},
    )
    if not result.success:
        raise GeometryError(f"Extremum refinement failed: {result.message}")

    x = float(result.x)
    return Extremum(x, float(f(x)), False)
