#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import Sequence

import numpy as np

from src.api.errors import InvalidInputError, NonPositiveV
from src.clifford.sign import Sign
from src.moebius import action
from src.moebius.points import Point
from src.moebius.sl2 import SL2Elem

__all__ = ["curve_length", "moebius_image_path", "arc_path"]


def curve_length(path: Sequence, sigma: Sign) -> float:
    """Length of a polyline for the line element sqrt|du^2 - sigma dv^2| / v.
    On a straight segment the numerator is constant and the integral of
    1/v has the closed form log(v1/v0) / (v1 - v0).
    """
    sigma = Sign.of(sigma)
    points = np.array([(float(u), float(v)) for u, v in path], dtype=float)
    if len(points) < 2:
        raise InvalidInputError("A path needs at least two points")

    bad = np.nonzero(points[:, 1] <= 0)[0]
    if bad.size:
        raise NonPositiveV(tuple(points[bad[0]]))

    du = np.diff(points[:, 0])
    dv = np.diff(points[:, 1])
    v0 = points[:-1, 1]

    element = np.sqrt(np.abs(du * du - sigma * dv * dv))
    x = dv / v0
    safe = np.where(x == 0, 1.0, x)
    inverse_v = np.where(x == 0, 1.0, np.log1p(safe) / safe) / v0
    return float(np.sum(element * inverse_v))


def moebius_image_path(g: SL2Elem, path: Sequence, sigma: Sign) -> list:
    """Vertex-wise image of a polyline; points sent to infinity raise"""
    image = []
    for p in path:
        q = action.moebius_apply(g, Point(*p), sigma)
        if not isinstance(q, Point):
            raise NonPositiveV(p)
        image.append(q.to_float())
    return image


def arc_path(centre_u: float, radius: float, theta0: float, theta1: float, sigma: Sign, samples: int = 4096) -> list:
    """Samples of the sigma-cycle orthogonal to the real line through
    (centre_u +- radius, 0): a half circle (sigma = -1) or the upper branch
    of a hyperbola (sigma = 1), parametrized by an angle
    """
    sigma = Sign.of(sigma)
    theta = np.linspace(theta0, theta1, samples)
    if sigma == Sign.ELLIPTIC:
        return [Point(float(u), float(v)) for u, v in zip(centre_u + radius * np.cos(theta), radius * np.sin(theta))]

    if sigma == Sign.HYPERBOLIC:
        # (u - c)^2 - v^2 = -r^2
        return [Point(float(u), float(v)) for u, v in zip(centre_u + radius * np.sinh(theta), radius * np.cosh(theta))]

    raise InvalidInputError("Parabolic arcs orthogonal to the real line are vertical lines")
