#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Sampling cycles into polylines. Circles are walked by angle, every
# other cycle by u, solving
#     -k sigma v^2 - 2 n v + (k u^2 - 2 l u + m) = 0
# for v on up to two branches.
# ----------------------------------------------------------------------

import math

from typing import List

import numpy as np

from src.api import global_
from src.api.errors import EmptyLocus, InvalidInputError
from src.clifford.scalar import is_zero
from src.clifford.sign import Sign
from src.cycles.cycle import ALL_REALS, Cycle, roots, value_at
from src.moebius.points import Point
from .scene import DEFAULT_VIEWPORT, Polyline, Viewport

__all__ = ["sample_cycle", "residual"]


def residual(C: Cycle, p, sigma: Sign) -> float:
    """|value_at| relative to the size of the terms of the cycle equation"""
    C = C.to_float()
    u, v = float(p[0]), float(p[1])
    scale = max(abs(x) for x in C) * (1.0 + u * u + v * v)
    return abs(value_at(C, (u, v), sigma)) / scale


def sample_cycle(C: Cycle, sigma: Sign, n: int = global_.DEFAULT_SAMPLES, viewport: Viewport = DEFAULT_VIEWPORT) -> List[Polyline]:
    """One closed polyline for a circle, otherwise up to two branches
    over the u range of the viewport, cut where they leave a band of
    three viewport heights
    """
    if n < global_.MIN_SAMPLES:
        raise InvalidInputError(f"At least {global_.MIN_SAMPLES} samples are needed, got {n}")

    sigma = Sign.of(sigma)
    C = C.to_float()
    k, l, nn, m = C

    if sigma == Sign.ELLIPTIC and not is_zero(k):
        return [_circle(C, n)]

    a, b = -k * sigma, -2 * nn
    if is_zero(a) and is_zero(b):
        return _vertical_lines(C, sigma, viewport)

    u = np.linspace(viewport.umin, viewport.umax, n)
    c = k * u * u - 2 * l * u + m

    if is_zero(a):
        branches = [-c / b]
    else:
        disc = b * b - 4 * a * c
        root = np.sqrt(np.where(disc >= 0, disc, np.nan))
        branches = [(-b + root) / (2 * a), (-b - root) / (2 * a)]

    result = []
    for v in branches:
        v = _refine(v, a, b, c)
        result.extend(_runs(C, sigma, u, v, viewport))
    return result


def _circle(C: Cycle, n: int) -> Polyline:
    k, l, nn, m = C
    r2 = (l * l + nn * nn - m * k) / (k * k)
    if r2 < 0:
        raise EmptyLocus(C)

    cu, cv, r = l / k, nn / k, math.sqrt(max(r2, 0.0))
    theta = 2 * np.pi * np.arange(n) / n
    points = tuple(Point(float(x), float(y)) for x, y in zip(cu + r * np.cos(theta), cv + r * np.sin(theta)))
    return Polyline(points, closed=True, cycle=C, sigma=Sign.ELLIPTIC)


def _vertical_lines(C: Cycle, sigma: Sign, viewport: Viewport) -> List[Polyline]:
    """k u^2 - 2 l u + m = 0 with no v term"""
    us = roots(C)
    if us is ALL_REALS or not us:
        raise EmptyLocus(C)
    return [
        Polyline((Point(float(u), viewport.vmin), Point(float(u), viewport.vmax)), cycle=C, sigma=sigma) for u in us
    ]


def _refine(v, a, b, c):
    """One Newton step of a v^2 + b v + c = 0"""
    derivative = 2 * a * v + b
    safe = np.where(derivative == 0, 1.0, derivative)
    step = np.where(derivative == 0, 0.0, (a * v * v + b * v + c) / safe)
    return v - step


def _runs(C: Cycle, sigma: Sign, u, v, viewport: Viewport) -> List[Polyline]:
    low, high = viewport.vmin - viewport.height, viewport.vmax + viewport.height
    keep = np.isfinite(v) & (v >= low) & (v <= high)

    runs, current = [], []
    for x, y, ok in zip(u, v, keep):
        if ok:
            current.append(Point(float(x), float(y)))
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)

    return [Polyline(tuple(run), cycle=C, sigma=sigma) for run in runs if len(run) > 1]
