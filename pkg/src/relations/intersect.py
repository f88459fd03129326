#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import List

import numpy as np

from src.clifford.sign import Sign
from src.cycles.cycle import Cycle
from src.moebius.points import Point

__all__ = ["intersect_cycles"]

# Imaginary parts below this are rounding noise
IMAG_TOL = 1e-9


def intersect_cycles(C1: Cycle, C2: Cycle, sigma: Sign) -> List[Point]:
    """Common real points of the sigma-implementations (float). Both
    quadrics share the quadratic part u^2 - sigma v^2, so k2 C1 - k1 C2
    is a line through the intersections.
    """
    k1, l1, n1, m1 = (float(x) for x in C1)
    k2, l2, n2, m2 = (float(x) for x in C2)

    if k1 == 0 and k2 == 0:
        A = np.array([[l1, n1], [l2, n2]])
        if abs(np.linalg.det(A)) < IMAG_TOL:
            return []
        u, v = np.linalg.solve(A, [m1 / 2, m2 / 2])
        return [Point(float(u), float(v))]

    if k1 == 0:
        k1, l1, n1, m1, k2, l2, n2, m2 = k2, l2, n2, m2, k1, l1, n1, m1

    # line a u + b v = c
    a = 2 * (k2 * l1 - k1 * l2)
    b = 2 * (k2 * n1 - k1 * n2)
    c = k2 * m1 - k1 * m2
    if abs(a) < IMAG_TOL and abs(b) < IMAG_TOL:
        return []

    def on_first(u, v):
        return k1 * (u * u - sigma * v * v) - 2 * l1 * u - 2 * n1 * v + m1

    points = []
    if abs(b) >= abs(a):
        # v = (c - a u) / b
        p, q = -a / b, c / b
        coeffs = [k1 * (1 - sigma * p * p), -2 * k1 * sigma * p * q - 2 * l1 - 2 * n1 * p, -k1 * sigma * q * q - 2 * n1 * q + m1]
        for u in _real_roots(coeffs):
            points.append(Point(u, p * u + q))
    else:
        # u = (c - b v) / a
        p, q = -b / a, c / a
        coeffs = [k1 * (p * p - sigma), 2 * k1 * p * q - 2 * l1 * p - 2 * n1, k1 * q * q - 2 * l1 * q + m1]
        for v in _real_roots(coeffs):
            points.append(Point(p * v + q, v))

    return [pt for pt in points if abs(on_first(*pt)) < 1e-6 * max(1.0, abs(k1), abs(l1), abs(n1), abs(m1))]


def _real_roots(coeffs) -> List[float]:
    coeffs = np.trim_zeros(np.array(coeffs, dtype=float), "f")
    if coeffs.size <= 1:
        return []
    return sorted(float(r.real) for r in np.roots(coeffs) if abs(r.imag) < IMAG_TOL)
