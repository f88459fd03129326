#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy
from scipy import linalg

from src.api.errors import GeometryError, InsufficientPoints
from src.clifford.scalar import is_exact
from src.clifford.sign import Sign
from src.cycles.cycle import Cycle

__all__ = ["fit_cycle"]

# Singular values below this fraction of the largest one span the nullspace
NULLSPACE_RCOND = 1e-9


def _row(p, sigma: Sign):
    u, v = p
    return [u * u - sigma * v * v, -2 * u, -2 * v, 1]


def fit_cycle(points: Sequence, sigma: Sign, conditions: Sequence = ()) -> Cycle:
    """The cycle through the given points: the nullspace of the rows
    (u^2 - sigma v^2, -2u, -2v, 1), plus any extra linear conditions
    given as rows over (k, l, n, m). Exact input is fitted with rational
    arithmetic, float input through the SVD.
    """
    points, conditions = list(points), [list(c) for c in conditions]
    if len(points) + len(conditions) < 3:
        raise InsufficientPoints(len(points))

    rows = [_row(p, sigma) for p in points] + conditions
    if all(is_exact(x) for row in rows for x in row):
        return _fit_exact(rows, len(points))

    return _fit_float(rows, len(points))


def _fit_exact(rows, count: int) -> Cycle:
    rows = [[sympy.Rational(x.numerator, x.denominator) for x in map(Fraction, row)] for row in rows]
    basis = sympy.Matrix(rows).nullspace()
    if not basis:
        raise GeometryError("Points do not lie on a common cycle")
    if len(basis) > 1:
        raise InsufficientPoints(count)

    return Cycle(*(Fraction(int(x.p), int(x.q)) for x in basis[0]))


def _fit_float(rows, count: int) -> Cycle:
    A = np.array([[float(x) for x in row] for row in rows], dtype=float)
    basis = linalg.null_space(A, rcond=NULLSPACE_RCOND)
    if basis.shape[1] > 1:
        raise InsufficientPoints(count)

    if basis.shape[1] == 0:
        # Noisy samples: least squares solution
        _, _, vh = np.linalg.svd(A)
        return Cycle(*(float(x) for x in vh[-1]))

    return Cycle(*(float(x) for x in basis[:, 0]))
