#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Cayley transforms of points, SL(2,R) elements and cycles
#     w -> (w - e1)(sigma_breve e1 w + 1)^-1
# ----------------------------------------------------------------------

import functools

from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

import sympy

from src.api import errmsg
from src.api.errors import InternalError, ParabolicNotSimilarity
from src.clifford.cliffnum import CliffNum, cliff_inverse, vector_to_cliff
from src.clifford.matrix import CliffMatrix
from src.clifford.scalar import is_zero
from src.clifford.sign import Sign
from src.cycles.cycle import REAL_LINE, Cycle, value_at
from src.cycles.fit import fit_cycle
from src.moebius.points import ExtendedPoint, Ideal, Point, as_point, normalize_direction
from src.moebius.sl2 import SL2Elem
from .kind import CayleyKind

__all__ = [
    "SignConventionNote",
    "CayleyCycle",
    "cayley_point",
    "cayley_sl2",
    "transport_matrix",
    "cayley_cycle_linear",
    "printed_parabolic_cycle",
    "cayley_cycle_report",
    "cayley_cycle",
    "unit_cycle",
    "CROSS_CHECK_SAMPLES",
]

# Points of the source cycle pushed through cayley_point when checking
# the parabolic cycle formula
CROSS_CHECK_SAMPLES = 16


class SignConventionNote(NamedTuple):
    """The printed parabolic cycle map and the image found by transporting
    points of the cycle disagree
    """

    sigma_breve: Sign
    printed: Cycle
    transported: Cycle

    def as_dict(self) -> dict:
        return {
            "sigma_breve": int(self.sigma_breve),
            "printed": [str(x) for x in self.printed],
            "transported": [str(x) for x in self.transported],
        }


class CayleyCycle(NamedTuple):
    cycle: Cycle
    note: Optional[SignConventionNote] = None


def _quotient(w: CliffNum, kind: CayleyKind, inverse: bool = False) -> Tuple[CliffNum, object]:
    """(numerator, norm of the denominator) of the Cayley quotient or of
    its inverse, (w + e1)(-sigma_breve e1 w + 1)^-1. Works over any ring
    of coefficients.
    """
    sign = -1 if inverse else 1
    e1 = CliffNum(0, 0, 1, 0, kind.sigma)
    top = w - sign * e1
    bottom = (sign * int(kind.sigma_breve)) * (e1 * w) + 1
    return top * bottom.conjugate(), bottom.norm()


def _light_cone(p: Point, sigma: Sign) -> Cycle:
    """The sigma-cycle (u - u0)^2 - sigma (v - v0)^2 = 0"""
    u, v = p
    return Cycle(1, u, -sigma * v, u * u - sigma * v * v)


def cayley_point(kind: CayleyKind, p: ExtendedPoint) -> ExtendedPoint:
    """Image of a point. Points on the light cone of the pole go to
    infinity; every point at infinity goes to the image of infinity.
    """
    if isinstance(p, Ideal):
        e1 = CliffNum(0, 0, 1, 0, kind.sigma)
        lead = kind.sigma_breve * e1
        if is_zero(lead.norm()):
            return p
        image = cliff_inverse(lead)
        return Point(image.c_e0, image.c_e1)

    p = as_point(p)
    num, norm = _quotient(vector_to_cliff(p.u, p.v, kind.sigma), kind)
    if is_zero(norm):
        image = cayley_cycle_linear(_light_cone(p, kind.sigma), kind)
        image = Cycle(*image)
        return Ideal(image.canonical(), normalize_direction(image.l, image.n))

    if isinstance(norm, int):
        norm = Fraction(norm)
    return Point(num.c_e0 / norm, num.c_e1 / norm)


def cayley_sl2(g: SL2Elem, kind: CayleyKind) -> CliffMatrix:
    """(1/2) C g C^-1 with g in its Clifford form. It intertwines the
    Moebius action with the action on the unit disk.
    """
    if kind.is_parabolic:
        raise ParabolicNotSimilarity()

    G = g.clifford_matrix(kind.sigma)
    return (kind.matrix() * G * kind.adjugate()) * Fraction(1, 2)


@functools.lru_cache(maxsize=None)
def transport_matrix(kind: CayleyKind) -> Tuple[Tuple[Fraction, ...], ...]:
    """Rows (over k, l, n, m) of the linear map of cycles induced by the
    point map: a point w' lies on the image when its preimage lies on the
    source. Derived symbolically, once per kind.
    """
    u, v, k, l, n, m = sympy.symbols("u v k l n m")
    zero = sympy.Integer(0)
    w = CliffNum(zero, u, v, zero, kind.sigma)
    num, norm = _quotient(w, kind, inverse=True)
    if sympy.expand(num.c1) != 0 or sympy.expand(num.c_e01) != 0:
        raise InternalError(f"Cayley quotient of kind {kind} is not a vector")

    # value_at(preimage) * norm^2 factors through norm
    top = w + CliffNum(0, 0, 1, 0, kind.sigma)
    equation = sympy.Poly(
        sympy.expand(k * top.norm() - 2 * l * num.c_e0 - 2 * n * num.c_e1 + m * norm),
        u,
        v,
    )

    def coefficient(monomial):
        return sympy.Poly(equation.coeff_monomial(monomial), k, l, n, m)

    K, L, N, M = coefficient(u**2), coefficient(u), coefficient(v), coefficient(1)
    if sympy.expand(coefficient(v**2).as_expr() + int(kind.sigma) * K.as_expr()) != 0 or equation.coeff_monomial(u * v) != 0:
        raise InternalError(f"Cayley image under kind {kind} is not a cycle")

    def row(poly, scale):
        return tuple(_fraction(scale * poly.coeff_monomial(x)) for x in (k, l, n, m))

    return row(K, 1), row(L, sympy.Rational(-1, 2)), row(N, sympy.Rational(-1, 2)), row(M, 1)


def _fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def cayley_cycle_linear(quadruple: Sequence, kind: CayleyKind) -> List:
    """The transported quadruple over any coefficient ring (scalars or jets)"""
    matrix = transport_matrix(kind)
    return [sum((a * x for a, x in zip(row, quadruple) if a), 0 * quadruple[0]) for row in matrix]


def printed_parabolic_cycle(C: Cycle, sigma_breve: Sign) -> Cycle:
    """(k - 2 sigma_breve n, l, n, m + 2 sigma_breve n)"""
    k, l, n, m = C
    return Cycle(k - 2 * sigma_breve * n, l, n, m + 2 * sigma_breve * n)


def _sample_points(C: Cycle) -> List[Point]:
    """Points of a parabolic cycle with n != 0 over a fixed set of u"""
    k, l, n, m = C
    us = [Fraction(i - CROSS_CHECK_SAMPLES // 2, 2) for i in range(CROSS_CHECK_SAMPLES)]
    if not C.is_exact:
        us = [float(u) for u in us]
    return [Point(u, (k * u * u - 2 * l * u + m) / (2 * n)) for u in us]


def cayley_cycle_report(C: Cycle, kind: CayleyKind) -> CayleyCycle:
    """Image of a cycle. In the parabolic plane the printed cycle formula
    is checked against points of C pushed through cayley_point; when they
    disagree the fit through the pushed points is returned with a note.
    """
    if not kind.is_parabolic:
        return CayleyCycle(Cycle(*cayley_cycle_linear(C, kind)))

    printed = printed_parabolic_cycle(C, kind.sigma_breve)
    if is_zero(C.n):
        return CayleyCycle(printed)

    images = [cayley_point(kind, p) for p in _sample_points(C)]
    if C.is_exact:
        agree = all(value_at(printed, q, Sign.PARABOLIC) == 0 for q in images)
    else:
        scale = max(abs(x) for x in printed)
        agree = all(abs(value_at(printed, q, Sign.PARABOLIC)) <= 1e-9 * scale * (1 + q.u * q.u) for q in images)

    if agree:
        return CayleyCycle(printed)

    transported = fit_cycle(images, Sign.PARABOLIC)
    errmsg.warning_sign_convention(printed, transported)
    return CayleyCycle(transported, SignConventionNote(kind.sigma_breve, printed, transported))


def cayley_cycle(C: Cycle, kind: CayleyKind) -> Cycle:
    return cayley_cycle_report(C, kind).cycle


def unit_cycle(kind: CayleyKind) -> Cycle:
    """Image of the real line: u^2 + v^2 = 1, u^2 - v^2 = -1, or the
    parabola v = -1 - sigma_breve u^2 (a line for the shift)
    """
    return Cycle(*cayley_cycle_linear(REAL_LINE, kind))
