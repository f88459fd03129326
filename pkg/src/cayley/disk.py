#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Unit disks: images of the upper half-plane under the Cayley
# transforms, and the Cayley images of the N and N' orbits
# ----------------------------------------------------------------------

from fractions import Fraction
from typing import NamedTuple, Optional

from src.api.constants import BRANCH
from src.api.errors import CoincidentOrdinates, InvalidInputError
from src.clifford.scalar import Scalar, is_zero
from src.clifford.sign import Sign
from src.cycles.cycle import Cycle, value_at
from src.metric.lengths import length_from_centre_sq, length_from_focus_sq
from src.moebius.orbits import fix_orbit_cycle
from src.moebius.points import Point, as_point
from .kind import CayleyKind
from .transform import cayley_cycle_linear, cayley_point, unit_cycle

__all__ = [
    "DiskForms",
    "in_unit_disk",
    "on_unit_cycle",
    "unit_disk_forms",
    "n_orbit_image",
    "fix_orbit_image",
    "P_FOCUS",
]

# The p-focus of the parabolic unit cycles
P_FOCUS = Point(Fraction(0), Fraction(-1))


class DiskForms(NamedTuple):
    """Parabolic unit disk descriptions, each < 1 inside and = 1 on the
    unit cycle: the p-length from the e-centre (0, -sigma_breve/2), the
    p-length from the h-focus (0, -1 - sigma_breve/4), and the p-length
    from the p-focus (0, -1) (only above v = -1)
    """

    centre: Scalar
    h_focus: Scalar
    p_focus: Optional[Scalar]


def _inside_sign(kind: CayleyKind) -> int:
    """Sign of the unit cycle equation at the image of (0, 1)"""
    reference = value_at(unit_cycle(kind), cayley_point(kind, (Fraction(0), Fraction(1))), kind.sigma)
    return 1 if reference > 0 else -1


def in_unit_disk(kind: CayleyKind, p) -> bool:
    """p lies strictly on the side of the unit cycle of the image of the
    upper half-plane
    """
    value = value_at(unit_cycle(kind), as_point(p), kind.sigma)
    return not is_zero(value) and (value > 0) == (_inside_sign(kind) > 0)


def on_unit_cycle(kind: CayleyKind, p) -> bool:
    return is_zero(value_at(unit_cycle(kind), as_point(p), kind.sigma))


def unit_disk_forms(kind: CayleyKind, p) -> DiskForms:
    """The three parabolic descriptions of the unit disk at p, for the
    flavours sigma_breve = -1, 1
    """
    if not kind.is_parabolic or kind.sigma_breve == Sign.PARABOLIC:
        raise InvalidInputError(f"Unit disk forms are defined for the Pe and Ph transforms, not {kind}")

    p = as_point(p)
    sb = kind.sigma_breve
    half = Fraction(1, 2) if p.is_exact else 0.5
    quarter = half * half

    centre = length_from_centre_sq(
        Point(0 * half, -sb * half), p, Sign.PARABOLIC, Sign.PARABOLIC, varsigma=Sign.ELLIPTIC
    )

    # Branch giving the constant focal parameter on the unit cycle
    branch = BRANCH.PLUS if sb == Sign.ELLIPTIC else BRANCH.MINUS
    h_focus = length_from_focus_sq(
        Point(0 * half, -1 - sb * quarter), p, Sign.PARABOLIC, Sign.PARABOLIC, Sign.HYPERBOLIC, branch
    ).len_sq

    try:
        p_focus = length_from_focus_sq(P_FOCUS, p, Sign.PARABOLIC, Sign.PARABOLIC, Sign.PARABOLIC).len_sq
    except CoincidentOrdinates:
        p_focus = None

    if p_focus is not None and p.v <= -1:
        p_focus = None

    return DiskForms(-sb * centre, -sb * h_focus, None if p_focus is None else -sb * p_focus)


def n_orbit_image(height: Scalar, kind: CayleyKind) -> Cycle:
    """Cayley image of the N-orbit v = height: a parabola with e-centre
    (0, -1/(2 sigma_breve)) for every height
    """
    return Cycle(*cayley_cycle_linear(Cycle(0, 0, 1, 2 * height), kind))


def fix_orbit_image(p, kind: CayleyKind) -> Cycle:
    """Cayley image of the orbit of the fix group of e1 through p"""
    return Cycle(*cayley_cycle_linear(fix_orbit_cycle(p, kind.sigma), kind))
