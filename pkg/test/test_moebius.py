import logging
import math
from fractions import Fraction

import pytest

from src.api.constants import FAMILY
from src.api.errors import DegenerateCurvature, InvalidInputError, NotFactorable, NotSL2
from src.clifford import Sign
from src.cycles import value_at
from src.moebius import Ideal, Point, SL2Elem, rational_subgroup_element
from src.moebius.action import moebius_apply
from src.moebius.fix import factor_via_fix_subgroup
from src.moebius.iwasawa import iwasawa
from src.moebius.orbits import fix_orbit_cycle, k_orbit_cycle, vector_field

HALF = Fraction(1, 2)


def test_make():
    log = logging.getLogger()
    log.debug('Testing SL(2,R) elements')

    g = SL2Elem.make(2, 1, 1, 1)
    assert g * g.inverse() == (1, 0, 0, 1)
    with pytest.raises(NotSL2):
        SL2Elem.make(1, 1, 1, 1)


def test_simple_actions():
    log = logging.getLogger()
    log.debug('Testing shifts, dilations and the inversion')

    p = Point(HALF, Fraction(3))
    for sigma in Sign.values:
        assert moebius_apply(SL2Elem(1, 1, 0, 1), p, sigma) == Point(Fraction(3, 2), Fraction(3))
        assert moebius_apply(SL2Elem(2, 0, 0, HALF), p, sigma) == Point(Fraction(2), Fraction(12))

    J = SL2Elem(0, 1, -1, 0)
    assert moebius_apply(J, Point(Fraction(0), Fraction(1)), Sign.ELLIPTIC) == Point(0, 1)
    assert isinstance(moebius_apply(J, Point(Fraction(0), Fraction(0)), Sign.ELLIPTIC), Ideal)


def test_group_action():
    log = logging.getLogger()
    log.debug('Testing the action is a group action')

    g, h = SL2Elem.make(2, 1, 1, 1), SL2Elem.make(1, 1, 0, 1)
    p = Point(HALF, Fraction(3))
    for sigma in Sign.values:
        composed = moebius_apply(g * h, p, sigma)
        log.debug(f'sigma={sigma}: {composed}')
        assert composed == moebius_apply(g, moebius_apply(h, p, sigma), sigma)
        assert moebius_apply(g.inverse(), moebius_apply(g, p, sigma), sigma) == p


def test_iwasawa():
    log = logging.getLogger()
    log.debug('Testing the Iwasawa decomposition')

    for g in (SL2Elem(2, 1, 1, 1), SL2Elem(0, 1, -1, 0), rational_subgroup_element(FAMILY.K, HALF)):
        factors = iwasawa(g)
        log.debug(f'{g}: {factors}')
        assert factors.alpha > 0
        assert factors.recompose().isclose(g.to_float())

    factors = iwasawa(SL2Elem(-0.5, 0.0, 0.0, -2.0))
    assert factors.phi == math.pi
    assert factors.recompose().isclose(SL2Elem(-0.5, 0.0, 0.0, -2.0))


def test_fix_factorization():
    log = logging.getLogger()
    log.debug('Testing the factorization through the fix group')

    g = SL2Elem(2, 1, 1, 1)
    factors = factor_via_fix_subgroup(g, Sign.ELLIPTIC)
    assert factors.h.c == 0
    assert factors.recompose().isclose(g.to_float())

    with pytest.raises(NotFactorable):
        factor_via_fix_subgroup(g, Sign.HYPERBOLIC)


def test_rational_subgroups():
    log = logging.getLogger()
    log.debug('Testing exact subgroup elements')

    assert rational_subgroup_element(FAMILY.K, HALF) == (Fraction(3, 5), Fraction(4, 5), Fraction(-4, 5), Fraction(3, 5))
    assert rational_subgroup_element(FAMILY.A_h_fix, HALF) == (Fraction(5, 3), Fraction(4, 3), Fraction(4, 3), Fraction(5, 3))
    assert rational_subgroup_element(FAMILY.A, Fraction(2)) == (HALF, 0, 0, 2)
    assert rational_subgroup_element(FAMILY.FIX, Fraction(3), Sign.PARABOLIC) == (1, 0, -3, 1)

    with pytest.raises(InvalidInputError):
        rational_subgroup_element(FAMILY.A, Fraction(0))
    with pytest.raises(InvalidInputError):
        rational_subgroup_element(FAMILY.A_h_fix, Fraction(1))


def test_orbits():
    log = logging.getLogger()
    log.debug('Testing K and fix group orbits')

    orbit = k_orbit_cycle(2, Sign.ELLIPTIC)
    assert orbit.cycle.quadruple == (1, 0, Fraction(5, 4), 1)
    assert value_at(orbit.cycle, (0, 2), Sign.ELLIPTIC) == 0
    assert orbit.curvature == Fraction(-4, 3)

    with pytest.raises(DegenerateCurvature):
        k_orbit_cycle(1, Sign.ELLIPTIC).curvature

    C = fix_orbit_cycle((0, 1), Sign.ELLIPTIC)
    assert C.quadruple == (1, 0, 1, 1)
    assert value_at(C, (0, 1), Sign.ELLIPTIC) == 0

    assert vector_field(FAMILY.N, (1, 2), Sign.HYPERBOLIC) == (1, 0)
    assert vector_field(FAMILY.A, (1, 2), Sign.HYPERBOLIC) == (2, 4)
