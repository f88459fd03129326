import logging
import math
from fractions import Fraction

import pytest

from src.api.errors import DegenerateDenominator, UndefinedParabolicCentreLength
from src.clifford import Sign
from src.cycles import CycleContext, center, focus, value_at
from src.metric import (
    LengthKind,
    centre_auxiliary_cycle,
    conformal_ratio,
    critical_point,
    curve_length,
    distance_extremum_oracle,
    distance_sq,
    focal_auxiliary_cycle,
    is_perpendicular,
    length_from_centre_sq,
    length_from_focus_sq,
    moebius_image_path,
    parabolic_focus_limit,
    perpendicular_direction,
    radius_sq,
    signed_sqrt,
)
from src.moebius import SL2Elem

E, P, H = Sign.ELLIPTIC, Sign.PARABOLIC, Sign.HYPERBOLIC
A, B = (0, 1), (3, 5)


def test_distance():
    log = logging.getLogger()
    log.debug('Testing distances')

    assert distance_sq(A, B, E, E) == 25
    assert distance_sq(A, B, P, E) == 9
    assert distance_sq(A, (3, 1), E, E) == 9
    assert critical_point(A, B, E, E) == Fraction(3, 2)

    with pytest.raises(DegenerateDenominator):
        distance_sq(A, (3, 1), E, P)


def test_distance_oracle():
    log = logging.getLogger()
    log.debug('Testing the brute force extremal diameter')

    extremum = distance_extremum_oracle(A, B, E, E)
    log.debug(f'Extremum: {extremum}')
    assert not extremum.at_boundary
    assert extremum.value == pytest.approx(25, rel=1e-6)
    assert extremum.parameter == pytest.approx(1.5, abs=1e-4)

    assert distance_extremum_oracle((0, 0), (3, 4), E, E).value == pytest.approx(25, abs=1e-9)

    # the minimum falls between two grid samples of nearly equal value
    p1, p2 = (-1.9404, 1.0048), (-1.5755, 1.2750)
    extremum = distance_extremum_oracle(p1, p2, E, E)
    assert extremum.value == pytest.approx((p1[0] - p2[0]) ** 2 + (p1[1] - p2[1]) ** 2, rel=1e-9)
    assert extremum.parameter == pytest.approx((p1[0] + p2[0]) / 2, abs=1e-6)


def test_length_from_centre():
    log = logging.getLogger()
    log.debug('Testing lengths from a centre')

    assert length_from_centre_sq(A, B, E, E, E) == 25
    C = centre_auxiliary_cycle(A, B, E, E)
    assert C.quadruple == (1, 0, 1, -24)
    assert center(C, E) == A
    assert value_at(C, B, E) == 0
    assert radius_sq(C, CycleContext.make(E)) == 25

    with pytest.raises(UndefinedParabolicCentreLength):
        length_from_centre_sq(A, B, P, E, P)


def test_length_from_focus():
    log = logging.getLogger()
    log.debug('Testing lengths from a focus')

    focal = length_from_focus_sq((0, 1), (2, 3), P, P, P)
    assert focal.len_sq == -2
    assert focal.p == 1

    C = focal_auxiliary_cycle((0, 1), (2, 3), P, P, P)
    assert C.quadruple == (1, 0, 1, 2)
    assert value_at(C, (2, 3), P) == 0
    assert focus(C, P).point == (0, 1)
    assert radius_sq(C, CycleContext.make(P)) == -2


def test_length_kind():
    log = logging.getLogger()
    log.debug('Testing length kinds')

    assert str(LengthKind.make("distance")) == "distance"
    assert str(LengthKind.make("from_centre", E)) == "from_centre(-1)"
    assert str(LengthKind.make("from_focus", P, "-")) == "from_focus(0-)"
    assert LengthKind.make("from_centre", E).length_sq(A, B, E, E) == 25

    with pytest.raises(ValueError):
        LengthKind.make("from_nowhere")


def test_conformal_ratio():
    log = logging.getLogger()
    log.debug('Testing the conformal ratio of a dilation')

    assert signed_sqrt(-4) == -2.0
    g = SL2Elem(2, 0, 0, Fraction(1, 2))
    ratio = conformal_ratio(LengthKind.make("distance"), g, A, (1, 1), Fraction(1, 10), E, E)
    assert ratio == pytest.approx(4.0)


def test_parabolic_focus_limit():
    log = logging.getLogger()
    log.debug('Testing the vertical limit of parabolic focal lengths')

    g, y = SL2Elem.make(2, 1, 1, 1), (1, 1)
    assert parabolic_focus_limit(SL2Elem.make(1, 0, 0, 1), y, 3, P) == pytest.approx(1.0)
    assert parabolic_focus_limit(g, y, 3, P) == pytest.approx(0.25, rel=1e-9)

    # straight above y
    for sigma_breve in (E, P, H):
        assert parabolic_focus_limit(g, y, 1, sigma_breve) == pytest.approx(0.25, rel=1e-9)
    assert parabolic_focus_limit(g, y, 1, P, v_far=10**6) == pytest.approx(0.25, rel=1e-6)


class CubicLength:
    """l^2(A, B) = 10^4 (u' - u)^3 + (v' - v)^2"""

    def length_sq(self, A, B, sigma, sigma_breve):
        return 10**4 * (B.u - A.u) ** 3 + (B.v - A.v) ** 2


def test_perpendicular():
    log = logging.getLogger()
    log.debug('Testing perpendicular directions')

    kind = LengthKind.make("from_centre", E)
    direction = perpendicular_direction(kind, A, B, E, E)
    assert direction == (-8, 6)
    assert is_perpendicular(kind, A, B, direction, E, E)
    assert is_perpendicular(kind, A, B, (-24, 18), E, E)
    assert not is_perpendicular(kind, A, B, (1, 0), E, E)

    # Galilean: the parabolic distance is constant along verticals
    assert is_perpendicular(LengthKind.make("distance"), A, B, (0, 1), P, E)

    # stationary without an extremum
    assert not is_perpendicular(CubicLength(), (0, 0), (0, 1), (1, 0), E, E)
    assert is_perpendicular(CubicLength(), (0, 0), (1, 0), (0, 1), E, E)


def test_curve_length():
    log = logging.getLogger()
    log.debug('Testing lengths of curves')

    path = [(0, 1), (0, math.e)]
    assert curve_length(path, E) == pytest.approx(1.0)

    image = moebius_image_path(SL2Elem(2.0, 0.0, 0.0, 0.5), path, E)
    assert curve_length(image, E) == pytest.approx(1.0)
