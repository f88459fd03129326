import itertools
import logging
from fractions import Fraction

import numpy as np
import pytest

from src.api.errors import GhostUndefined
from src.clifford import Sign, chi
from src.cycles import (
    INFINITY,
    REAL_LINE,
    UNIT_CYCLE,
    Cycle,
    CycleContext,
    center,
    focus,
    inner_re,
    reflect,
    roots,
    sl2_transform,
    value_at,
)
from src.cycles.fit import fit_cycle
from src.moebius import Ideal, Point, SL2Elem
from src.relations import (
    cycle_moebius_point,
    f_ghost_cycle,
    f_orthogonal,
    f_orthogonal_closed_form,
    f_orthogonal_form,
    f_orthogonality_trace,
    ghost_cycle,
    intersect_cycles,
    orthogonal,
    orthogonal_form,
    real_line_inversion_image,
    reflection_aux_cycle,
    second_kind_inversion,
    second_kind_via_three_inversions,
)
from src.verify import randomgen

ELLIPTIC = CycleContext.make(Sign.ELLIPTIC)
VERTICAL = Cycle(0, 1, 0, 0)


def test_orthogonality():
    log = logging.getLogger()
    log.debug('Testing orthogonality')

    assert orthogonal(UNIT_CYCLE, VERTICAL, ELLIPTIC)
    assert orthogonal(UNIT_CYCLE, REAL_LINE, ELLIPTIC)
    assert not orthogonal(UNIT_CYCLE, Cycle(1, 0, 0, -4), ELLIPTIC)
    assert inner_re(UNIT_CYCLE, Cycle(1, 0, 0, -4), ELLIPTIC) == -5

    g = SL2Elem.make(2, 1, 1, 1)
    assert orthogonal(sl2_transform(UNIT_CYCLE, g, ELLIPTIC), sl2_transform(VERTICAL, g, ELLIPTIC), ELLIPTIC)


def test_f_orthogonality():
    log = logging.getLogger()
    log.debug('Testing f-orthogonality')

    C1, C2 = Cycle(1, 1, 2, 0), Cycle(1, 0, 1, -1)
    for ctx in (ELLIPTIC, CycleContext.make(Sign.HYPERBOLIC, s=-1), CycleContext.make(Sign.ELLIPTIC, Sign.HYPERBOLIC)):
        trace = f_orthogonality_trace(C1, C2, ctx)
        log.debug(f'{ctx}: trace {trace}')
        assert trace == 2 * ctx.sigma_breve * ctx.s * ctx.s * f_orthogonal_closed_form(C1, C2, ctx)

    assert f_orthogonal_closed_form(C1, C2, ELLIPTIC) == -5

    # not symmetric
    A, B = Cycle(1, 0, 1, -1), Cycle(1, 0, 0, 1)
    assert f_orthogonal(A, B, ELLIPTIC)
    assert not f_orthogonal(B, A, ELLIPTIC)


def test_ghost():
    log = logging.getLogger()
    log.debug('Testing ghost cycles')

    C = Cycle(1, 2, 3, 4)
    assert ghost_cycle(C, ELLIPTIC).quadruple == (1, 2, 3, 4)
    assert ghost_cycle(C, CycleContext.make(Sign.ELLIPTIC, Sign.HYPERBOLIC)).quadruple == (1, 2, -3, 4)

    with pytest.raises(GhostUndefined):
        ghost_cycle(Cycle(0, 1, 1, 0), ELLIPTIC)
    with pytest.raises(GhostUndefined):
        ghost_cycle(C, CycleContext.make(Sign.ELLIPTIC, Sign.PARABOLIC))

    circle = Cycle(1, 0, 1, -1)
    ghost = f_ghost_cycle(circle, ELLIPTIC)
    assert ghost == UNIT_CYCLE
    assert roots(ghost) == roots(circle) == [-1, 1]


def test_intersect():
    log = logging.getLogger()
    log.debug('Testing intersections')

    points = intersect_cycles(UNIT_CYCLE, VERTICAL, Sign.ELLIPTIC)
    log.debug(f'Intersection points: {points}')
    assert len(points) == 2
    assert points[0].isclose(Point(0.0, -1.0))
    assert points[1].isclose(Point(0.0, 1.0))

    assert intersect_cycles(UNIT_CYCLE, Cycle(1, 0, 0, -4), Sign.ELLIPTIC) == []


def test_inversion():
    log = logging.getLogger()
    log.debug('Testing inversions in cycles')

    two = Fraction(2)
    assert cycle_moebius_point(UNIT_CYCLE, Point(two, Fraction(0)), Sign.ELLIPTIC) == (Fraction(1, 2), 0)
    assert cycle_moebius_point(UNIT_CYCLE, Point(Fraction(0), two), Sign.ELLIPTIC) == (0, Fraction(1, 2))

    origin = cycle_moebius_point(UNIT_CYCLE, Point(Fraction(0), Fraction(0)), Sign.ELLIPTIC)
    assert isinstance(origin, Ideal)
    assert origin.cycle == INFINITY
    assert cycle_moebius_point(UNIT_CYCLE, origin, Sign.ELLIPTIC) == (0, 0)

    p = Point(Fraction(1), Fraction(0))
    assert second_kind_inversion(1, 0, 1, p) == (1, 4)
    assert second_kind_via_three_inversions(Fraction(1), Fraction(0), Fraction(1), p) == (1, 4)
    p = Point(Fraction(3), Fraction(-2))
    assert second_kind_via_three_inversions(Fraction(2), Fraction(1), Fraction(-1), p) == second_kind_inversion(2, 1, -1, p)


def test_inversion_hyperbolic():
    log = logging.getLogger()
    log.debug('Testing inversions in a hyperbola')

    # u^2 - v^2 - 2v = 0, centre (0, -1)
    C = Cycle(1, 0, 1, 0)
    for p in [(0, -2), (0, 0), (Fraction(3, 4), Fraction(1, 4))]:
        assert value_at(C, p, Sign.HYPERBOLIC) == 0
        assert cycle_moebius_point(C, Point(*map(Fraction, p)), Sign.HYPERBOLIC) == p

    p = Point(Fraction(0), Fraction(2))
    q = cycle_moebius_point(C, p, Sign.HYPERBOLIC)
    assert q == (0, Fraction(-2, 3))
    assert cycle_moebius_point(C, q, Sign.HYPERBOLIC) == p

    # through p, orthogonal to C
    D = Cycle(3, 1, -2, 4)
    assert orthogonal(C, D, CycleContext.make(Sign.HYPERBOLIC))
    assert value_at(D, p, Sign.HYPERBOLIC) == 0
    assert value_at(D, q, Sign.HYPERBOLIC) == 0

    # the light cone of the centre goes to infinity
    image = cycle_moebius_point(C, Point(Fraction(1), Fraction(0)), Sign.HYPERBOLIC)
    assert isinstance(image, Ideal)
    assert image.direction == (1, 1)
    assert cycle_moebius_point(C, image, Sign.HYPERBOLIC) == (0, -1)


def test_inversion_parabolic():
    log = logging.getLogger()
    log.debug('Testing inversions in a parabola')

    # u^2 - 2v - 1 = 0: the fixed points are the vertical lines through the roots
    C = Cycle(1, 0, 1, -1)
    parabolic = CycleContext.make(Sign.PARABOLIC)
    assert cycle_moebius_point(C, Point(Fraction(1), Fraction(5)), Sign.PARABOLIC) == (1, 5)
    assert cycle_moebius_point(C, Point(Fraction(-1), Fraction(-2)), Sign.PARABOLIC) == (-1, -2)
    assert cycle_moebius_point(C, Point(Fraction(3), Fraction(4)), Sign.PARABOLIC) == (Fraction(1, 3), Fraction(4, 9))

    p = Point(Fraction(2), Fraction(1))
    q = cycle_moebius_point(C, p, Sign.PARABOLIC)
    assert q == (Fraction(1, 2), Fraction(1, 4))
    for pin in ([1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 1]):
        D = fit_cycle([p], Sign.PARABOLIC, [orthogonal_form(C, parabolic), pin])
        log.debug(f'{pin}: {D}')
        assert orthogonal(C, D, parabolic)
        assert value_at(D, q, Sign.PARABOLIC) == 0

    # the vertical through the centre goes to infinity
    assert isinstance(cycle_moebius_point(C, Point(Fraction(0), Fraction(7)), Sign.PARABOLIC), Ideal)


def test_reflection_aux_cycle():
    log = logging.getLogger()
    log.debug('Testing the cycle swapping C with the real line')

    aux = reflection_aux_cycle(UNIT_CYCLE, ELLIPTIC)
    assert aux.quadruple == (1, 0, 1, -1)
    assert reflect(aux, REAL_LINE, ELLIPTIC) == UNIT_CYCLE

    rng = np.random.default_rng(11)
    for sigma in (Sign.ELLIPTIC, Sign.HYPERBOLIC):
        ctx = CycleContext.make(sigma)
        checked = 0
        while checked < 20:
            k, l, n = randomgen.nonzero_rational(rng), randomgen.rational(rng), randomgen.rational(rng)
            t = randomgen.positive_rational(rng)
            if n + t == 0:
                continue
            # det(C) = -sigma t^2
            C = Cycle(k, l, n, (l * l - sigma * n * n + sigma * t * t) / k)
            aux = reflection_aux_cycle(C, ctx)
            assert aux.quadruple == (C.k, C.l, C.n + t, C.m)
            assert reflect(aux, REAL_LINE, ctx) == C
            assert reflect(aux, C, ctx) == REAL_LINE
            assert value_at(C, center(aux, sigma), sigma) == 0
            checked += 1


def test_f_ghost():
    log = logging.getLogger()
    log.debug('Testing f-ghost cycles')

    C = Cycle(1, 1, 2, -3)
    for sigma, sigma_breve in itertools.product(Sign.values, Sign.values):
        ctx = CycleContext.make(sigma, sigma_breve)
        ghost = f_ghost_cycle(C, ctx)
        log.debug(f'{ctx}: {ghost}')
        assert roots(ghost) == roots(C) == [-1, 3]
        assert center(ghost, chi(sigma)) == focus(C, -sigma_breve).point

    # f-orthogonality to C is orthogonality to the ghost, so both give one inversion
    cases = [
        (Sign.ELLIPTIC, Cycle(1, 0, 1, -1), Point(Fraction(1), Fraction(1)), (Fraction(1, 2), Fraction(1, 2))),
        (Sign.HYPERBOLIC, Cycle(1, 0, 1, -3), Point(Fraction(1), Fraction(0)), (Fraction(1, 3), Fraction(-4, 3))),
    ]
    for sigma, C, p, expected in cases:
        ctx = CycleContext.make(sigma)
        ghost = f_ghost_cycle(C, ctx)
        q = cycle_moebius_point(ghost, p, sigma)
        assert q == expected
        D = fit_cycle([p], sigma, [f_orthogonal_form(C, ctx), [0, 1, 0, 0]])
        assert f_orthogonal(C, D, ctx)
        assert orthogonal(ghost, D, ctx)
        assert value_at(D, q, sigma) == 0


def test_real_line_image():
    log = logging.getLogger()
    log.debug('Testing the image of the real line')

    A = Cycle(1, 0, 1, 0)
    image = real_line_inversion_image(A, ELLIPTIC, Sign.HYPERBOLIC, Sign.HYPERBOLIC)
    assert image.quadruple == (-2, 0, -1, 0)
    assert not image.is_real_line
    assert Cycle(*image.quadruple) == reflect(A, REAL_LINE, ELLIPTIC)

    image = real_line_inversion_image(UNIT_CYCLE, ELLIPTIC, Sign.HYPERBOLIC, Sign.HYPERBOLIC)
    assert Cycle(*image.quadruple) == REAL_LINE
    assert image.is_real_line
