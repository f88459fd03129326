import logging
from fractions import Fraction

import pytest

from src.api.constants import NORM
from src.api.errors import FocusUndefined, InsufficientPoints, NotNormalizable, ZeroCycle
from src.clifford import Sign
from src.cycles import (
    ALL_REALS,
    REAL_LINE,
    UNIT_CYCLE,
    Cycle,
    CycleContext,
    all_contexts,
    center,
    det_cycle,
    focus,
    normalize,
    reflect,
    roots,
    sl2_transform,
    value_at,
    zero_radius_cycle,
)
from src.cycles.compact import compactification_predicates
from src.cycles.fit import fit_cycle
from src.moebius import Ideal, Point, SL2Elem
from src.moebius.action import moebius_apply


def test_projective_equality():
    log = logging.getLogger()
    log.debug('Testing cycles are projective')

    assert Cycle(2, 0, 0, -2) == UNIT_CYCLE
    assert Cycle(1.0, 0.0, 0.0, -1.0) == UNIT_CYCLE
    assert Cycle(1, 0, 0, 1) != UNIT_CYCLE
    assert Cycle(-2, 4, 0, 6).canonical().quadruple == (1, -2, 0, -3)

    with pytest.raises(ZeroCycle):
        Cycle(0, 0, 0, 0)


def test_context():
    log = logging.getLogger()
    log.debug('Testing signature contexts')

    ctx = CycleContext.make(Sign.HYPERBOLIC)
    assert ctx.sigma_breve == ctx.varsigma == Sign.HYPERBOLIC
    assert ctx.with_(s=0).s == Sign.PARABOLIC
    assert ctx.as_dict() == {"sigma": 1, "sigma_breve": 1, "s": 1, "varsigma": 1}
    assert len(list(all_contexts())) == 27


def test_zero_radius():
    log = logging.getLogger()
    log.debug('Testing zero radius cycles')

    C = zero_radius_cycle((1, 2), Sign.ELLIPTIC)
    assert C.quadruple == (1, 1, 2, 5)
    for s in (Sign.HYPERBOLIC, Sign.ELLIPTIC):
        assert det_cycle(C, CycleContext.make(Sign.ELLIPTIC, s=s)) == 0


def test_sl2_transform():
    log = logging.getLogger()
    log.debug('Testing the action on cycles')

    shift = SL2Elem(1, 1, 0, 1)
    assert sl2_transform(UNIT_CYCLE, shift, CycleContext.make(Sign.ELLIPTIC)) == Cycle(1, 1, 0, 0)

    g = SL2Elem.make(2, 1, 1, 1)
    for sigma in Sign.values:
        ctx = CycleContext.make(sigma)
        image = sl2_transform(UNIT_CYCLE, g, ctx)
        q = moebius_apply(g, Point(Fraction(1), Fraction(0)), sigma)
        log.debug(f'sigma={sigma}: {image} through {q}')
        assert value_at(image, q, sigma) == 0

    ctx = CycleContext.make(Sign.ELLIPTIC)
    q = moebius_apply(g, Point(Fraction(0), Fraction(1)), Sign.ELLIPTIC)
    assert value_at(sl2_transform(UNIT_CYCLE, g, ctx), q, Sign.ELLIPTIC) == 0


def test_center_and_focus():
    log = logging.getLogger()
    log.debug('Testing centres and foci')

    C = Cycle(1, 1, 2, 0)
    assert center(C, Sign.ELLIPTIC) == (1, 2)
    assert center(C, Sign.HYPERBOLIC) == (1, -2)
    assert isinstance(center(Cycle(0, 1, 0, 0), Sign.ELLIPTIC), Ideal)

    f = focus(C, Sign.ELLIPTIC)
    assert f.point == (1, Fraction(-5, 4))
    assert f.focal_length == 1

    with pytest.raises(FocusUndefined):
        focus(UNIT_CYCLE, Sign.ELLIPTIC)


def test_normalize():
    log = logging.getLogger()
    log.debug('Testing normalizations')

    ctx = CycleContext.make(Sign.ELLIPTIC)
    assert normalize(Cycle(2, 2, 0, -2), NORM.K, ctx).quadruple == (1, 1, 0, -1)
    assert normalize(Cycle(2, 0, 0, -2), NORM.DET, ctx).quadruple == (1, 0, 0, -1)
    assert normalize(Cycle(-2, 4, 0, 6), "canonical", ctx).quadruple == (1, -2, 0, -3)

    with pytest.raises(NotNormalizable):
        normalize(REAL_LINE, NORM.K, ctx)
    with pytest.raises(NotNormalizable):
        normalize(Cycle(1, 0, 0, 1), NORM.DET, ctx)


def test_reflect():
    log = logging.getLogger()
    log.debug('Testing reflections in cycles')

    ctx = CycleContext.make(Sign.ELLIPTIC)
    assert reflect(UNIT_CYCLE, Cycle(1, 0, 0, -4), ctx) == Cycle(4, 0, 0, -1)
    assert reflect(UNIT_CYCLE, UNIT_CYCLE, ctx) == UNIT_CYCLE
    # s = 0 uses the closed form
    assert reflect(UNIT_CYCLE, Cycle(1, 0, 0, -4), ctx.with_(s=0)) == Cycle(4, 0, 0, -1)


def test_roots():
    log = logging.getLogger()
    log.debug('Testing real roots')

    assert roots(UNIT_CYCLE) == [-1, 1]
    assert roots(REAL_LINE) is ALL_REALS
    assert roots(Cycle(1, 0, 0, 1)) == []
    assert roots(Cycle(0, 1, 5, 4)) == [2]


def test_fit():
    log = logging.getLogger()
    log.debug('Testing cycles through points')

    points = [(1, 0), (0, 1), (-1, 0)]
    assert fit_cycle(points, Sign.ELLIPTIC) == UNIT_CYCLE

    C = fit_cycle([(0.6, 0.8), (-0.8, 0.6), (0.0, -1.0)], Sign.ELLIPTIC)
    assert C.isclose(UNIT_CYCLE)

    with pytest.raises(InsufficientPoints):
        fit_cycle(points[:2], Sign.ELLIPTIC)


def test_compactification():
    log = logging.getLogger()
    log.debug('Testing the points sent to infinity')

    on_cone = compactification_predicates((1, 1), Sign.HYPERBOLIC)
    assert on_cone.agree and on_cone.on_zero_cycle

    off_cone = compactification_predicates((1, 2), Sign.HYPERBOLIC)
    assert off_cone.agree and not off_cone.on_zero_cycle
