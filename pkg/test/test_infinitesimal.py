import logging
import math

import pytest

from src.api.errors import DivisionLeadingZero, InvalidInputError, NonPositiveV, SqrtNonPositiveLead
from src.clifford import Sign
from src.cycles import Cycle, CycleContext
from src.infinitesimal import (
    Jet,
    eps_order,
    inf_orthogonality_conditions,
    infinitesimal_cycle,
    jet_ratio,
    jet_sqrt,
    point_on_inf_cycle,
)
from src.moebius import SL2Elem

PARABOLIC = CycleContext.make(Sign.PARABOLIC)


def test_jet_arithmetic():
    log = logging.getLogger()
    log.debug('Testing truncated series')

    eps = Jet.eps()
    assert (1 + eps) * (1 - eps) == Jet(1, 0, -1, 0)
    assert Jet.constant(1) / (1 + eps) == Jet(1, -1, 1, -1)
    assert jet_sqrt(Jet(4, 4, 1, 0)) == Jet(2, 1, 0, 0)
    assert Jet(1, 2) == Jet(1, 2, 3)

    assert eps_order(Jet(0, 0, 3, 1)) == 2
    assert eps_order(Jet(0, 0)) == math.inf
    assert jet_ratio(Jet(0, 0, 2, 4), Jet(0, 0, 1, 0)) == Jet(2, 4)


def test_jet_errors():
    log = logging.getLogger()
    log.debug('Testing invalid jet operations')

    with pytest.raises(DivisionLeadingZero):
        Jet(1, 0) / Jet(0, 1)
    with pytest.raises(DivisionLeadingZero):
        jet_ratio(Jet(0, 1, 0), Jet(0, 0, 1))
    with pytest.raises(SqrtNonPositiveLead):
        jet_sqrt(Jet(0, 1))
    with pytest.raises(InvalidInputError):
        Jet(0.5)


def test_infinitesimal_cycle():
    log = logging.getLogger()
    log.debug('Testing infinitesimal cycles')

    for sigma_breve in Sign.values:
        for varsigma in Sign.values:
            ctx = CycleContext.make(Sign.PARABOLIC, sigma_breve, 1, varsigma)
            ic = infinitesimal_cycle(1, 2, ctx)
            log.debug(f'{ctx}: n = {ic.n}')
            assert ic.det() == -Jet.eps(2)
            assert eps_order(ic.n) == 2

    with pytest.raises(NonPositiveV):
        infinitesimal_cycle(0, 0, PARABOLIC)
    with pytest.raises(InvalidInputError):
        infinitesimal_cycle(0, 1.5, PARABOLIC)


def test_focus():
    log = logging.getLogger()
    log.debug('Testing foci of infinitesimal cycles')

    ic = infinitesimal_cycle(0, 1, PARABOLIC)
    fu, fv = ic.focus_jets()
    assert fu.c0 == 0 and fv.c0 == 1

    image = ic.sl2_image(SL2Elem(1, 1, 0, 1))
    assert image.focus == (1, 1)
    assert image.det() == -Jet.eps(2)


def test_point_on_cycle():
    log = logging.getLogger()
    log.debug('Testing points of an infinitesimal cycle')

    ic = infinitesimal_cycle(0, 1, PARABOLIC)
    U, V = point_on_inf_cycle(ic, 1)
    log.debug(f'U = {U}, V = {V}')
    assert U == Jet.eps()
    assert V == 2
    assert ic.value_at(U, V).is_zero()

    with pytest.raises(InvalidInputError):
        point_on_inf_cycle(infinitesimal_cycle(0, 1, CycleContext.make(Sign.ELLIPTIC)), 1)


def test_orthogonality_conditions():
    log = logging.getLogger()
    log.debug('Testing orthogonality to an infinitesimal cycle')

    ic = infinitesimal_cycle(0, 1, PARABOLIC)
    conditions = inf_orthogonality_conditions(ic, Cycle(0, 0, 1, 2))
    assert conditions.ortho.c0 == 2
    assert conditions.f_residual.c0 == 0
