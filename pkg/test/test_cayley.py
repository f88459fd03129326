import logging
from fractions import Fraction

import pytest

from src.api.constants import FAMILY
from src.api.errors import ParabolicNotSimilarity
from src.cayley import (
    CayleyKind,
    all_kinds,
    cayley_cycle_report,
    cayley_point,
    cayley_sl2,
    in_unit_disk,
    unit_cycle,
)
from src.clifford import Sign
from src.cycles import Cycle
from src.moebius import Ideal, Point, rational_subgroup_element

HALF = Fraction(1, 2)
KINDS = {kind.name: kind for kind in all_kinds()}


def test_kinds():
    log = logging.getLogger()
    log.debug('Testing the Cayley transform flavours')

    assert [kind.name for kind in all_kinds()] == ["E", "Pe", "Pp", "Ph", "H"]
    assert CayleyKind.make(Sign.ELLIPTIC, Sign.HYPERBOLIC) == KINDS["E"]
    assert str(KINDS["Ph"]) == "Ph"


def test_points():
    log = logging.getLogger()
    log.debug('Testing Cayley images of points')

    E = KINDS["E"]
    assert cayley_point(E, (0, 1)) == (0, 0)
    assert cayley_point(E, (0, 0)) == (0, -1)
    assert isinstance(cayley_point(E, (0, -1)), Ideal)

    assert cayley_point(KINDS["Pp"], (2, 3)) == (2, 2)
    assert cayley_point(KINDS["Pe"], (1, 0)) == (1, 0)


def test_unit_cycles():
    log = logging.getLogger()
    log.debug('Testing images of the real line')

    assert unit_cycle(KINDS["E"]) == Cycle(1, 0, 0, -1)
    assert unit_cycle(KINDS["H"]) == Cycle(1, 0, 0, 1)
    assert unit_cycle(KINDS["Pe"]) == Cycle(-1, 0, -HALF, 1)
    assert unit_cycle(KINDS["Pp"]) == Cycle(0, 0, -HALF, 1)
    assert unit_cycle(KINDS["Ph"]) == Cycle(1, 0, -HALF, 1)


def test_unit_disk():
    log = logging.getLogger()
    log.debug('Testing the unit disk')

    E = KINDS["E"]
    assert in_unit_disk(E, (0, 0))
    assert not in_unit_disk(E, (0, 2))
    assert not in_unit_disk(E, (1, 0))


def test_similarities():
    log = logging.getLogger()
    log.debug('Testing transformed SL(2,R) elements')

    g = rational_subgroup_element(FAMILY.K, HALF)
    assert cayley_sl2(g, KINDS["E"]).is_diagonal()

    with pytest.raises(ParabolicNotSimilarity):
        cayley_sl2(g, KINDS["Pe"])


def test_parabolic_cycles():
    log = logging.getLogger()
    log.debug('Testing parabolic cycle images and the sign convention note')

    C = Cycle(1, HALF, 1, -1)
    assert cayley_cycle_report(C, KINDS["Pe"]).note is None

    report = cayley_cycle_report(C, KINDS["Pp"])
    log.debug(f'Pp image {report.cycle}: {report.note}')
    assert report.note is not None
    assert report.cycle == Cycle(1, HALF, 1, -3)
    assert report.note.as_dict()["sigma_breve"] == 0
    for q in (Point(Fraction(0), Fraction(-3, 2)), Point(Fraction(1), Fraction(-3, 2))):
        assert report.cycle.value_at(q, Sign.PARABOLIC) == 0
