import logging
from fractions import Fraction
from xml.etree import ElementTree

import pytest

from src.api.errors import EmptyLocus, InvalidInputError, UnknownFigure
from src.clifford import Sign
from src.cycles import UNIT_CYCLE, Cycle
from src.figures import Scene, Viewport, build_figure, figure_names, render_figure, residual, sample_cycle
from src.moebius import Point
from src.outfmt import SVGEmitter

SVG_TAG = "{http://www.w3.org/2000/svg}svg"


def test_sample_circle():
    log = logging.getLogger()
    log.debug('Testing circles are walked by angle')

    polylines = sample_cycle(UNIT_CYCLE, Sign.ELLIPTIC, 8)
    assert len(polylines) == 1
    line = polylines[0]
    assert line.closed
    half = 0.5 ** 0.5
    expected = [Point(1.0, 0.0), Point(half, half), Point(0.0, 1.0), Point(-half, half), Point(-1.0, 0.0)]
    assert len(line.points) == 8
    assert all(p.isclose(q) for p, q in zip(line.points, expected))

    with pytest.raises(EmptyLocus):
        sample_cycle(Cycle(1, 0, 0, 1), Sign.ELLIPTIC, 16)
    with pytest.raises(InvalidInputError):
        sample_cycle(UNIT_CYCLE, Sign.ELLIPTIC, 4)


def test_sample_conics():
    log = logging.getLogger()
    log.debug('Testing parabolas and hyperbolas are sampled by branches')

    parabola = sample_cycle(Cycle(1, 0, Fraction(1, 2), 0), Sign.PARABOLIC, 64)
    assert len(parabola) == 1
    assert all(abs(p.v - p.u * p.u) < 1e-9 for p in parabola[0].points)

    hyperbola = sample_cycle(Cycle(1, 0, 1, 0), Sign.HYPERBOLIC, 64)
    assert len(hyperbola) == 2
    for line in hyperbola:
        assert max(residual(line.cycle, p, Sign.HYPERBOLIC) for p in line.points) < 1e-9

    lines = sample_cycle(Cycle(0, 1, 0, 2), Sign.PARABOLIC, 16)
    assert [line.points[0].u for line in lines] == [1.0]


def test_scene():
    log = logging.getLogger()
    log.debug('Testing scenes skip cycles they cannot draw')

    scene = Scene("test", "test")
    scene.add_cycle(UNIT_CYCLE, samples=16)
    scene.add_cycle(Cycle(1, 0, 0, 1), samples=16)
    scene.add_point((0, 0), "o")
    assert len(scene.polylines) == 1
    assert len(scene.elements) == 2
    scene.validate()

    with pytest.raises(InvalidInputError):
        Viewport.make(1, 1, 0, 1)


def test_catalog():
    log = logging.getLogger()
    log.debug('Testing every figure builds and validates')

    names = figure_names()
    assert len(names) == 10
    assert "k-orbits" in names and "cayley-disks" in names
    for name in names:
        figure = build_figure(name)
        log.debug(f'{name}: {len(figure.panels)} panel(s)')
        assert figure.panels
        figure.validate()

    with pytest.raises(UnknownFigure):
        build_figure("no-such-figure")


def test_render(tmp_path):
    log = logging.getLogger()
    log.debug('Testing SVG output')

    out = tmp_path / "k-orbits.svg"
    figure = render_figure("k-orbits", str(out))
    data = out.read_bytes()
    assert data.startswith(b"<?xml")
    root = ElementTree.fromstring(data)
    assert root.tag == SVG_TAG
    assert root.find("{http://www.w3.org/2000/svg}title").text == figure.name

    # deterministic output
    assert SVGEmitter().render(build_figure("k-orbits")) == data
