#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import List, NamedTuple, Optional, Tuple

from src.api import errmsg
from src.api.config import OPTIONS
from src.api.errors import EmptyLocus, GeometryError, InternalError, InvalidInputError
from src.clifford.sign import Sign
from src.cycles.cycle import Cycle
from src.moebius.points import Point

__all__ = ["Style", "Viewport", "Polyline", "Marker", "Scene", "Figure", "DEFAULT_VIEWPORT", "DASHED", "BOLD", "RENDER_TOL"]

# Largest normalized cycle equation residual of a drawn vertex
RENDER_TOL = 1e-9


class Style(NamedTuple):
    stroke: str = "black"
    width: float = 1.0
    dashed: bool = False


DASHED = Style(stroke="#555555", dashed=True)
BOLD = Style(width=2.0)


class Viewport(NamedTuple):
    umin: float
    umax: float
    vmin: float
    vmax: float

    @classmethod
    def make(cls, umin, umax, vmin, vmax) -> "Viewport":
        if umin >= umax or vmin >= vmax:
            raise InvalidInputError(f"Degenerate viewport [{umin}, {umax}] x [{vmin}, {vmax}]")
        return cls(float(umin), float(umax), float(vmin), float(vmax))

    @property
    def width(self) -> float:
        return self.umax - self.umin

    @property
    def height(self) -> float:
        return self.vmax - self.vmin


DEFAULT_VIEWPORT = Viewport(-3.0, 3.0, -3.0, 3.0)


class Polyline(NamedTuple):
    """Vertices of a curve; vertices of a sampled cycle lie on it"""

    points: Tuple[Point, ...]
    closed: bool = False
    style: Style = Style()
    cycle: Optional[Cycle] = None
    sigma: Optional[Sign] = None


class Marker(NamedTuple):
    point: Point
    label: str = ""
    style: Style = Style()


class Scene:
    """One panel of a figure: a viewport and the elements drawn in it"""

    def __init__(self, title: str, figure: str = "", viewport: Viewport = DEFAULT_VIEWPORT, sigma: Sign = Sign.ELLIPTIC):
        self.title = title
        self.figure = figure
        self.viewport = viewport
        self.sigma = Sign.of(sigma)
        self.elements: List = []

    def add_cycle(self, C: Cycle, style: Style = Style(), samples: Optional[int] = None) -> None:
        """Samples C in the plane of the scene. Cycles that cannot be drawn
        are skipped with a warning.
        """
        from .sampling import sample_cycle

        try:
            polylines = sample_cycle(C, self.sigma, samples or OPTIONS.samples, self.viewport)
        except EmptyLocus as e:
            errmsg.warning_element_skipped(self.figure, str(e))
            return

        self.elements.extend(p._replace(style=style) for p in polylines)

    def add_geometry(self, make_cycle, style: Style = Style()) -> None:
        """Adds the cycle built by make_cycle(), skipping undefined ones"""
        try:
            C = make_cycle()
        except GeometryError as e:
            errmsg.warning_element_skipped(self.figure, str(e))
            return
        self.add_cycle(C, style)

    def add_polyline(self, points, style: Style = Style(), closed: bool = False, cycle: Optional[Cycle] = None) -> None:
        """A curve given by its vertices; when cycle is given they are
        checked against it by validate()
        """
        points = tuple(Point(float(u), float(v)) for u, v in points)
        self.elements.append(Polyline(points, closed, style, cycle, self.sigma if cycle is not None else None))

    def add_point(self, p, label: str = "", style: Style = Style()) -> None:
        u, v = p
        self.elements.append(Marker(Point(float(u), float(v)), label, style))

    @property
    def polylines(self) -> List[Polyline]:
        return [e for e in self.elements if isinstance(e, Polyline)]

    def validate(self, tol: float = RENDER_TOL) -> None:
        """Every vertex of a sampled cycle satisfies its equation"""
        from .sampling import residual

        for line in self.polylines:
            if line.cycle is None:
                continue
            worst = max(residual(line.cycle, p, line.sigma) for p in line.points)
            if worst > tol:
                raise InternalError(f"Vertex off {line.cycle} by {worst} in panel '{self.title}'")


class Figure(NamedTuple):
    name: str
    caption: str
    panels: List[Scene]
    columns: int = 3

    def validate(self) -> None:
        for panel in self.panels:
            panel.validate()
