#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# The named figures. Every builder is deterministic: fixed parameters,
# fixed sampling, no randomness.
# ----------------------------------------------------------------------

from fractions import Fraction
from typing import Callable, Dict, List

import numpy as np

from src.api.constants import FAMILY
from src.api.debug import __DEBUG__
from src.api.errors import UnknownFigure
from src.cayley import P_FOCUS, CayleyKind, all_kinds, cayley_cycle_linear, cayley_point, fix_orbit_image
from src.cayley import n_orbit_image, unit_cycle
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import UNIT_CYCLE, Cycle, zero_radius_cycle
from src.cycles.fit import fit_cycle
from src.cycles.fsc import center, focus, reflect
from src.infinitesimal import infinitesimal_cycle
from src.moebius.action import moebius_apply
from src.moebius.orbits import k_orbit_cycle
from src.moebius.points import Point
from src.moebius.sl2 import subgroup_element
from src.relations import f_ghost_cycle, f_orthogonal_form, ghost_cycle, orthogonal_form
from .scene import BOLD, DASHED, Figure, Scene, Style

__all__ = ["FIGURES", "figure_names", "build_figure", "render_figure"]

FIGURES: Dict[str, Callable[[], Figure]] = {}

SIGNS = (Sign.ELLIPTIC, Sign.PARABOLIC, Sign.HYPERBOLIC)
PLANE = {Sign.ELLIPTIC: "elliptic", Sign.PARABOLIC: "parabolic", Sign.HYPERBOLIC: "hyperbolic"}
LETTER = {Sign.ELLIPTIC: "e", Sign.PARABOLIC: "p", Sign.HYPERBOLIC: "h"}

GREY = Style(stroke="#999999", width=0.5, dashed=True)

# The cycle the orthogonality grids are drawn against
GRID_CYCLE = Cycle(1, 0, Fraction(1, 2), -1)
GRID_FEET = tuple(Fraction(x) for x in (-2, -1, 0, 1, 2))


def register_figure(name: str) -> Callable:
    def decorator(func: Callable[[], Figure]) -> Callable[[], Figure]:
        FIGURES[name] = func
        return func

    return decorator


def figure_names() -> List[str]:
    return sorted(FIGURES)


def build_figure(name: str) -> Figure:
    if name not in FIGURES:
        raise UnknownFigure(name, figure_names())
    __DEBUG__(f"building figure {name}", 1)
    return FIGURES[name]()


def render_figure(name: str, out: str) -> Figure:
    """Builds, checks and writes the named figure as SVG"""
    from src.outfmt import SVGEmitter

    result = build_figure(name)
    result.validate()
    SVGEmitter().emit(out, result)
    return result


@register_figure("subgroup-orbits-AN")
def subgroup_orbits_an() -> Figure:
    """Orbits of the dilations A (rays) and shifts N (horizontal lines)"""
    name = "subgroup-orbits-AN"
    starts = [Point(float(u), 1.0) for u in (-2, -1, 0, 1, 2)]
    panels = []

    for family, params, orbit in (
        (FAMILY.A, np.linspace(-1.5, 1.5, 97), lambda p: Cycle(0, p.v, -p.u, 0)),
        (FAMILY.N, np.linspace(-6.0, 6.0, 97), lambda p: Cycle(0, 0, 1, 2 * p.v)),
    ):
        scene = Scene(f"subgroup {family.value}", name)
        for start in starts:
            points = [moebius_apply(subgroup_element(family, t), start, Sign.ELLIPTIC) for t in params]
            scene.add_polyline(points, cycle=orbit(start))
            scene.add_point(start)
        panels.append(scene)

    return Figure(name, "Orbits of the subgroups A and N", panels, columns=2)


@register_figure("k-orbits")
def k_orbits() -> Figure:
    """K-orbits through (0, t): circles, parabolas and hyperbolas"""
    name = "k-orbits"
    panels = []
    for sigma in SIGNS:
        scene = Scene(PLANE[sigma], name, sigma=sigma)
        for t in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(3, 2), Fraction(2), Fraction(3)):
            scene.add_geometry(lambda t=t: k_orbit_cycle(t, sigma).cycle)
        scene.add_geometry(lambda: k_orbit_cycle(1, sigma).cycle, BOLD)
        scene.add_point((0, 1), "i")
        panels.append(scene)

    return Figure(name, "K-orbits are circles, parabolas and hyperbolas", panels)


@register_figure("eph-cycle")
def eph_cycle() -> Figure:
    """One cycle in the three planes with its e/p/h centres and foci"""
    name = "eph-cycle"
    C = Cycle(1, 0, 1, Fraction(-1, 2))
    panels = []
    for sigma in SIGNS:
        scene = Scene(PLANE[sigma], name, sigma=sigma)
        scene.add_cycle(C, BOLD)
        for varsigma in SIGNS:
            scene.add_point(center(C, varsigma), "c" + LETTER[varsigma])
            scene.add_point(focus(C, varsigma).point, "f" + LETTER[varsigma])
        panels.append(scene)

    return Figure(name, "The same cycle with its centres and foci", panels)


@register_figure("zero-radius")
def zero_radius() -> Figure:
    """Zero radius cycles; in the parabolic plane the infinitesimal cycle
    with the same focus is drawn as the ray going up from it
    """
    name = "zero-radius"
    points = (Point(Fraction(-1), Fraction(1)), Point(Fraction(1), Fraction(2)))
    panels = []
    for sigma in SIGNS:
        scene = Scene(PLANE[sigma], name, sigma=sigma)
        for p in points:
            scene.add_cycle(zero_radius_cycle(p, sigma))
            scene.add_point(p)

        if sigma == Sign.PARABOLIC:
            ctx = CycleContext.make(sigma=sigma, s=1)
            for p in points:
                start = infinitesimal_cycle(p.u, p.v, ctx).focus
                scene.add_polyline((start, (start.u, scene.viewport.vmax)), DASHED)
                scene.add_point(start, "eps")
        panels.append(scene)

    return Figure(name, "Zero radius cycles in the three planes", panels)


def _grid(name: str, caption: str, condition, auxiliary) -> Figure:
    """Nine (sigma, sigma_breve) panels: GRID_CYCLE, the cycles through
    (x, 0) and (x + 1, 1) satisfying condition(GRID_CYCLE, ctx), and the
    auxiliary cycle dashed
    """
    panels = []
    for sigma in SIGNS:
        for sigma_breve in SIGNS:
            ctx = CycleContext.make(sigma=sigma, sigma_breve=sigma_breve, s=1)
            scene = Scene(f"sigma={int(sigma)}, sigma_breve={int(sigma_breve)}", name, sigma=sigma)
            scene.add_cycle(GRID_CYCLE, BOLD)
            scene.add_geometry(lambda: auxiliary(GRID_CYCLE, ctx), DASHED)
            for x in GRID_FEET:
                through = [(x, Fraction(0)), (x + 1, Fraction(1))]
                scene.add_geometry(lambda through=through: fit_cycle(through, sigma, [condition(GRID_CYCLE, ctx)]))
            panels.append(scene)

    return Figure(name, caption, panels)


@register_figure("ortho-grid")
def ortho_grid() -> Figure:
    return _grid("ortho-grid", "Orthogonality of the first kind in nine combinations", orthogonal_form, ghost_cycle)


@register_figure("f-ortho-grid")
def f_ortho_grid() -> Figure:
    return _grid("f-ortho-grid", "Focal orthogonality in nine combinations", f_orthogonal_form, f_ghost_cycle)


@register_figure("inversion-grid")
def inversion_grid() -> Figure:
    """The rectangular grid and its reflection in the unit cycle"""
    name = "inversion-grid"
    steps = [Fraction(i, 2) for i in range(-4, 5)]
    lines = [Cycle(0, 1, 0, 2 * c) for c in steps] + [Cycle(0, 0, 1, 2 * c) for c in steps]
    panels = []
    for sigma in SIGNS:
        ctx = CycleContext.make(sigma=sigma, s=1)
        scene = Scene(PLANE[sigma], name, sigma=sigma)
        scene.add_cycle(UNIT_CYCLE, BOLD)
        for line in lines:
            scene.add_cycle(line, GREY)
            scene.add_geometry(lambda line=line: reflect(UNIT_CYCLE, line, ctx))
        panels.append(scene)

    return Figure(name, "Three types of inversions of the rectangular grid", panels)


def _kind_scene(kind: CayleyKind, name: str) -> Scene:
    scene = Scene(kind.name, name, sigma=kind.sigma)
    scene.add_cycle(unit_cycle(kind), BOLD)
    return scene


@register_figure("unit-disks")
def unit_disks() -> Figure:
    """Unit cycles of the five Cayley transforms with the image of i and
    the marked points of the parabolic disks
    """
    name = "unit-disks"
    panels = []
    for kind in all_kinds():
        scene = _kind_scene(kind, name)
        image = cayley_point(kind, (Fraction(0), Fraction(1)))
        if isinstance(image, Point):
            scene.add_point(image, "C(i)")

        if kind.is_parabolic and kind.sigma_breve != Sign.PARABOLIC:
            sb = kind.sigma_breve
            scene.add_point((0, Fraction(-sb, 2)), "e-centre")
            scene.add_point((0, -1 - Fraction(sb, 4)), "h-focus")
        if kind.is_parabolic:
            scene.add_point(P_FOCUS, "p-focus")
        panels.append(scene)

    return Figure(name, "Unit disks of the Cayley transforms", panels, columns=5)


@register_figure("concentric-orbits")
def concentric_orbits() -> Figure:
    """Cayley images of the fix group orbits (concentric in the elliptic
    and hyperbolic disks, confocal for Pe) and of the N-orbits (parabolas
    sharing their e-centre)
    """
    name = "concentric-orbits"
    heights = (Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))
    panels = []
    for kind in all_kinds():
        scene = _kind_scene(kind, name)
        if not kind.is_parabolic:
            for h in heights:
                scene.add_geometry(lambda h=h: fix_orbit_image((0, h), kind))
            scene.add_point((0, 0), "0")
            panels.append(scene)
            continue

        for h in heights:
            scene.add_geometry(lambda h=h: n_orbit_image(h, kind))
        if kind.sigma_breve != Sign.PARABOLIC:
            scene.add_point((0, Fraction(-1, 2 * int(kind.sigma_breve))), "e-centre")
        if kind.sigma_breve == Sign.ELLIPTIC:
            for h in heights:
                scene.add_geometry(lambda h=h: fix_orbit_image((h, 1), kind), DASHED)
            scene.add_point(P_FOCUS, "p-focus")
        panels.append(scene)

    return Figure(name, "Concentric and confocal orbits in the unit disks", panels, columns=5)


@register_figure("cayley-disks")
def cayley_disks() -> Figure:
    """Cayley images of A-orbits (rays from 0) and K-orbits (dashed)"""
    name = "cayley-disks"
    directions = [(Fraction(u), Fraction(1)) for u in (-2, -1, 0, 1, 2)]
    ks = (Fraction(1, 2), Fraction(1), Fraction(2))
    panels = []
    for kind in all_kinds():
        scene = _kind_scene(kind, name)
        for u, v in directions:
            scene.add_geometry(lambda u=u, v=v: Cycle(*cayley_cycle_linear(Cycle(0, v, -u, 0), kind)))
        for t in ks:
            orbit = k_orbit_cycle(t, kind.sigma).cycle
            scene.add_geometry(lambda orbit=orbit: Cycle(*cayley_cycle_linear(orbit, kind)), DASHED)
        panels.append(scene)

    return Figure(name, "Cayley images of the A and K orbits", panels, columns=5)
