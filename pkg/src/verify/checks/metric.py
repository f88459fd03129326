#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import itertools
import math

from fractions import Fraction

import numpy as np

from src.api.constants import BRANCH, LENGTH
from src.api.errors import (
    CoincidentOrdinates,
    DegenerateDenominator,
    FocusUndefined,
    NegativeRadicand,
    NonPositiveV,
)
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import value_at
from src.cycles.fsc import center, focus
from src.metric import (
    LengthKind,
    arc_path,
    centre_auxiliary_cycle,
    conformal_ratio,
    critical_point,
    curve_length,
    direction_dependent_limit,
    direction_limit_closed_form,
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
)
from src.metric.conformal import SHIFT_STEP
from src.moebius.action import moebius_apply
from src.moebius.points import Ideal, Point
from src.moebius.sl2 import SL2Elem
from src.verify import randomgen
from src.verify.suite import SkipTrial, expect, register_check

SIGMAS = Sign.values
PAIRS = tuple(itertools.product(SIGMAS, SIGMAS))
TRIPLES = tuple(itertools.product(SIGMAS, SIGMAS, SIGMAS))

ORACLE_TOL = 1e-6
# the bounded search locates its minimizer to about sqrt(machine eps)
CRITICAL_TOL = 1e-6
CONFORMAL_TOL = 1e-5
# lengths from a focus stay of order v^2 as the points merge
FLOAT_SHIFT_STEP = 1e-10
DEPENDENCE_SPREAD = 1e-3
FOCUS_LIMIT_TOL = 1e-6
CURVE_TOL = 1e-4

DIRECTIONS = tuple(
    (Fraction(du), Fraction(dv)) for du, dv in ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
)
DEPENDENCE_DIRECTIONS = tuple((Fraction(du), Fraction(dv)) for du, dv in ((0, 1), (1, 2), (2, 1), (1, 3), (3, 1)))

WITNESS_G = SL2Elem(Fraction(1), Fraction(0), Fraction(1), Fraction(1))
WITNESS_Y = Point(Fraction(0), Fraction(2))


def centre_is_conformal(sigma, sigma_breve, varsigma) -> bool:
    if sigma == Sign.PARABOLIC and varsigma == Sign.PARABOLIC:
        return False
    return not (2 * varsigma == sigma + sigma_breve and sigma != sigma_breve)


def focus_is_sampled(sigma, sigma_breve, varsigma) -> bool:
    return sigma * varsigma == -1 and sigma_breve * varsigma != -1


def distance_is_conformal(sigma, sigma_breve) -> bool:
    return sigma * sigma_breve == 1 or sigma == Sign.PARABOLIC


def spread(values) -> float:
    values = np.array(values, dtype=float)
    return float((values.max() - values.min()) / max(np.abs(values).max(), 1e-300))


def ratios(kind: LengthKind, g: SL2Elem, y: Point, directions, t, sigma, sigma_breve):
    """conformal_ratio over the directions, dropping degenerate ones"""
    result = []
    for d in directions:
        y_t = Point(y.u + t * d[0], y.v + t * d[1])
        if isinstance(moebius_apply(g, y_t, sigma), Ideal):
            continue
        try:
            result.append(conformal_ratio(kind, g, y, d, t, sigma, sigma_breve))
        except (DegenerateDenominator, NegativeRadicand):
            continue
    return result


@register_check("metric.distance-oracle", [(s, sb) for s, sb in PAIRS if s != 0 and sb != 0], exact=False)
def distance_oracle(rng, pair):
    sigma, sigma_breve = pair
    p1, p2 = randomgen.point_float(rng, upper=True), randomgen.point_float(rng, upper=True)
    du, dv = p1.u - p2.u, p1.v - p2.v
    if abs(dv) < 1e-3 or abs(du) < 1e-3:
        raise SkipTrial("nearly equal coordinates")
    if abs(sigma_breve * du * du - dv * dv) < 0.1 * (du * du + dv * dv):
        raise SkipTrial("flat family")
    try:
        closed = distance_sq(p1, p2, sigma, sigma_breve)
        l0 = critical_point(p1, p2, sigma, sigma_breve)
    except DegenerateDenominator:
        raise SkipTrial("degenerate denominator")

    oracle = distance_extremum_oracle(p1, p2, sigma, sigma_breve)
    if oracle.at_boundary:
        raise SkipTrial("no interior extremum")

    expect(
        math.isclose(closed, oracle.value, rel_tol=ORACLE_TOL, abs_tol=ORACLE_TOL),
        "closed form distance differs from the oracle",
        p1=p1,
        p2=p2,
        closed=closed,
        oracle=oracle,
    )
    expect(
        abs(l0 - oracle.parameter) <= CRITICAL_TOL * max(1.0, abs(l0)),
        "critical point differs from the oracle",
        p1=p1,
        p2=p2,
        l0=l0,
        oracle=oracle,
    )
    if sigma * sigma_breve == 1:
        expect(math.isclose(l0, (p1.u + p2.u) / 2), "critical point is not the midpoint", p1=p1, p2=p2, l0=l0)


@register_check("metric.distance-symmetry", PAIRS)
def distance_symmetry(rng, pair):
    sigma, sigma_breve = pair
    p1, p2 = randomgen.point(rng), randomgen.point(rng)
    try:
        forward = distance_sq(p1, p2, sigma, sigma_breve)
    except DegenerateDenominator:
        raise SkipTrial("degenerate denominator")
    expect(forward == distance_sq(p2, p1, sigma, sigma_breve), "distance is not symmetric", p1=p1, p2=p2)


@register_check("metric.centre-length", [t for t in TRIPLES if t[2] != 0])
def centre_length(rng, triple):
    """The auxiliary cycle has its centre at p1, passes through p2 and
    has the length as its squared radius
    """
    sigma, sigma_breve, varsigma = triple
    p1, p2 = randomgen.point(rng), randomgen.point(rng)
    aux = centre_auxiliary_cycle(p1, p2, sigma, varsigma)
    length = length_from_centre_sq(p1, p2, sigma, sigma_breve, varsigma)

    expect(value_at(aux, p2, sigma) == 0, "auxiliary cycle misses p2", p1=p1, p2=p2, aux=aux)
    expect(center(aux, varsigma) == p1, "auxiliary cycle is not centred at p1", p1=p1, p2=p2, aux=aux)
    ctx = CycleContext.make(sigma=sigma, sigma_breve=sigma_breve, s=1)
    expect(radius_sq(aux, ctx) == length, "radius of the auxiliary cycle is not the length", p1=p1, p2=p2, aux=aux)


@register_check("metric.focus-length", TRIPLES, exact=False)
def focus_length(rng, triple):
    """Same for the focal auxiliary cycle; exact when varsigma = 0"""
    sigma, sigma_breve, varsigma = triple
    if varsigma == Sign.PARABOLIC:
        p1, p2 = randomgen.point(rng), randomgen.point(rng)
    else:
        p1, p2 = randomgen.point_float(rng), randomgen.point_float(rng)
    branch = BRANCH.PLUS if rng.integers(2) else BRANCH.MINUS

    try:
        length = length_from_focus_sq(p1, p2, sigma, sigma_breve, varsigma, branch)
        aux = focal_auxiliary_cycle(p1, p2, sigma, sigma_breve, varsigma, branch, p=length.p)
        f = focus(aux, varsigma).point
    except (CoincidentOrdinates, NegativeRadicand, FocusUndefined):
        raise SkipTrial("no focal cycle")

    ctx = CycleContext.make(sigma=sigma, sigma_breve=sigma_breve, s=1)
    residual = value_at(aux, p2, sigma)
    radius = radius_sq(aux, ctx)
    if varsigma == Sign.PARABOLIC:
        expect(residual == 0 and f == p1 and radius == length.len_sq, "exact focal cycle is wrong", p1=p1, p2=p2, aux=aux)
        return

    scale = 1.0 + max(abs(float(x)) for x in aux)
    expect(abs(residual) <= 1e-9 * scale * scale, "auxiliary cycle misses p2", p1=p1, p2=p2, aux=aux)
    expect(f.isclose(p1, 1e-8, 1e-8), "auxiliary cycle is not focused at p1", p1=p1, p2=p2, focus=f)
    expect(math.isclose(radius, length.len_sq, rel_tol=1e-8, abs_tol=1e-8), "radius is not the length", p1=p1, p2=p2)


def _conformal_combos():
    combos = [("distance", s, sb, 0) for s, sb in PAIRS if distance_is_conformal(s, sb)]
    combos += [("from_centre", *t) for t in TRIPLES if centre_is_conformal(*t)]
    combos += [("from_focus", *t) for t in TRIPLES if focus_is_sampled(*t)]
    return tuple(combos)


@register_check("metric.conformal-independence", _conformal_combos())
def conformal_independence(rng, combo):
    """The t -> 0 ratio of lengths does not depend on the direction"""
    kind_name, sigma, sigma_breve, varsigma = combo
    kind = LengthKind.make(kind_name, varsigma)
    g = randomgen.sl2(rng)

    if kind.kind == LENGTH.FROM_FOCUS:
        g, y, t = g.to_float(), randomgen.point_float(rng, upper=True), FLOAT_SHIFT_STEP
        directions = [(float(du), float(dv)) for du, dv in DIRECTIONS]
    else:
        y, t, directions = randomgen.point(rng, upper=True), SHIFT_STEP, DIRECTIONS

    if isinstance(moebius_apply(g, y, sigma), Ideal):
        raise SkipTrial("y sent to infinity")

    values = ratios(kind, g, y, directions, t, sigma, sigma_breve)
    if len(values) < 2:
        raise SkipTrial("degenerate directions")
    expect(spread(values) <= CONFORMAL_TOL, "ratio depends on the direction", g=g, y=y, ratios=values)


DEPENDENCE_WITNESSES = (
    ("distance", Sign.ELLIPTIC, Sign.PARABOLIC, 0),
    ("distance", Sign.ELLIPTIC, Sign.HYPERBOLIC, 0),
    ("distance", Sign.HYPERBOLIC, Sign.ELLIPTIC, 0),
    ("distance", Sign.HYPERBOLIC, Sign.PARABOLIC, 0),
    ("from_centre", Sign.ELLIPTIC, Sign.HYPERBOLIC, Sign.PARABOLIC),
    ("from_centre", Sign.HYPERBOLIC, Sign.ELLIPTIC, Sign.PARABOLIC),
)


@register_check("metric.conformal-dependence", DEPENDENCE_WITNESSES, fixed=1)
def conformal_dependence(rng, combo):
    """The excluded combinations depend on the direction"""
    kind_name, sigma, sigma_breve, varsigma = combo
    kind = LengthKind.make(kind_name, varsigma)
    values = ratios(kind, WITNESS_G, WITNESS_Y, DEPENDENCE_DIRECTIONS, SHIFT_STEP, sigma, sigma_breve)
    expect(len(values) >= 2, "not enough directions", kind=kind)
    expect(spread(values) > DEPENDENCE_SPREAD, "ratio does not depend on the direction", kind=kind, ratios=values)


@register_check("metric.parabolic-focus-limit", SIGMAS, fixed=20)
def parabolic_focus_limit_check(rng, sigma_breve):
    g = randomgen.sl2(rng)
    y = randomgen.point(rng, upper=True)
    scale = g.c * y.u + g.d
    if scale == 0 or abs(scale) < Fraction(1, 100):
        raise SkipTrial("c u + d vanishes")

    u_far = randomgen.rational(rng)
    if g.c * u_far + g.d == 0:
        raise SkipTrial("far point sent to infinity")

    limit = parabolic_focus_limit(g, y, u_far, sigma_breve)
    expected = float(1 / (scale * scale))
    expect(math.isclose(limit, expected, rel_tol=FOCUS_LIMIT_TOL), "limit is not 1/(cu + d)^2", g=g, y=y, limit=limit)


@register_check("metric.direction-dependent-limit")
def direction_dependent_limit_check(rng, _):
    g = randomgen.sl2(rng)
    y = randomgen.point(rng, upper=True)
    du, dv = randomgen.direction(rng)
    if du == 0 or dv == 0:
        raise SkipTrial("axis direction")

    try:
        expected = direction_limit_closed_form(g, y, du / dv, Sign.PARABOLIC)
    except DegenerateDenominator:
        raise SkipTrial("degenerate closed form")
    if abs(expected) > 1000 or isinstance(moebius_apply(g, y, Sign.PARABOLIC), Ideal):
        raise SkipTrial("ill conditioned")
    if g.c * (y.u + SHIFT_STEP * du) + g.d == 0:
        raise SkipTrial("shifted point sent to infinity")

    try:
        limit = direction_dependent_limit(g, y, (du, dv))
    except DegenerateDenominator:
        raise SkipTrial("degenerate shift")
    expect(
        math.isclose(float(limit), float(expected), rel_tol=FOCUS_LIMIT_TOL),
        "shifted ratio differs from the closed form",
        g=g,
        y=y,
        direction=(du, dv),
        limit=float(limit),
        expected=float(expected),
    )


PERPENDICULAR_KINDS = (
    LengthKind.make("distance"),
    LengthKind.make("from_centre", Sign.ELLIPTIC),
    LengthKind.make("from_centre", Sign.HYPERBOLIC),
    LengthKind.make("from_focus", Sign.PARABOLIC),
)


@register_check(
    "metric.perpendicular",
    [(kind, s, sb) for kind in PERPENDICULAR_KINDS for s, sb in PAIRS],
    exact=False,
)
def perpendicular(rng, combo):
    kind, sigma, sigma_breve = combo
    A, B = randomgen.point_float(rng, upper=True), randomgen.point_float(rng, upper=True)
    du, dv = B.u - A.u, B.v - A.v
    if abs(du) < 0.5 or abs(dv) < 0.5:
        raise SkipTrial("points too close")
    if kind.kind == LENGTH.DISTANCE and abs(sigma_breve * du * du - dv * dv) < 0.25 * (du * du + dv * dv):
        raise SkipTrial("near degenerate denominator")

    try:
        CD = perpendicular_direction(kind, A, B, sigma, sigma_breve)
        if math.hypot(*(float(x) for x in CD)) < 1e-9:
            raise SkipTrial("stationary length")
        ok = is_perpendicular(kind, A, B, CD, sigma, sigma_breve)
    except (DegenerateDenominator, CoincidentOrdinates, NegativeRadicand):
        raise SkipTrial("degenerate length")
    expect(ok, "direction is not perpendicular", kind=kind, A=A, B=B, CD=CD)


@register_check("metric.curve-invariance", (Sign.ELLIPTIC, Sign.HYPERBOLIC), fixed=20, exact=False)
def curve_invariance(rng, sigma):
    g = randomgen.sl2_float(rng)
    centre, radius = float(rng.uniform(-2, 2)), float(rng.uniform(0.5, 2))
    if sigma == Sign.ELLIPTIC:
        theta0, theta1 = sorted(rng.uniform(0.2, math.pi - 0.2, 2))
    else:
        theta0, theta1 = sorted(rng.uniform(-1, 1, 2))
    path = arc_path(centre, radius, float(theta0), float(theta1), sigma)

    try:
        before = curve_length(path, sigma)
        after = curve_length(moebius_image_path(g, path, sigma), sigma)
    except NonPositiveV:
        raise SkipTrial("image leaves the upper half-plane")
    expect(math.isclose(before, after, rel_tol=CURVE_TOL), "curve length is not invariant", g=g, before=before, after=after)
