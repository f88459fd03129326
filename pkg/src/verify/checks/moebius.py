#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import math

from fractions import Fraction

from src.api.constants import FAMILY
from src.api.errors import NotFactorable
from src.clifford.sign import Sign
from src.cycles.cycle import Cycle, value_at
from src.moebius.action import moebius_apply
from src.moebius.fix import factor_via_fix_subgroup
from src.moebius.iwasawa import iwasawa
from src.moebius.orbits import fix_orbit_cycle, vector_field
from src.moebius.points import Ideal, Point
from src.moebius.sl2 import rational_subgroup_element
from src.verify import randomgen
from src.verify.suite import SkipTrial, expect, register_check

SIGMAS = Sign.values


def same_point(p, q) -> bool:
    """Finite points exactly, points at infinity by their cycles"""
    if isinstance(p, Ideal) or isinstance(q, Ideal):
        return isinstance(p, Ideal) and isinstance(q, Ideal) and p.cycle == q.cycle
    return p == q


@register_check("moebius.group-action", SIGMAS)
def group_action(rng, sigma):
    g1, g2 = randomgen.sl2(rng), randomgen.sl2(rng)
    p = randomgen.point(rng)
    once = moebius_apply(g1 * g2, p, sigma)
    twice = moebius_apply(g1, moebius_apply(g2, p, sigma), sigma)
    expect(same_point(once, twice), "(g1 g2) p != g1 (g2 p)", g1=g1, g2=g2, p=p, once=once, twice=twice)


@register_check("moebius.real-line", SIGMAS)
def real_line(rng, sigma):
    g = randomgen.sl2(rng)
    p = Point(randomgen.rational(rng), Fraction(0))
    image = moebius_apply(g, p, sigma)
    if isinstance(image, Ideal):
        raise SkipTrial("pole on the real line")
    expect(image.v == 0, "real point leaves the real line", g=g, p=p, image=image)


@register_check("moebius.fix-orbits", SIGMAS)
def fix_orbits(rng, sigma):
    q = Fraction(int(rng.integers(-6, 7)), 7)
    f = rational_subgroup_element(FAMILY.FIX, q, sigma)
    p = randomgen.point(rng, upper=True)
    image = moebius_apply(f, p, sigma)
    if isinstance(image, Ideal):
        raise SkipTrial("orbit point at infinity")
    C = fix_orbit_cycle(p, sigma)
    expect(value_at(C, image, sigma) == 0, "fix group image leaves the orbit cycle", f=f, p=p, image=image, orbit=C)


@register_check("moebius.vector-fields", SIGMAS)
def vector_fields(rng, sigma):
    """Each field is tangent to the orbit cycle through p"""
    p = randomgen.point(rng, upper=True)
    u, v = p
    orbits = {
        FAMILY.K: Cycle(1, 0, (u * u - sigma * v * v + 1) / (2 * v), 1),
        FAMILY.FIX: fix_orbit_cycle(p, sigma),
        FAMILY.A: Cycle(0, v, -u, 0),
        FAMILY.N: Cycle(0, 0, 1, 2 * v),
    }

    for family, C in orbits.items():
        expect(value_at(C, p, sigma) == 0, f"{family.value} orbit misses p", p=p, orbit=C)
        du, dv = vector_field(family, p, sigma)
        k, l, n, _ = C
        dot = (2 * k * u - 2 * l) * du + (-2 * k * sigma * v - 2 * n) * dv
        expect(dot == 0, f"{family.value} field is not tangent to its orbit", p=p, orbit=C, field=(du, dv))


@register_check("moebius.iwasawa", exact=False)
def iwasawa_recompose(rng, _):
    g = randomgen.sl2_float(rng)
    factors = iwasawa(g)
    expect(factors.recompose().isclose(g, rtol=1e-9, atol=1e-9), "A N K does not recompose g", g=g, factors=factors)
    expect(factors.alpha > 0 and -math.pi < factors.phi <= math.pi, "factors out of range", g=g, factors=factors)


@register_check("moebius.fix-factorization", SIGMAS, exact=False)
def fix_factorization(rng, sigma):
    g = randomgen.sl2_float(rng)
    try:
        factors = factor_via_fix_subgroup(g, sigma)
    except NotFactorable:
        raise SkipTrial("e1 leaves the upper half-plane")
    expect(factors.h.c == 0, "h is not upper triangular", g=g, h=factors.h)
    expect(factors.recompose().isclose(g, rtol=1e-9, atol=1e-9), "h f does not recompose g", g=g, factors=factors)
