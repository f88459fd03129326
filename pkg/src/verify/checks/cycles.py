#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import itertools

from fractions import Fraction

from src.api.errors import InsufficientPoints
from src.clifford.sign import Sign
from src.cycles.compact import compactification_predicates
from src.cycles.context import CycleContext, all_contexts
from src.cycles.cycle import REAL_LINE, Cycle, value_at, zero_radius_cycle
from src.cycles.fit import fit_cycle
from src.cycles.fsc import center, cycle_from_matrix, det_cycle, fsc_matrix, inner, inner_re, sl2_transform
from src.moebius.action import moebius_apply
from src.moebius.points import Ideal, Point
from src.verify import randomgen
from src.verify.suite import SkipTrial, expect, register_check

CONTEXTS = tuple(all_contexts())
SIGMAS = Sign.values
SAME_SIGNATURE = tuple(CycleContext.make(sigma=sigma, s=s) for sigma, s in itertools.product(SIGMAS, SIGMAS))


@register_check("cycles.intertwining", CONTEXTS, weight=2)
def intertwining(rng, ctx):
    """p on C iff g p on g C"""
    g = randomgen.sl2(rng)
    p = randomgen.point(rng)
    C = randomgen.through(randomgen.cycle(rng), p, ctx.sigma)
    image = moebius_apply(g, p, ctx.sigma)
    if isinstance(image, Ideal):
        raise SkipTrial("point sent to infinity")

    gC = sl2_transform(C, g, ctx)
    expect(value_at(gC, image, ctx.sigma) == 0, "image point is off the image cycle", g=g, p=p, C=C, gC=gC)

    q = randomgen.point(rng)
    q_image = moebius_apply(g, q, ctx.sigma)
    if value_at(C, q, ctx.sigma) != 0 and isinstance(q_image, Point):
        expect(value_at(gC, q_image, ctx.sigma) != 0, "a point off C lands on g C", g=g, q=q, C=C)


@register_check("cycles.s-independence", CONTEXTS)
def s_independence(rng, ctx):
    """g M g^-1 read back with the multiplier of the context"""
    g = randomgen.sl2(rng)
    C = randomgen.cycle(rng)
    sb = ctx.sigma_breve
    conj = g.clifford_matrix(sb) * fsc_matrix(C, ctx) * g.clifford_inverse(sb)
    expected = sl2_transform(C, g, ctx)

    if ctx.s == Sign.PARABOLIC:
        k, l, _, m = expected
        got = (conj.c.c1, conj.a.c_e0, conj.b.c1)
        expect(got == (k, l, m), "k, l, m depend on s", g=g, C=C, got=got)
        return

    got = cycle_from_matrix(conj, ctx.s)
    expect(got.quadruple == expected.quadruple, "transformed quadruple depends on s", g=g, C=C, got=got, expected=expected)


@register_check("cycles.det-invariance", CONTEXTS, weight=2)
def det_invariance(rng, ctx):
    g = randomgen.sl2(rng)
    C = randomgen.cycle(rng)
    gC = sl2_transform(C, g, ctx)
    expect(det_cycle(gC, ctx) == det_cycle(C, ctx), "det is not invariant", g=g, C=C, gC=gC)


@register_check("cycles.inner-closed-form", CONTEXTS)
def inner_closed_form(rng, ctx):
    C1, C2 = randomgen.cycle(rng), randomgen.cycle(rng)
    expect(inner(C1, C2, ctx).re == inner_re(C1, C2, ctx), "trace and closed form disagree", C1=C1, C2=C2)
    expect(inner_re(C1, C1, ctx) == -2 * det_cycle(C1, ctx), "<C, C> != -2 det C", C=C1)


@register_check("cycles.zero-radius", SAME_SIGNATURE)
def zero_radius(rng, ctx):
    """The zero radius cycle of p goes to the zero radius cycle of g p"""
    g = randomgen.sl2(rng)
    p = randomgen.point(rng)
    image = sl2_transform(zero_radius_cycle(p, ctx.sigma), g, ctx)
    expected = moebius_apply(g, p, ctx.sigma)

    expect(det_cycle(image, ctx, s=Sign.HYPERBOLIC) == 0, "image has nonzero radius", g=g, p=p, image=image)
    if isinstance(expected, Ideal):
        expect(image.k == 0, "point at infinity with a finite image cycle", g=g, p=p, image=image)
        return
    expect(center(image, Sign.ELLIPTIC) == expected, "centre of the image is not g p", g=g, p=p, image=image, expected=expected)


@register_check("cycles.invariant-families", CONTEXTS, weight=2)
def invariant_families(rng, ctx):
    """Self adjoint cycles stay self adjoint and the real line is fixed"""
    g = randomgen.sl2(rng)
    C = randomgen.cycle(rng)
    C = Cycle(C.k, C.l, 0, C.m)
    gC = sl2_transform(C, g, ctx)
    expect(gC.n == 0, "self adjoint cycle loses n = 0", g=g, C=C, gC=gC)
    expect(sl2_transform(REAL_LINE, g, ctx) == REAL_LINE, "real line moves", g=g)


@register_check("cycles.compactification", SIGMAS)
def compactification(rng, sigma):
    p = randomgen.point(rng)
    t = randomgen.rational(rng)
    cone = {Sign.ELLIPTIC: (0, 0), Sign.PARABOLIC: (0, t), Sign.HYPERBOLIC: (t, t if rng.integers(2) else -t)}[sigma]

    for q, on_cone in ((p, p.u * p.u - sigma * p.v * p.v == 0), (Point(*(Fraction(x) for x in cone)), True)):
        result = compactification_predicates(q, sigma)
        expect(result.agree, "the four descriptions disagree", p=q, result=result)
        expect(result.on_zero_cycle == on_cone, "wrong light cone membership", p=q, result=result)


@register_check("cycles.fit", SIGMAS)
def fit(rng, sigma):
    points = [randomgen.point(rng) for _ in range(3)]
    if len(set(points)) < 3:
        raise SkipTrial("repeated points")
    try:
        C = fit_cycle(points, sigma)
    except InsufficientPoints:
        raise SkipTrial("points do not fix a cycle")
    for p in points:
        expect(value_at(C, p, sigma) == 0, "fitted cycle misses a point", points=points, C=C)
