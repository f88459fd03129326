#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import itertools

from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.infinitesimal import Jet, eps_order, inf_orthogonality_conditions, infinitesimal_cycle
from src.moebius.action import moebius_apply
from src.moebius.points import Ideal, Point
from src.verify import randomgen
from src.verify.suite import SkipTrial, expect, register_check

SIGMAS = Sign.values
TRIPLES = tuple(
    CycleContext.make(sigma=sigma, sigma_breve=sigma_breve, s=1, varsigma=varsigma)
    for sigma, sigma_breve, varsigma in itertools.product(SIGMAS, repeat=3)
)
PARABOLIC = tuple(
    CycleContext.make(sigma=Sign.PARABOLIC, sigma_breve=sigma_breve, s=1, varsigma=varsigma)
    for sigma_breve, varsigma in itertools.product(SIGMAS, repeat=2)
)

# n starts at eps^2, so focus jets lose two orders
TRANSPORT_ORDER = 5


def random_inf_cycle(rng, ctx: CycleContext, order: int = 3):
    p = randomgen.point(rng, upper=True)
    return infinitesimal_cycle(p.u, p.v, ctx, order)


@register_check("infinitesimal.det", TRIPLES)
def det(rng, ctx):
    ic = random_inf_cycle(rng, ctx)
    expect(ic.det() == -Jet.eps(2, ic.order), "det is not -eps^2", focus=ic.focus, det=ic.det())


@register_check("infinitesimal.sl2-image", TRIPLES, weight=2)
def sl2_image(rng, ctx):
    g = randomgen.sl2(rng)
    ic = random_inf_cycle(rng, ctx)
    image = ic.sl2_image(g)
    expect(image.det() == ic.det(), "det changes under g", g=g, focus=ic.focus, det=image.det())
    expect(eps_order(image.det()) == 2, "image is not infinitesimal", g=g, focus=ic.focus, det=image.det())


@register_check("infinitesimal.conjugate", TRIPLES)
def conjugate(rng, ctx):
    ic = random_inf_cycle(rng, ctx)
    mirror = randomgen.cycle(rng)
    image = ic.conjugate(mirror)
    expect(eps_order(image.det()) >= 2, "reflected cycle is not infinitesimal", mirror=mirror, focus=ic.focus)


@register_check("infinitesimal.focus-transport", PARABOLIC)
def focus_transport(rng, ctx):
    """The focus of g C is g applied to the focus of C, up to eps^2"""
    g = randomgen.sl2(rng)
    ic = random_inf_cycle(rng, ctx, TRANSPORT_ORDER)
    expected = moebius_apply(g, ic.focus, Sign.PARABOLIC)
    if isinstance(expected, Ideal):
        raise SkipTrial("focus sent to infinity")

    fu, fv = ic.sl2_image(g).focus_jets()
    expect(
        eps_order(fu - expected.u) >= 2 and eps_order(fv - expected.v) >= 2,
        "focus does not follow the point",
        g=g,
        focus=ic.focus,
        fu=fu,
        fv=fv,
        expected=expected,
    )


@register_check("infinitesimal.leading-terms", TRIPLES)
def leading_terms(rng, ctx):
    ic = random_inf_cycle(rng, ctx)
    u0, v0 = ic.focus
    C = randomgen.cycle(rng)
    k, l, n, m = C

    conditions = inf_orthogonality_conditions(ic, C)
    expect(conditions.ortho.c0 == k * u0 * u0 - 2 * l * u0 + m, "orthogonality leading term", focus=ic.focus, C=C)
    expect(
        conditions.f_residual.c0 == k * u0 * u0 - 2 * l * u0 - 2 * n * v0 + m,
        "f-orthogonality leading term",
        focus=ic.focus,
        C=C,
    )

    rooted = randomgen.through(C, Point(u0, 0 * u0), Sign.PARABOLIC)
    ortho = inf_orthogonality_conditions(ic, rooted).ortho
    expect(eps_order(ortho) >= 1, "cycle through u0 is not orthogonal to first order", focus=ic.focus, C=rooted)
