#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import itertools
import math

from src.api.errors import GhostUndefined, InsufficientPoints
from src.clifford.sign import Sign
from src.cycles.context import CycleContext, all_contexts
from src.cycles.cycle import Cycle, value_at
from src.cycles.fit import fit_cycle
from src.cycles.fsc import center, det_cycle, inner_re, reflect, sl2_transform
from src.moebius.points import Ideal
from src.relations import (
    cycle_moebius_point,
    f_orthogonal,
    f_orthogonal_closed_form,
    f_orthogonality_trace,
    ghost_cycle,
    intersect_cycles,
    orthogonal,
    orthogonal_form,
)
from src.verify import randomgen
from src.verify.suite import SkipTrial, expect, register_check

CONTEXTS = tuple(all_contexts())
SIGMAS = Sign.values

# (sigma, sigma_breve) where the ghost cycle turns orthogonality into the
# tangent-through-centre condition
GHOST_PAIRS = tuple(itertools.product((Sign.ELLIPTIC, Sign.HYPERBOLIC), (Sign.ELLIPTIC, Sign.HYPERBOLIC))) + (
    (Sign.PARABOLIC, Sign.PARABOLIC),
)

GHOST_TOL = 1e-7
TRANSVERSAL = 1e-3


def orthogonal_partner(rng, C1: Cycle, ctx: CycleContext) -> Cycle:
    """A random cycle with m chosen so it is orthogonal to C1 (k1 != 0)"""
    k2, l2, n2, _ = randomgen.cycle(rng) if C1.is_exact else randomgen.cycle_float(rng)
    partial = inner_re(C1, Cycle(k2, l2, n2, 0 * k2 + 1), ctx) - C1.k
    return Cycle(k2, l2, n2, -partial / C1.k)


@register_check("relations.orthogonality-invariance", CONTEXTS, weight=2)
def orthogonality_invariance(rng, ctx):
    g = randomgen.sl2(rng)
    C1, C2 = randomgen.cycle(rng), randomgen.cycle(rng)
    g1, g2 = sl2_transform(C1, g, ctx), sl2_transform(C2, g, ctx)
    expect(inner_re(g1, g2, ctx) == inner_re(C1, C2, ctx), "re<C1, C2> is not invariant", g=g, C1=C1, C2=C2)

    D = orthogonal_partner(rng, C1, ctx)
    expect(orthogonal(C1, D, ctx), "constructed partner is not orthogonal", C1=C1, D=D)
    expect(orthogonal(g1, sl2_transform(D, g, ctx), ctx), "orthogonality is not invariant", g=g, C1=C1, D=D)


@register_check("relations.f-orthogonality", CONTEXTS, weight=2)
def f_orthogonality(rng, ctx):
    """The trace is 2 sigma_breve s^2 times the closed form; both are
    invariant, and a pair built from the closed form is f-orthogonal
    """
    g = randomgen.sl2(rng)
    C1, C2 = randomgen.cycle(rng), randomgen.cycle(rng)
    closed = f_orthogonal_closed_form(C1, C2, ctx)
    trace = f_orthogonality_trace(C1, C2, ctx)
    expect(trace == 2 * ctx.sigma_breve * ctx.s * ctx.s * closed, "trace != 2 sigma_breve s^2 closed form", C1=C1, C2=C2)

    g1, g2 = sl2_transform(C1, g, ctx), sl2_transform(C2, g, ctx)
    expect(f_orthogonal_closed_form(g1, g2, ctx) == closed, "closed form is not invariant", g=g, C1=C1, C2=C2)
    expect(f_orthogonality_trace(g1, g2, ctx) == trace, "trace is not invariant", g=g, C1=C1, C2=C2)

    if C1.n == 0:
        return
    # n2 det(C1) + n1 re<C1, C2> is affine in m2 with slope n1 k1
    base = f_orthogonal_closed_form(C1, Cycle(C2.k, C2.l, C2.n, 0), ctx)
    D = Cycle(C2.k, C2.l, C2.n, -base / (C1.n * C1.k))
    expect(f_orthogonal_closed_form(C1, D, ctx) == 0, "constructed partner is not f-orthogonal", C1=C1, D=D)
    expect(
        f_orthogonal_closed_form(g1, sl2_transform(D, g, ctx), ctx) == 0,
        "f-orthogonality is not invariant",
        g=g,
        C1=C1,
        D=D,
    )


@register_check("relations.f-orthogonality-asymmetry", fixed=1)
def f_orthogonality_asymmetry(rng, _):
    ctx = CycleContext.make(sigma=-1, sigma_breve=-1, s=1)
    C1, C2 = Cycle(1, 0, 1, 0), Cycle(0, 1, 0, 0)
    expect(f_orthogonal(C1, C2, ctx), "C1 is not f-orthogonal to C2", C1=C1, C2=C2)
    expect(not f_orthogonal(C2, C1, ctx), "f-orthogonality came out symmetric", C1=C1, C2=C2)


@register_check("relations.reflection-involution", CONTEXTS)
def reflection_involution(rng, ctx):
    C, D = randomgen.cycle(rng), randomgen.cycle(rng)
    if det_cycle(C, ctx) == 0:
        raise SkipTrial("zero radius mirror")
    twice = reflect(C, reflect(C, D, ctx), ctx)
    expect(twice == D, "reflecting twice does not restore the cycle", C=C, D=D, twice=twice)


@register_check("relations.inversion-involution", SIGMAS)
def inversion_involution(rng, sigma):
    C = randomgen.cycle(rng)
    if det_cycle(C, CycleContext.make(sigma=sigma, s=1)) == 0:
        raise SkipTrial("zero radius mirror")
    p = randomgen.point(rng)
    q = cycle_moebius_point(C, p, sigma)
    if isinstance(q, Ideal):
        raise SkipTrial("point sent to infinity")
    back = cycle_moebius_point(C, q, sigma)
    expect(back == p, "inverting twice does not restore the point", C=C, p=p, q=q, back=back)


@register_check("relations.orthogonal-family", SIGMAS)
def orthogonal_family(rng, sigma):
    """A cycle orthogonal to C through p passes through the inversion of p in C"""
    ctx = CycleContext.make(sigma=sigma, s=1)
    C = randomgen.cycle(rng)
    if det_cycle(C, ctx) == 0:
        raise SkipTrial("zero radius mirror")

    p = randomgen.point(rng)
    q = cycle_moebius_point(C, p, sigma)
    if isinstance(q, Ideal):
        raise SkipTrial("point sent to infinity")

    pin = [randomgen.rational(rng) for _ in range(4)]
    try:
        D = fit_cycle([p], sigma, [orthogonal_form(C, ctx), pin])
    except InsufficientPoints:
        raise SkipTrial("conditions do not fix a cycle")
    expect(orthogonal(C, D, ctx), "fitted cycle is not orthogonal", C=C, D=D)
    expect(value_at(D, q, sigma) == 0, "orthogonal cycle misses the inverse point", C=C, D=D, p=p, q=q)


@register_check("relations.ghost-locality", GHOST_PAIRS, exact=False)
def ghost_locality(rng, pair):
    """Where a cycle orthogonal to C meets the ghost of C, its tangent
    passes through the centre of the ghost
    """
    sigma, sigma_breve = pair
    ctx = CycleContext.make(sigma=sigma, sigma_breve=sigma_breve, s=1)
    C = randomgen.cycle_float(rng)
    D = orthogonal_partner(rng, C, ctx)
    try:
        ghost = ghost_cycle(C, ctx)
    except GhostUndefined:
        raise SkipTrial("no ghost")

    centre = center(ghost, sigma)
    if isinstance(centre, Ideal):
        raise SkipTrial("ghost centre at infinity")

    points = intersect_cycles(D, ghost, sigma)
    if not points:
        raise SkipTrial("no intersection")

    for p in points:
        grad = _gradient(D, p, sigma)
        other = _gradient(ghost, p, sigma)
        norm, other_norm = math.hypot(*grad), math.hypot(*other)
        if norm == 0 or other_norm == 0 or abs(grad[0] * other[1] - grad[1] * other[0]) < TRANSVERSAL * norm * other_norm:
            raise SkipTrial("tangent intersection")

        offset = (centre.u - p.u, centre.v - p.v)
        dot = offset[0] * grad[0] + offset[1] * grad[1]
        expect(
            abs(dot) <= GHOST_TOL * max(1.0, math.hypot(*offset)) * norm,
            "tangent misses the ghost centre",
            C=C,
            D=D,
            ghost=ghost,
            point=p,
        )


def _gradient(C: Cycle, p, sigma: Sign):
    k, l, n, _ = (float(x) for x in C)
    return 2 * k * p.u - 2 * l, -2 * k * sigma * p.v - 2 * n
