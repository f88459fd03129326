#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import math

from fractions import Fraction

import numpy as np

from src.api.constants import FAMILY
from src.api.errors import DivisionLeadingZero, ZeroDivisor
from src.cayley import (
    P_FOCUS,
    CayleyKind,
    all_kinds,
    cayley_cycle_linear,
    cayley_cycle_report,
    cayley_point,
    cayley_sl2,
    fix_orbit_image,
    in_unit_disk,
    n_orbit_image,
    printed_parabolic_cycle,
    unit_cycle,
    unit_disk_forms,
)
from src.clifford.cliffnum import vector_to_cliff
from src.clifford.sign import Sign
from src.cycles.context import CycleContext
from src.cycles.cycle import Cycle, value_at
from src.cycles.fsc import center
from src.figures.sampling import residual
from src.infinitesimal import eps_order, f_residual, infinitesimal_cycle
from src.metric import length_from_focus_sq
from src.moebius.action import clifford_apply, moebius_apply
from src.moebius.points import Ideal, Point
from src.moebius.sl2 import SL2Elem, rational_subgroup_element
from src.verify import randomgen
from src.verify.suite import SkipTrial, expect, register_check

KINDS = tuple(all_kinds())
SIMILARITIES = tuple(kind for kind in KINDS if not kind.is_parabolic)
PARABOLIC_KINDS = tuple(kind for kind in KINDS if kind.is_parabolic)
DISK_KINDS = tuple(kind for kind in PARABOLIC_KINDS if kind.sigma_breve != Sign.PARABOLIC)

UNIT_SAMPLES = 512
UNIT_TOL = 1e-9
HALF = Fraction(1, 2)

# the hyperbolic transform does not send the upper half-plane into its disk
WITNESS_G = SL2Elem(Fraction(0), Fraction(1), Fraction(-1), Fraction(0))
WITNESS_P = Point(Fraction(0), HALF)


def predicted_unit_cycle(kind: CayleyKind) -> Cycle:
    if not kind.is_parabolic:
        return Cycle(1, 0, 0, int(kind.sigma))
    return Cycle(int(kind.sigma_breve), 0, -HALF, 1)


@register_check("cayley.unit-cycle", KINDS, fixed=1, exact=False)
def unit_cycle_check(rng, kind):
    """The real line goes to the predicted unit cycle"""
    C = unit_cycle(kind)
    expect(C == predicted_unit_cycle(kind), "unexpected unit cycle", kind=kind, cycle=C)

    for u in np.linspace(-8.0, 8.0, UNIT_SAMPLES):
        q = cayley_point(kind, Point(float(u), 0.0))
        if isinstance(q, Ideal):
            continue
        expect(residual(C, q, kind.sigma) <= UNIT_TOL, "image of a real point is off the unit cycle", kind=kind, u=u, q=q)


@register_check("cayley.k-diagonal", SIMILARITIES, fixed=1)
def k_diagonal(rng, kind):
    """The stabilizer of the disk centre becomes diagonal"""
    family = FAMILY.K if kind.sigma == Sign.ELLIPTIC else FAMILY.A_h_fix
    for q in (Fraction(1, 3), Fraction(-2, 5), Fraction(1, 2)):
        g = rational_subgroup_element(family, q, kind.sigma)
        expect(cayley_sl2(g, kind).is_diagonal(), "transformed stabilizer is not diagonal", kind=kind, g=g)


@register_check("cayley.intertwining", SIMILARITIES)
def intertwining(rng, kind):
    """cayley(g p) is the transformed matrix applied to cayley(p)"""
    g = randomgen.sl2(rng)
    p = randomgen.point(rng)
    gp = moebius_apply(g, p, kind.sigma)
    if isinstance(gp, Ideal):
        raise SkipTrial("point sent to infinity")

    left, right = cayley_point(kind, gp), cayley_point(kind, p)
    if isinstance(left, Ideal) or isinstance(right, Ideal):
        raise SkipTrial("image at infinity")

    try:
        moved = clifford_apply(cayley_sl2(g, kind), vector_to_cliff(right.u, right.v, kind.sigma))
    except ZeroDivisor:
        raise SkipTrial("zero divisor")
    expect(moved == left, "Cayley transform does not intertwine", kind=kind, g=g, p=p, left=left, moved=moved)


@register_check("cayley.disk-invariance")
def disk_invariance(rng, _):
    """The elliptic disk is invariant under SL(2,R)"""
    kind = CayleyKind.make(Sign.ELLIPTIC)
    g = randomgen.sl2(rng)
    p = randomgen.point(rng, upper=True)
    for q in (p, moebius_apply(g, p, kind.sigma)):
        expect(in_unit_disk(kind, cayley_point(kind, q)), "upper half-plane point outside the disk", g=g, p=q)


@register_check("cayley.disk-non-invariance", fixed=1)
def disk_non_invariance(rng, _):
    kind = CayleyKind.make(Sign.HYPERBOLIC)
    moved = moebius_apply(WITNESS_G, WITNESS_P, kind.sigma)
    expect(in_unit_disk(kind, cayley_point(kind, WITNESS_P)), "witness point is not inside", p=WITNESS_P)
    expect(not in_unit_disk(kind, cayley_point(kind, moved)), "witness image stays inside", p=moved)


@register_check("cayley.n-orbits", PARABOLIC_KINDS)
def n_orbits(rng, kind):
    """N-orbit images share the e-centre (0, -1/(2 sigma_breve))"""
    height = randomgen.positive_rational(rng)
    image = n_orbit_image(height, kind)

    q = cayley_point(kind, Point(randomgen.rational(rng), height))
    if not isinstance(q, Ideal):
        expect(value_at(image, q, Sign.PARABOLIC) == 0, "orbit point off the image", kind=kind, height=height, q=q)

    centre = center(image, Sign.ELLIPTIC)
    if kind.sigma_breve == Sign.PARABOLIC:
        expect(isinstance(centre, Ideal), "shifted orbit has a finite centre", height=height, image=image)
        return
    expected = Point(Fraction(0), -1 / (2 * Fraction(int(kind.sigma_breve))))
    expect(centre == expected, "orbit image is off centre", kind=kind, height=height, centre=centre)


@register_check("cayley.fix-orbits-focal", PARABOLIC_KINDS)
def fix_orbits_focal(rng, kind):
    """Fix orbit images have a constant p-length from the p-focus (0, -1)"""
    p = randomgen.point(rng, upper=True)
    image = fix_orbit_image(p, kind)
    k, l, n, m = image
    if n == 0:
        raise SkipTrial("image is not a parabola")

    lengths = []
    for u in (randomgen.nonzero_rational(rng), randomgen.nonzero_rational(rng)):
        q = Point(u, (k * u * u - 2 * l * u + m) / (2 * n))
        if q.v == P_FOCUS.v:
            raise SkipTrial("point level with the focus")
        lengths.append(length_from_focus_sq(P_FOCUS, q, Sign.PARABOLIC, Sign.PARABOLIC, Sign.PARABOLIC).len_sq)
    expect(lengths[0] == lengths[1], "length from the p-focus varies", kind=kind, p=p, image=image, lengths=lengths)


@register_check("cayley.unit-disk-forms", DISK_KINDS, exact=False)
def disk_forms(rng, kind):
    """Every parabolic description is 1 on the unit cycle"""
    u = float(rng.uniform(-3.0, 3.0))
    on = Point(u, -1.0 - kind.sigma_breve * u * u)
    forms = unit_disk_forms(kind, on)
    for name in ("centre", "h_focus", "p_focus"):
        value = getattr(forms, name)
        if value is None:
            continue
        expect(math.isclose(value, 1.0, rel_tol=1e-9), f"{name} form is not 1 on the unit cycle", kind=kind, p=on, forms=forms)

    inside = cayley_point(kind, randomgen.point_float(rng, upper=True))
    if isinstance(inside, Ideal):
        raise SkipTrial("image at infinity")
    expect(unit_disk_forms(kind, inside).centre < 1, "image of the half-plane has centre form >= 1", kind=kind, p=inside)


@register_check("cayley.sign-convention", PARABOLIC_KINDS, fixed=1)
def sign_convention(rng, kind):
    """The printed parabolic cycle map holds for the Pe transform only.
    Returns the note produced for the other flavours.
    """
    C = Cycle(1, HALF, 1, -1)
    report = cayley_cycle_report(C, kind)
    transported = Cycle(*cayley_cycle_linear(C, kind))
    expect(report.cycle == transported, "reported image is not the transported cycle", kind=kind, report=report.cycle)
    expect(
        (report.note is None) == (printed_parabolic_cycle(C, kind.sigma_breve) == transported),
        "note does not match the printed formula",
        kind=kind,
    )
    if kind.sigma_breve == Sign.ELLIPTIC:
        expect(report.note is None, "printed formula fails for Pe", C=C)
    return None if report.note is None else report.note.as_dict()


@register_check("cayley.inf-f-orthogonality", [(kind, sb) for kind in PARABOLIC_KINDS for sb in Sign.values])
def inf_f_orthogonality(rng, combo):
    """f-orthogonality of an infinitesimal cycle survives the transform"""
    kind, sigma_breve = combo
    ctx = CycleContext.make(sigma=Sign.PARABOLIC, sigma_breve=sigma_breve, s=1, varsigma=randomgen.sign(rng))
    p = randomgen.point(rng, upper=True)
    ic = infinitesimal_cycle(p.u, p.v, ctx, order=5)

    C = randomgen.cycle(rng)
    if rng.integers(2):
        C = randomgen.through(C, p, Sign.PARABOLIC)

    try:
        before = f_residual(ic.quadruple, C, ctx)
        after = f_residual(cayley_cycle_linear(ic.quadruple, kind), Cycle(*cayley_cycle_linear(C, kind)), ctx)
    except DivisionLeadingZero:
        raise SkipTrial("transported n vanishes")

    expect(
        (eps_order(before) >= 2) == (eps_order(after) >= 2),
        "f-orthogonality changes under the transform",
        kind=kind,
        focus=p,
        C=C,
        before=before,
        after=after,
    )
    expect(before.c0 == after.c0 and before.c1 == after.c1, "low order terms change", kind=kind, focus=p, C=C)
