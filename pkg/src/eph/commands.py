#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Subcommand handlers. Each takes a decoded JSON document and the
# signature context and returns the JSON result. The command line tool
# and the HTTP service share them.
# ----------------------------------------------------------------------

from typing import Any, Callable, Dict

from src.api.constants import BACKEND, BRANCH, FAMILY, LENGTH
from src.api.errors import FocusUndefined, InvalidInputError
from src.cayley import CayleyKind, all_kinds, cayley_cycle_report, cayley_point
from src.clifford.scalar import scalar_to_json
from src.cycles.context import CycleContext
from src.cycles.fsc import center, det_cycle, focus, inner_re, reflect, sl2_transform
from src.metric import LengthKind, length_from_focus_sq, signed_sqrt
from src.moebius.action import moebius_apply
from src.moebius.iwasawa import iwasawa
from src.moebius.sl2 import rational_subgroup_element
from src.relations import (
    cycle_moebius_point,
    f_ghost_cycle,
    f_orthogonal,
    f_orthogonality_trace,
    ghost_cycle,
    intersect_cycles,
    orthogonal,
)
from . import jsonio

__all__ = ["COMMANDS", "Handler", "transform", "relate", "measure", "cayley", "cayley_kind"]

Document = Dict[str, Any]
Handler = Callable[[Document, CycleContext, BACKEND], Document]

COMMANDS: Dict[str, Handler] = {}


def register_command(name: str) -> Callable[[Handler], Handler]:
    def decorator(func: Handler) -> Handler:
        COMMANDS[name] = func
        return func

    return decorator


def _require(document: Document, *keys: str) -> None:
    missing = [k for k in keys if k not in document]
    if missing:
        raise InvalidInputError(f"Missing field(s) {', '.join(missing)}")


def _group_element(document: Document, ctx: CycleContext, backend: BACKEND):
    """Either "g": [a, b, c, d] or "subgroup": {"family": "K", "q": "1/2"}"""
    if "g" in document:
        return jsonio.read_sl2(document["g"], backend)

    if "subgroup" in document:
        subgroup = document["subgroup"]
        if not isinstance(subgroup, dict):
            raise InvalidInputError(f"Invalid subgroup '{subgroup}'")
        _require(subgroup, "family", "q")
        try:
            family = FAMILY(subgroup["family"])
        except ValueError:
            raise InvalidInputError(f"Unknown subgroup '{subgroup['family']}'")
        return rational_subgroup_element(family, jsonio.read_scalar(subgroup["q"], backend), ctx.sigma)

    raise InvalidInputError("Missing field 'g' (or 'subgroup')")


def _cycle_summary(C, ctx: CycleContext) -> Document:
    result = {"cycle": jsonio.write_cycle(C), "det": scalar_to_json(det_cycle(C, ctx)), "center": jsonio.write_point(center(C, ctx.varsigma))}
    try:
        result["focus"] = jsonio.write_point(focus(C, ctx.varsigma).point)
    except FocusUndefined:
        result["focus"] = None
    return result


@register_command("transform")
def transform(document: Document, ctx: CycleContext, backend: BACKEND) -> Document:
    """Moebius action of g on a point and/or a cycle"""
    g = _group_element(document, ctx, backend)
    if "point" not in document and "cycle" not in document:
        raise InvalidInputError("Nothing to transform: give a 'point' or a 'cycle'")

    result: Document = {"context": ctx.as_dict(), "g": [scalar_to_json(x) for x in g]}
    if "point" in document:
        result["point"] = jsonio.write_point(moebius_apply(g, jsonio.read_point(document["point"], backend), ctx.sigma))

    if "cycle" in document:
        image = sl2_transform(jsonio.read_cycle(document["cycle"], backend), g, ctx)
        result.update(_cycle_summary(image, ctx))

    if document.get("iwasawa"):
        result["iwasawa"] = iwasawa(g)._asdict()

    return result


def _two_cycles(document: Document, backend: BACKEND):
    _require(document, "cycles")
    cycles = document["cycles"]
    if not isinstance(cycles, list) or len(cycles) != 2:
        raise InvalidInputError("'cycles' must hold exactly two cycles")
    return tuple(jsonio.read_cycle(c, backend) for c in cycles)


@register_command("relate")
def relate(document: Document, ctx: CycleContext, backend: BACKEND) -> Document:
    """orthogonal, f_orthogonal, reflect, intersect (two cycles);
    ghost, f_ghost (one cycle); invert (a cycle and a point)
    """
    _require(document, "relation")
    relation = document["relation"]
    result: Document = {"context": ctx.as_dict(), "relation": relation}

    if relation in ("orthogonal", "f_orthogonal", "reflect", "intersect"):
        C1, C2 = _two_cycles(document, backend)
        if relation == "orthogonal":
            result.update(holds=orthogonal(C1, C2, ctx), inner=scalar_to_json(inner_re(C1, C2, ctx)))
        elif relation == "f_orthogonal":
            result.update(holds=f_orthogonal(C1, C2, ctx), trace=scalar_to_json(f_orthogonality_trace(C1, C2, ctx)))
        elif relation == "reflect":
            result["cycle"] = jsonio.write_cycle(reflect(C1, C2, ctx))
        else:
            result["points"] = [jsonio.write_point(p) for p in intersect_cycles(C1, C2, ctx.sigma)]
        return result

    _require(document, "cycle")
    C = jsonio.read_cycle(document["cycle"], backend)

    if relation in ("ghost", "f_ghost"):
        ghost = ghost_cycle(C, ctx) if relation == "ghost" else f_ghost_cycle(C, ctx)
        result.update(_cycle_summary(ghost, ctx))
        return result

    if relation == "invert":
        _require(document, "point")
        p = jsonio.read_point(document["point"], backend)
        result["point"] = jsonio.write_point(cycle_moebius_point(C, p, ctx.sigma, ctx.sigma_breve))
        return result

    raise InvalidInputError(f"Unknown relation '{relation}'")


@register_command("measure")
def measure(document: Document, ctx: CycleContext, backend: BACKEND) -> Document:
    """Squared distance or length between two points"""
    _require(document, "kind", "points")
    points = document["points"]
    if not isinstance(points, list) or len(points) != 2:
        raise InvalidInputError("'points' must hold exactly two points")

    try:
        kind = LengthKind.make(document["kind"], ctx.varsigma, document.get("branch", BRANCH.PLUS))
    except ValueError:
        raise InvalidInputError(f"Invalid length kind '{document['kind']}' or branch")

    p1, p2 = (jsonio.read_point(p, backend) for p in points)
    result: Document = {"context": ctx.as_dict(), "kind": str(kind)}

    if kind.kind == LENGTH.FROM_FOCUS:
        focal = length_from_focus_sq(p1, p2, ctx.sigma, ctx.sigma_breve, kind.varsigma, kind.branch)
        value = focal.len_sq
        result.update(p=scalar_to_json(focal.p), branch=kind.branch.value)
    else:
        value = kind.length_sq(p1, p2, ctx.sigma, ctx.sigma_breve)

    result.update(value=scalar_to_json(value), length=signed_sqrt(value))
    return result


def cayley_kind(name: str) -> CayleyKind:
    kinds = {kind.name: kind for kind in all_kinds()}
    if name not in kinds:
        raise InvalidInputError(f"Unknown Cayley transform '{name}'. Available: {', '.join(kinds)}")
    return kinds[name]


@register_command("cayley")
def cayley(document: Document, ctx: CycleContext, backend: BACKEND) -> Document:
    """Cayley image of a point and/or a cycle. The context is not used:
    the kind fixes the signatures.
    """
    _require(document, "kind")
    kind = cayley_kind(document["kind"])
    if "point" not in document and "cycle" not in document:
        raise InvalidInputError("Nothing to transform: give a 'point' or a 'cycle'")

    result: Document = {"kind": kind.name}
    if "point" in document:
        result["point"] = jsonio.write_point(cayley_point(kind, jsonio.read_point(document["point"], backend)))

    if "cycle" in document:
        report = cayley_cycle_report(jsonio.read_cycle(document["cycle"], backend), kind)
        result["cycle"] = jsonio.write_cycle(report.cycle)
        result["note"] = None if report.note is None else report.note.as_dict()

    return result
