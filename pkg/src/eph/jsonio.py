#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# JSON documents of the command line tool and of the HTTP service.
# Rationals travel as "p/q" strings, floats as JSON numbers. Decimal
# literals are read exactly in the exact backend.
# ----------------------------------------------------------------------

import json

from decimal import Decimal
from typing import IO, Any, Dict, Optional, Union

from src.api.constants import BACKEND
from src.api.errors import InvalidInputError
from src.clifford.scalar import Scalar, parse_scalar, scalar_to_json
from src.cycles.context import CycleContext
from src.cycles.cycle import Cycle
from src.moebius.points import ExtendedPoint, Ideal, Point
from src.moebius.sl2 import SL2Elem

__all__ = [
    "load_document",
    "dump_document",
    "read_scalar",
    "read_point",
    "read_cycle",
    "read_sl2",
    "read_context",
    "write_point",
    "write_cycle",
]

CYCLE_KEYS = ("k", "l", "n", "m")
SL2_KEYS = ("a", "b", "c", "d")
CONTEXT_KEYS = ("sigma", "sigma_breve", "s", "varsigma")


def load_document(stream: IO[str]) -> Dict[str, Any]:
    """Reads one JSON object, keeping decimal literals as Decimal"""
    try:
        document = json.load(stream, parse_float=Decimal)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Invalid JSON document: {e}")

    if not isinstance(document, dict):
        raise InvalidInputError("The JSON document must be an object")
    return document


def dump_document(document: Dict[str, Any], stream: IO[str], indent: Optional[int] = 2) -> None:
    json.dump(document, stream, indent=indent or None)
    stream.write("\n")


def read_scalar(value, backend: BACKEND = BACKEND.EXACT) -> Scalar:
    if isinstance(value, bool) or value is None:
        raise InvalidInputError(f"Invalid number '{value}'")
    if isinstance(value, (Decimal, float)):
        # decimal literal as written, whatever the JSON reader produced
        value = str(value)
    return parse_scalar(value, BACKEND(backend))


def _fields(value, keys, what: str) -> list:
    if isinstance(value, dict):
        missing = [k for k in keys if k not in value]
        if missing:
            raise InvalidInputError(f"{what} is missing {', '.join(missing)}")
        return [value[k] for k in keys]

    if isinstance(value, (list, tuple)) and len(value) == len(keys):
        return list(value)

    raise InvalidInputError(f"Invalid {what} '{value}'")


def read_point(value, backend: BACKEND = BACKEND.EXACT) -> Point:
    """[u, v] or {"u": ..., "v": ...}"""
    return Point(*(read_scalar(x, backend) for x in _fields(value, ("u", "v"), "point")))


def read_cycle(value, backend: BACKEND = BACKEND.EXACT) -> Cycle:
    """{"k": ..., "l": ..., "n": ..., "m": ...} or a list of four numbers"""
    return Cycle(*(read_scalar(x, backend) for x in _fields(value, CYCLE_KEYS, "cycle")))


def read_sl2(value, backend: BACKEND = BACKEND.EXACT) -> SL2Elem:
    return SL2Elem.make(*(read_scalar(x, backend) for x in _fields(value, SL2_KEYS, "SL(2,R) element")))


def read_context(value: Optional[dict], default: CycleContext) -> CycleContext:
    """Signs given in the document override the default context"""
    if value is None:
        return default
    if not isinstance(value, dict):
        raise InvalidInputError(f"Invalid context '{value}'")

    unknown = set(value) - set(CONTEXT_KEYS)
    if unknown:
        raise InvalidInputError(f"Unknown context field(s) {', '.join(sorted(unknown))}")
    return default.with_(**value)


def write_point(p: ExtendedPoint) -> Union[list, dict]:
    if isinstance(p, Ideal):
        return {
            "at_infinity": True,
            "cycle": write_cycle(p.cycle),
            "direction": None if p.direction is None else [scalar_to_json(x) for x in p.direction],
        }
    return [scalar_to_json(p.u), scalar_to_json(p.v)]


def write_cycle(C: Cycle) -> Dict[str, Union[str, float]]:
    return {key: scalar_to_json(x) for key, x in zip(CYCLE_KEYS, C)}
