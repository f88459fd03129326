#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .cycle import (
    ALL_REALS,
    INFINITY,
    REAL_LINE,
    UNIT_CYCLE,
    AllReals,
    Cycle,
    is_infinity,
    is_self_adjoint,
    roots,
    value_at,
    zero_radius_cycle,
)
from .context import CycleContext, all_contexts
from .fsc import center, det_cycle, focus, fsc_matrix, inner, inner_re, normalize, reflect, sl2_transform


__all__ = [
    "ALL_REALS",
    "INFINITY",
    "REAL_LINE",
    "UNIT_CYCLE",
    "AllReals",
    "Cycle",
    "CycleContext",
    "all_contexts",
    "center",
    "det_cycle",
    "focus",
    "fsc_matrix",
    "inner",
    "inner_re",
    "is_infinity",
    "is_self_adjoint",
    "normalize",
    "reflect",
    "roots",
    "sl2_transform",
    "value_at",
    "zero_radius_cycle",
]
