#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .orthogonality import orthogonal, orthogonal_form, f_orthogonal, f_orthogonal_closed_form, f_orthogonality_trace
from .orthogonality import f_orthogonal_form
from .ghost import ghost_cycle, f_ghost_cycle
from .inversion import (
    cycle_moebius_point,
    cycle_conjugate,
    reflection_aux_cycle,
    second_kind_inversion,
    second_kind_via_three_inversions,
    real_line_inversion_image,
)
from .intersect import intersect_cycles


__all__ = [
    "orthogonal",
    "orthogonal_form",
    "f_orthogonal",
    "f_orthogonal_closed_form",
    "f_orthogonality_trace",
    "f_orthogonal_form",
    "ghost_cycle",
    "f_ghost_cycle",
    "cycle_moebius_point",
    "cycle_conjugate",
    "reflection_aux_cycle",
    "second_kind_inversion",
    "second_kind_via_three_inversions",
    "real_line_inversion_image",
    "intersect_cycles",
]
