#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .kind import CayleyKind, all_kinds
from .transform import (
    CayleyCycle,
    SignConventionNote,
    cayley_cycle,
    cayley_cycle_linear,
    cayley_cycle_report,
    cayley_point,
    cayley_sl2,
    printed_parabolic_cycle,
    transport_matrix,
    unit_cycle,
)
from .disk import P_FOCUS, DiskForms, fix_orbit_image, in_unit_disk, n_orbit_image, on_unit_cycle, unit_disk_forms


__all__ = [
    "CayleyKind",
    "all_kinds",
    "CayleyCycle",
    "SignConventionNote",
    "cayley_cycle",
    "cayley_cycle_linear",
    "cayley_cycle_report",
    "cayley_point",
    "cayley_sl2",
    "printed_parabolic_cycle",
    "transport_matrix",
    "unit_cycle",
    "P_FOCUS",
    "DiskForms",
    "fix_orbit_image",
    "in_unit_disk",
    "n_orbit_image",
    "on_unit_cycle",
    "unit_disk_forms",
]
