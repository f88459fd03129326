#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .jet import JET_ORDER, Jet, jet_add, jet_mul, jet_div, jet_sqrt, jet_ratio, eps_order
from .infcycle import (
    InfCycle,
    InfOrthogonality,
    infinitesimal_cycle,
    point_on_inf_cycle,
    inf_orthogonality_conditions,
    f_residual,
    reverse_f_residual,
)


__all__ = [
    "JET_ORDER",
    "Jet",
    "jet_add",
    "jet_mul",
    "jet_div",
    "jet_sqrt",
    "jet_ratio",
    "eps_order",
    "InfCycle",
    "InfOrthogonality",
    "infinitesimal_cycle",
    "point_on_inf_cycle",
    "inf_orthogonality_conditions",
    "f_residual",
    "reverse_f_residual",
]
