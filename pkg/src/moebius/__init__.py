#!/usr/bin/env python
# -*- coding: utf-8 -*-

# The action, Iwasawa and fix group modules depend on src.cycles and are
# imported by their own path.

from .points import ExtendedPoint, Ideal, Point
from .sl2 import IDENTITY, SL2Elem, fix_subgroup_element, rational_subgroup_element, subgroup_element


__all__ = [
    "ExtendedPoint",
    "IDENTITY",
    "Ideal",
    "Point",
    "SL2Elem",
    "fix_subgroup_element",
    "rational_subgroup_element",
    "subgroup_element",
]
