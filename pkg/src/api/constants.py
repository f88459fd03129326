#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Copyleft (K), EPH geometry kernel contributors
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------

import enum
import os

from typing import Union

from .decorator import classproperty


# -------------------------------------------------
# Global constants
# -------------------------------------------------

# Path to the kernel sources
EPH_ROOT = os.path.abspath(os.path.join(os.path.abspath(os.path.dirname(os.path.abspath(__file__))), os.path.pardir))


# ----------------------------------------------------------------------
# Class enums
# ----------------------------------------------------------------------


@enum.unique
class FAMILY(str, enum.Enum):
    """One-parameter subgroups of SL(2,R)"""

    A = "A"  # dilations
    N = "N"  # shifts
    K = "K"  # rotations
    A_h_fix = "A_h_fix"  # hyperbolic fix group of e1
    N_p_fix = "N_p_fix"  # parabolic fix group of e1
    FIX = "FIX"  # unified fix group of e1 for the given sigma

    @classproperty
    def iwasawa(cls):
        return cls.A, cls.N, cls.K

    @classproperty
    def with_fields(cls):
        """Families with a vector field"""
        return cls.A, cls.N, cls.K, cls.FIX

    @classmethod
    def is_valid(cls, family: Union[str, "FAMILY"]) -> bool:
        return family in set(cls)


@enum.unique
class NORM(str, enum.Enum):
    """Cycle normalization modes"""

    K = "k-norm"
    DET = "det-norm"
    CANONICAL = "canonical"


@enum.unique
class LENGTH(str, enum.Enum):
    """Kinds of length between two points"""

    DISTANCE = "distance"
    FROM_CENTRE = "from_centre"
    FROM_FOCUS = "from_focus"

    @classproperty
    def needs_varsigma(cls):
        return cls.FROM_CENTRE, cls.FROM_FOCUS


@enum.unique
class BRANCH(str, enum.Enum):
    """Sign of the focal parameter (upward / downward parabola)"""

    PLUS = "+"
    MINUS = "-"

    @property
    def sign(self) -> int:
        return 1 if self is BRANCH.PLUS else -1


@enum.unique
class BACKEND(str, enum.Enum):
    EXACT = "exact"
    FLOAT = "float"
