#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .lengths import (
    LengthKind,
    FocalLength,
    radius_sq,
    distance_sq,
    critical_point,
    length_from_centre_sq,
    centre_auxiliary_cycle,
    focal_parameter,
    length_from_focus_sq,
    focal_auxiliary_cycle,
)
from .oracle import Extremum, distance_extremum_oracle
from .conformal import (
    signed_sqrt,
    conformal_ratio,
    parabolic_focus_limit,
    direction_dependent_limit,
    direction_limit_closed_form,
)
from .perpendicular import length_gradient, perpendicular_direction, is_perpendicular
from .curve import curve_length, moebius_image_path, arc_path


__all__ = [
    "LengthKind",
    "FocalLength",
    "radius_sq",
    "distance_sq",
    "critical_point",
    "length_from_centre_sq",
    "centre_auxiliary_cycle",
    "focal_parameter",
    "length_from_focus_sq",
    "focal_auxiliary_cycle",
    "Extremum",
    "distance_extremum_oracle",
    "signed_sqrt",
    "conformal_ratio",
    "parabolic_focus_limit",
    "direction_dependent_limit",
    "direction_limit_closed_form",
    "length_gradient",
    "perpendicular_direction",
    "is_perpendicular",
    "curve_length",
    "moebius_image_path",
    "arc_path",
]
