#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .sign import Sign, chi
from .scalar import Scalar, as_scalar, parse_scalar, scalar_to_json, scalar_sqrt, exact_sqrt, is_zero, isclose
from .cliffnum import CliffNum, cliff_mul, cliff_inverse, vector_to_cliff, scalar_cliff
from .matrix import CliffMatrix


__all__ = [
    "Sign",
    "chi",
    "Scalar",
    "as_scalar",
    "parse_scalar",
    "scalar_to_json",
    "scalar_sqrt",
    "exact_sqrt",
    "is_zero",
    "isclose",
    "CliffNum",
    "cliff_mul",
    "cliff_inverse",
    "vector_to_cliff",
    "scalar_cliff",
    "CliffMatrix",
]
