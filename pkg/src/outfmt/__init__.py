#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .emitter import FigureEmitter
from .svg import SVGEmitter


__all__ = [
    "FigureEmitter",
    "SVGEmitter",
]
