#!/usr/bin/env python
# -*- coding: utf-8 -*-

from .scene import BOLD, DASHED, DEFAULT_VIEWPORT, RENDER_TOL, Figure, Marker, Polyline, Scene, Style, Viewport
from .sampling import residual, sample_cycle
from .catalog import FIGURES, build_figure, figure_names, render_figure


__all__ = [
    "BOLD",
    "DASHED",
    "DEFAULT_VIEWPORT",
    "RENDER_TOL",
    "Figure",
    "Marker",
    "Polyline",
    "Scene",
    "Style",
    "Viewport",
    "residual",
    "sample_cycle",
    "FIGURES",
    "build_figure",
    "figure_names",
    "render_figure",
]
