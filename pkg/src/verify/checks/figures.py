#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from src.figures.catalog import build_figure, figure_names
from src.outfmt import SVGEmitter
from src.verify.suite import expect, register_check


@register_check("figures.render", figure_names(), fixed=1, exact=False)
def render(rng, name):
    """Every vertex lies on its cycle and two builds render the same bytes"""
    figure = build_figure(name)
    expect(bool(figure.panels), "figure has no panels", figure=name)
    figure.validate()

    emitter = SVGEmitter()
    expect(emitter.render(figure) == emitter.render(build_figure(name)), "rendering is not deterministic", figure=name)
