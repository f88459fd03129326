#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# --------------------------------------------
# SVG 1.1 output of figures. Panels are laid
# out on a grid; each maps its viewport with
# v pointing up.
# --------------------------------------------

import xml.etree.ElementTree as etree

from xml.etree.ElementTree import Element, SubElement

from src.figures.scene import Figure, Marker, Polyline, Scene, Style
from .emitter import FigureEmitter

__all__ = ["SVGEmitter"]

SVG_NAMESPACE = "http://www.w3.org/2000/svg"


def fmt(x: float) -> str:
    return "%.6f" % x


class SVGEmitter(FigureEmitter):
    """Writes figures as SVG documents"""

    PANEL_WIDTH = 240
    MARGIN = 20
    TITLE_HEIGHT = 20
    MARKER_RADIUS = 2.5
    AXIS_STROKE = "#bbbbbb"

    def panel_size(self, panel: Scene):
        view = panel.viewport
        return self.PANEL_WIDTH, self.PANEL_WIDTH * view.height / view.width

    def render(self, figure: Figure) -> bytes:
        columns = max(1, min(figure.columns, len(figure.panels)))
        rows = (len(figure.panels) + columns - 1) // columns
        width, height = self.panel_size(figure.panels[0]) if figure.panels else (self.PANEL_WIDTH, self.PANEL_WIDTH)
        cell_w = width + self.MARGIN
        cell_h = height + self.MARGIN + self.TITLE_HEIGHT

        root = Element(
            "svg",
            {
                "xmlns": SVG_NAMESPACE,
                "version": "1.1",
                "width": fmt(columns * cell_w + self.MARGIN),
                "height": fmt(rows * cell_h + self.MARGIN),
            },
        )
        SubElement(root, "title").text = figure.name
        SubElement(root, "desc").text = figure.caption

        for i, panel in enumerate(figure.panels):
            x0 = self.MARGIN + (i % columns) * cell_w
            y0 = self.MARGIN + (i // columns) * cell_h
            self.panel(root, panel, i, x0, y0)

        return etree.tostring(root, encoding="utf-8", xml_declaration=True)

    def panel(self, root: Element, panel: Scene, index: int, x0: float, y0: float) -> None:
        width, height = self.panel_size(panel)
        view = panel.viewport
        scale = width / view.width

        def to_px(p):
            return fmt((p[0] - view.umin) * scale), fmt((view.vmax - p[1]) * scale)

        text = SubElement(root, "text", {"x": fmt(x0), "y": fmt(y0 + self.TITLE_HEIGHT - 6), "font-size": "12"})
        text.text = panel.title

        clip_id = f"panel{index}"
        clip = SubElement(root, "clipPath", {"id": clip_id})
        SubElement(clip, "rect", {"x": "0", "y": "0", "width": fmt(width), "height": fmt(height)})

        group = SubElement(
            root,
            "g",
            {"transform": f"translate({fmt(x0)},{fmt(y0 + self.TITLE_HEIGHT)})", "clip-path": f"url(#{clip_id})"},
        )
        SubElement(
            group,
            "rect",
            {"x": "0", "y": "0", "width": fmt(width), "height": fmt(height), "fill": "none", "stroke": "black"},
        )
        self.axes(group, panel, to_px)

        for element in panel.elements:
            if isinstance(element, Polyline):
                self.polyline(group, element, to_px)
            elif isinstance(element, Marker):
                self.marker(group, element, to_px)

    def axes(self, group: Element, panel: Scene, to_px) -> None:
        view = panel.viewport
        attrs = {"stroke": self.AXIS_STROKE, "stroke-width": "0.5"}
        if view.vmin <= 0 <= view.vmax:
            (x1, y1), (x2, y2) = to_px((view.umin, 0)), to_px((view.umax, 0))
            SubElement(group, "line", dict(x1=x1, y1=y1, x2=x2, y2=y2, **attrs))
        if view.umin <= 0 <= view.umax:
            (x1, y1), (x2, y2) = to_px((0, view.vmin)), to_px((0, view.vmax))
            SubElement(group, "line", dict(x1=x1, y1=y1, x2=x2, y2=y2, **attrs))

    @staticmethod
    def stroke(style: Style) -> dict:
        attrs = {"fill": "none", "stroke": style.stroke, "stroke-width": fmt(style.width)}
        if style.dashed:
            attrs["stroke-dasharray"] = "4,3"
        return attrs

    def polyline(self, group: Element, line: Polyline, to_px) -> None:
        if len(set(line.points)) == 1:
            x, y = to_px(line.points[0])
            SubElement(group, "circle", {"cx": x, "cy": y, "r": fmt(self.MARKER_RADIUS), "fill": line.style.stroke})
            return

        points = " ".join("%s,%s" % to_px(p) for p in line.points)
        SubElement(group, "polygon" if line.closed else "polyline", dict(points=points, **self.stroke(line.style)))

    def marker(self, group: Element, marker: Marker, to_px) -> None:
        x, y = to_px(marker.point)
        SubElement(group, "circle", {"cx": x, "cy": y, "r": fmt(self.MARKER_RADIUS), "fill": marker.style.stroke})
        if marker.label:
            label = SubElement(group, "text", {"x": fmt(float(x) + 4), "y": fmt(float(y) - 4), "font-size": "10"})
            label.text = marker.label
