#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# --------------------------------------------
# The figure emission interface.
# --------------------------------------------

from abc import ABC, abstractmethod


class FigureEmitter(ABC):
    """The base figure emission interface."""

    @abstractmethod
    def render(self, figure) -> bytes:
        pass

    def emit(self, output_filename: str, figure) -> None:
        """Writes the rendered figure."""
        with open(output_filename, "wb") as f:
            f.write(self.render(figure))
