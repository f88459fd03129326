#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Importing a module registers its checks
from . import clifford, moebius, cycles, relations, metric, infinitesimal, cayley, figures  # noqa: F401

__all__ = ["clifford", "moebius", "cycles", "relations", "metric", "infinitesimal", "cayley", "figures"]
