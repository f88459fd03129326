#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim:ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Copyleft (K), EPH geometry kernel contributors
#
# This program is Free Software and is released under the terms of
#                    the GNU General License
# ----------------------------------------------------------------------


# ------------------------- ERROR exception classes ---------------------------

__all__ = [
    "Error",
    "GeometryError",
    "InvalidInputError",
    "InternalError",
    "ZeroDivisor",
    "SignatureMismatch",
    "NotExact",
    "InvalidSign",
    "NotSL2",
    "NotFactorable",
    "DegenerateCurvature",
    "NotNormalizable",
    "FocusUndefined",
    "ZeroCycle",
    "GhostUndefined",
    "NegativeDiscriminant",
    "FlatCycle",
    "DegenerateDenominator",
    "UndefinedParabolicCentreLength",
    "NegativeRadicand",
    "CoincidentOrdinates",
    "NonPositiveV",
    "DivisionLeadingZero",
    "SqrtNonPositiveLead",
    "ParabolicNotSimilarity",
    "EmptyLocus",
    "UnknownFigure",
    "InsufficientPoints",
]


class Error(Exception):
    """Base class for exceptions in this module."""

    def __init__(self, msg="Unknown error"):
        self.msg = msg

    def __str__(self):
        return self.msg


class GeometryError(Error):
    """A request hit a degenerate or undefined configuration."""


class InvalidInputError(Error):
    """Unparsable scalars, JSON documents or command line values."""


class InternalError(Error):
    def __init__(self, msg):
        self.msg = msg


class ZeroDivisor(GeometryError):
    def __init__(self, value=None):
        super().__init__("Division by a zero divisor" if value is None else f"'{value}' is not invertible")
        self.value = value


class SignatureMismatch(GeometryError):
    def __init__(self, left, right):
        super().__init__(f"Signature mismatch: {left} vs {right}")


class NotExact(GeometryError):
    def __init__(self, value):
        super().__init__(f"'{value}' has no exact rational square root")
        self.value = value


class InvalidSign(GeometryError):
    def __init__(self, value):
        super().__init__(f"Invalid sign '{value}'. Must be one of -1, 0, 1")
        self.value = value


class NotSL2(GeometryError):
    def __init__(self, det):
        super().__init__(f"Matrix determinant must be 1, got {det}")
        self.det = det


class NotFactorable(GeometryError):
    def __init__(self, msg="Element maps e1 off the upper half-plane; it does not factor without the flip"):
        super().__init__(msg)


class DegenerateCurvature(GeometryError):
    def __init__(self, t, sigma):
        super().__init__(f"K-orbit through (0, {t}) has no curvature for sigma={sigma} (1 + sigma*t^2 = 0)")


class NotNormalizable(GeometryError):
    def __init__(self, reason: str):
        super().__init__(f"Cycle cannot be normalized: {reason}")
        self.reason = reason


class FocusUndefined(GeometryError):
    def __init__(self, cycle):
        super().__init__(f"Focus of {cycle} is undefined (n*k = 0)")


class ZeroCycle(GeometryError):
    def __init__(self):
        super().__init__("A cycle cannot be the zero quadruple")


class GhostUndefined(GeometryError):
    def __init__(self, reason: str):
        super().__init__(f"Ghost cycle undefined: {reason}")


class NegativeDiscriminant(GeometryError):
    def __init__(self, value):
        super().__init__(f"Negative discriminant {value}")
        self.value = value


class FlatCycle(GeometryError):
    def __init__(self, cycle):
        super().__init__(f"Cycle {cycle} is flat (k = 0)")


class DegenerateDenominator(GeometryError):
    def __init__(self, what: str = "distance"):
        super().__init__(f"Degenerate denominator evaluating {what}")


class UndefinedParabolicCentreLength(GeometryError):
    def __init__(self):
        super().__init__("Length from the p-centre is undefined in the parabolic point space")


class NegativeRadicand(GeometryError):
    def __init__(self, value):
        super().__init__(f"Negative radicand {value}")
        self.value = value


class CoincidentOrdinates(GeometryError):
    def __init__(self):
        super().__init__("Length from the p-focus needs points with distinct v")


class NonPositiveV(GeometryError):
    def __init__(self, point):
        super().__init__(f"Path point {point} is not in the upper half-plane")


class DivisionLeadingZero(GeometryError):
    def __init__(self):
        super().__init__("Jet division by a jet with zero leading coefficient")


class SqrtNonPositiveLead(GeometryError):
    def __init__(self, value):
        super().__init__(f"Jet square root needs a positive leading coefficient, got {value}")


class ParabolicNotSimilarity(GeometryError):
    def __init__(self):
        super().__init__("The parabolic Cayley transform is not a similarity; use the cycle map instead")


class EmptyLocus(GeometryError):
    def __init__(self, cycle=None):
        super().__init__("Cycle has no real points" if cycle is None else f"Cycle {cycle} has no real points")
        self.cycle = cycle


class UnknownFigure(GeometryError):
    def __init__(self, name: str, available=()):
        msg = f"Unknown figure '{name}'"
        if available:
            msg += f". Available: {', '.join(available)}"
        super().__init__(msg)
        self.name = name


class InsufficientPoints(GeometryError):
    def __init__(self, count: int):
        super().__init__(f"Cannot fit a cycle through {count} point(s) in general position")
