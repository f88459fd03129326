#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Truncated power series in a positive infinitesimal eps:
#     c0 + c1 eps + c2 eps^2 + ... + cN eps^N
# with exact rational coefficients. Products drop powers above N.
# ----------------------------------------------------------------------

import math

from fractions import Fraction
from numbers import Number, Rational
from typing import Union

from src.api.errors import DivisionLeadingZero, InvalidInputError, SqrtNonPositiveLead
from src.clifford.scalar import exact_sqrt

__all__ = [
    "JET_ORDER",
    "Jet",
    "jet_add",
    "jet_mul",
    "jet_div",
    "jet_sqrt",
    "jet_ratio",
    "eps_order",
    "INFINITE_ORDER",
]

JET_ORDER = 3
INFINITE_ORDER = math.inf


def _rational(x) -> Fraction:
    if not isinstance(x, Rational):
        raise InvalidInputError(f"Jets take exact rational coefficients, got '{x}'")
    return Fraction(x)


class Jet:
    """An immutable truncated eps-series. The truncation order is the
    number of coefficients minus one; mixed arithmetic keeps the lower.
    """

    __slots__ = ("coefficients",)

    def __init__(self, *coefficients):
        if not coefficients:
            raise InvalidInputError("A jet needs at least one coefficient")
        object.__setattr__(self, "coefficients", tuple(_rational(c) for c in coefficients))

    def __setattr__(self, key, value):
        raise AttributeError("Jet is immutable")

    @classmethod
    def constant(cls, x, order: int = JET_ORDER) -> "Jet":
        return cls(x, *([0] * order))

    @classmethod
    def eps(cls, power: int = 1, order: int = JET_ORDER) -> "Jet":
        return cls(*(1 if i == power else 0 for i in range(order + 1)))

    @classmethod
    def of(cls, x, order: int = JET_ORDER) -> "Jet":
        return x if isinstance(x, Jet) else cls.constant(x, order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients[i] if i <= self.order else Fraction(0)

    c0 = property(lambda self: self[0])
    c1 = property(lambda self: self[1])
    c2 = property(lambda self: self[2])
    c3 = property(lambda self: self[3])

    def truncate(self, order: int) -> "Jet":
        return Jet(*self.coefficients[: order + 1])

    def _coerce(self, other):
        if isinstance(other, Jet):
            return other
        if isinstance(other, Number):
            return Jet.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return jet_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Jet(*(-c for c in self.coefficients))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return jet_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Number):
            return Jet(*(c * _rational(other) for c in self.coefficients))
        if isinstance(other, Jet):
            return jet_mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return jet_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return jet_div(other, self)

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            return NotImplemented
        result = Jet.constant(1, self.order)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        return all(self[i] == other[i] for i in range(order + 1))

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        terms = [str(self.c0)] + [f"{c}*eps^{i}" for i, c in enumerate(self.coefficients[1:], 1) if c]
        return f"Jet({' + '.join(terms)} + O(eps^{self.order + 1}))"

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def eps_order(self) -> Union[int, float]:
        return eps_order(self)


def jet_add(a: Jet, b: Jet) -> Jet:
    order = min(a.order, b.order)
    return Jet(*(a[i] + b[i] for i in range(order + 1)))


def jet_mul(a: Jet, b: Jet) -> Jet:
    order = min(a.order, b.order)
    return Jet(*(sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(order + 1)))


def jet_div(a: Jet, b: Jet) -> Jet:
    """a / b for b with a nonzero leading coefficient"""
    if b.c0 == 0:
        raise DivisionLeadingZero()

    order = min(a.order, b.order)
    q = []
    for n in range(order + 1):
        q.append((a[n] - sum(b[i] * q[n - i] for i in range(1, n + 1))) / b.c0)
    return Jet(*q)


def jet_sqrt(j: Jet) -> Jet:
    """The series s with s * s = j and s.c0 = sqrt(j.c0)"""
    if j.c0 <= 0:
        raise SqrtNonPositiveLead(j.c0)

    s = [exact_sqrt(j.c0)]
    for n in range(1, j.order + 1):
        s.append((j[n] - sum(s[i] * s[n - i] for i in range(1, n))) / (2 * s[0]))
    return Jet(*s)


def jet_ratio(a: Jet, b: Jet) -> Jet:
    """a / b cancelling the common power of eps. The result is known to
    the order of b less its eps-order.
    """
    shift = eps_order(b)
    if shift == INFINITE_ORDER:
        raise DivisionLeadingZero()
    if eps_order(a) < shift:
        raise DivisionLeadingZero()

    shifted_a = Jet(*a.coefficients[shift:]) if shift <= a.order else Jet(0)
    return jet_div(shifted_a, Jet(*b.coefficients[shift:]))


def eps_order(j: Jet) -> Union[int, float]:
    """Index of the lowest nonzero coefficient; infinite for the zero jet"""
    for i, c in enumerate(j.coefficients):
        if c:
            return i
    return INFINITE_ORDER
