#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

# ----------------------------------------------------------------------
# Cycles: projective quadruples (k, l, n, m) of the equation
#     k(u^2 - sigma v^2) - 2lu - 2nv + m = 0
# ----------------------------------------------------------------------

from fractions import Fraction
from typing import Iterator, List, Tuple, Union

from src.api.errors import ZeroCycle
from src.clifford.scalar import Scalar, as_scalar, is_exact, is_zero, isclose, scalar_sqrt
from src.clifford.sign import Sign

__all__ = [
    "Cycle",
    "AllReals",
    "ALL_REALS",
    "REAL_LINE",
    "UNIT_CYCLE",
    "INFINITY",
    "value_at",
    "zero_radius_cycle",
    "is_self_adjoint",
    "is_infinity",
    "roots",
]

# Relative threshold below which a float coordinate counts as zero when
# choosing the canonical representative
CANONICAL_EPS = 1e-12


class Cycle:
    """A cycle given by its projective quadruple. Two cycles compare equal
    when their quadruples are proportional.
    """

    __slots__ = ("k", "l", "n", "m")

    def __init__(self, k: Scalar, l: Scalar, n: Scalar, m: Scalar):
        values = (k, l, n, m)
        if not all(is_exact(x) for x in values):
            values = tuple(float(x) for x in values)
        else:
            values = tuple(Fraction(x) for x in values)

        if all(x == 0 for x in values):
            raise ZeroCycle()

        for name, x in zip(self.__slots__, values):
            object.__setattr__(self, name, x)

    def __setattr__(self, key, value):
        raise AttributeError("Cycle is immutable")

    @classmethod
    def of(cls, values) -> "Cycle":
        if isinstance(values, Cycle):
            return values
        return cls(*(as_scalar(x) if isinstance(x, str) else x for x in values))

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.k, self.l, self.n, self.m))

    def __getitem__(self, item):
        return self.quadruple[item]

    def __len__(self):
        return 4

    @property
    def quadruple(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return self.k, self.l, self.n, self.m

    @property
    def is_exact(self) -> bool:
        return is_exact(self.k)

    def to_float(self) -> "Cycle":
        return Cycle(*(float(x) for x in self))

    def scale(self, factor: Scalar) -> "Cycle":
        return Cycle(*(x * factor for x in self))

    def canonical(self) -> "Cycle":
        """The representative with first nonzero coordinate 1 (exact), or
        unit max-norm with positive first nonzero coordinate (float)
        """
        if self.is_exact:
            lead = next(x for x in self if x != 0)
            return Cycle(*(x / lead for x in self))

        top = max(abs(x) for x in self)
        lead = next(x for x in self if abs(x) > CANONICAL_EPS * top)
        factor = top if lead > 0 else -top
        return Cycle(*(x / factor for x in self))

    def __eq__(self, other):
        if not isinstance(other, Cycle):
            return NotImplemented

        if self.is_exact and other.is_exact:
            a, b = self.quadruple, other.quadruple
            return all(a[i] * b[j] == a[j] * b[i] for i in range(4) for j in range(i + 1, 4))

        return self.isclose(other)

    def __hash__(self):
        return hash(self.canonical().quadruple)

    def isclose(self, other: "Cycle", rtol: float = 1e-9, atol: float = 1e-9) -> bool:
        """Projective equality up to float tolerance"""
        a, b = self.to_float().canonical(), other.to_float().canonical()
        return all(isclose(x, y, rtol, atol) for x, y in zip(a, b))

    def __repr__(self):
        return f"Cycle({', '.join(str(x) for x in self)})"

    def value_at(self, p, sigma: Sign) -> Scalar:
        return value_at(self, p, sigma)


class AllReals:
    """Root set of a cycle containing the whole real line"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL_REALS"


ALL_REALS = AllReals()

REAL_LINE = Cycle(0, 0, 1, 0)
UNIT_CYCLE = Cycle(1, 0, 0, -1)
INFINITY = Cycle(0, 0, 0, 1)


def value_at(C: Cycle, p, sigma: Sign) -> Scalar:
    """k(u^2 - sigma v^2) - 2lu - 2nv + m"""
    k, l, n, m = C
    u, v = p
    return k * (u * u - sigma * v * v) - 2 * l * u - 2 * n * v + m


def zero_radius_cycle(p, sigma_breve: Sign) -> Cycle:
    """(1, u, v, u^2 - sigma_breve v^2)"""
    u, v = p
    return Cycle(1, u, v, u * u - sigma_breve * v * v)


def is_self_adjoint(C: Cycle) -> bool:
    return is_zero(C.canonical().n)


def is_infinity(C: Cycle) -> bool:
    k, l, n, _ = C.canonical()
    return is_zero(k) and is_zero(l) and is_zero(n)


def roots(C: Cycle) -> Union[List[Scalar], AllReals]:
    """Real solutions of k u^2 - 2 l u + m = 0, in increasing order"""
    k, l, _, m = C

    if is_zero(k):
        if not is_zero(l):
            return [m / (2 * l)]
        return ALL_REALS if is_zero(m) else []

    disc = l * l - k * m
    if is_zero(disc):
        return [l / k]
    if disc < 0:
        return []

    r = scalar_sqrt(disc)
    return sorted([(l - r) / k, (l + r) / k])
