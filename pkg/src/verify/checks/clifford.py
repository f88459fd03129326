#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from fractions import Fraction

from src.clifford.cliffnum import CliffNum, cliff_inverse, scalar_cliff, vector_to_cliff
from src.clifford.scalar import is_zero
from src.clifford.sign import Sign
from src.verify import randomgen
from src.verify.suite import SkipTrial, expect, register_check

SIGMAS = Sign.values


@register_check("clifford.associativity", SIGMAS)
def associativity(rng, sigma):
    x, y, z = (randomgen.cliffnum(rng, sigma) for _ in range(3))
    expect((x * y) * z == x * (y * z), "(xy)z != x(yz)", x=x, y=y, z=z)
    expect(x * (y + z) == x * y + x * z, "x(y + z) != xy + xz", x=x, y=y, z=z)


@register_check("clifford.vector-square", SIGMAS)
def vector_square(rng, sigma):
    u, v = randomgen.rational(rng), randomgen.rational(rng)
    w = vector_to_cliff(u, v, sigma)
    expect(w * w == scalar_cliff(-u * u + sigma * v * v, sigma), "w^2 != -u^2 + sigma v^2", w=w)
    expect(w * w.conjugate() == w.norm(), "w conj(w) != norm(w)", w=w)

    e0 = CliffNum(0, 1, 0, 0, sigma)
    e1 = CliffNum(0, 0, 1, 0, sigma)
    expect((e1 * e0) * (e1 * e0) == sigma, "(e1 e0)^2 != sigma", sigma=sigma)


@register_check("clifford.inverse", SIGMAS)
def inverse(rng, sigma):
    x = randomgen.cliffnum(rng, sigma)
    if is_zero(x.norm()):
        raise SkipTrial("zero divisor")
    expect(x * cliff_inverse(x) == 1, "x x^-1 != 1", x=x)
    expect(cliff_inverse(x) * x == 1, "x^-1 x != 1", x=x)


@register_check("clifford.even-commutative", SIGMAS)
def even_commutative(rng, sigma):
    zero = Fraction(0)
    x = CliffNum(randomgen.rational(rng), zero, zero, randomgen.rational(rng), sigma)
    y = CliffNum(randomgen.rational(rng), zero, zero, randomgen.rational(rng), sigma)
    expect(x * y == y * x, "even elements do not commute", x=x, y=y)
