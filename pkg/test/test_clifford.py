import logging
from fractions import Fraction

import pytest

from src.api.constants import BACKEND
from src.api.errors import InvalidInputError, InvalidSign, NotExact, SignatureMismatch, ZeroDivisor
from src.clifford import (
    CliffNum,
    Sign,
    chi,
    cliff_inverse,
    exact_sqrt,
    parse_scalar,
    scalar_cliff,
    scalar_sqrt,
    scalar_to_json,
    vector_to_cliff,
)


def test_sign():
    log = logging.getLogger()
    log.debug('Testing signs')

    assert Sign.values == (Sign.ELLIPTIC, Sign.PARABOLIC, Sign.HYPERBOLIC)
    assert Sign.of("1") == Sign.HYPERBOLIC
    assert Sign.of(-1) == Sign.ELLIPTIC
    assert [s.letter for s in Sign.values] == ["e", "p", "h"]
    assert chi(0) == 1 and chi(-3) == -1

    for bad in (2, 0.5, "0.5", "x"):
        with pytest.raises(InvalidSign):
            Sign.of(bad)


def test_scalars():
    log = logging.getLogger()
    log.debug('Testing scalar parsing and serialization')

    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("0.125") == Fraction(1, 8)
    assert parse_scalar("0.125", BACKEND.FLOAT) == 0.125
    assert isinstance(parse_scalar("2", BACKEND.FLOAT), float)

    assert scalar_to_json(Fraction(3, 4)) == "3/4"
    assert scalar_to_json(Fraction(2)) == "2"
    assert scalar_to_json(0.5) == 0.5

    with pytest.raises(InvalidInputError):
        parse_scalar("three")
    with pytest.raises(InvalidInputError):
        parse_scalar("1/0")


def test_square_roots():
    log = logging.getLogger()
    log.debug('Testing exact and inexact square roots')

    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(NotExact):
        exact_sqrt(Fraction(2))
    with pytest.raises(NotExact):
        scalar_sqrt(Fraction(2), strict=True)

    root = scalar_sqrt(Fraction(2))
    log.debug(f'sqrt(2) degrades to {root}')
    assert isinstance(root, float)
    assert abs(root * root - 2) < 1e-12


def test_generators():
    log = logging.getLogger()
    log.debug('Testing the generator relations')

    for sigma in Sign.values:
        e0 = CliffNum(0, 1, 0, 0, sigma)
        e1 = CliffNum(0, 0, 1, 0, sigma)
        assert e0 * e0 == -1
        assert e1 * e1 == int(sigma)
        assert e0 * e1 == -(e1 * e0)

    w = vector_to_cliff(2, 3, Sign.PARABOLIC)
    assert w * w == -4


def test_inverse():
    log = logging.getLogger()
    log.debug('Testing inverses and zero divisors')

    x = CliffNum(1, 2, 3, 4, Sign.ELLIPTIC)
    assert x.norm() == 30
    assert x * cliff_inverse(x) == 1
    assert cliff_inverse(x) * x == 1

    with pytest.raises(ZeroDivisor):
        cliff_inverse(CliffNum(1, 0, 1, 0, Sign.HYPERBOLIC))


def test_signature_mismatch():
    log = logging.getLogger()
    log.debug('Testing mixed signatures')

    with pytest.raises(SignatureMismatch):
        scalar_cliff(1, Sign.ELLIPTIC) + scalar_cliff(1, Sign.HYPERBOLIC)
    with pytest.raises(SignatureMismatch):
        vector_to_cliff(1, 1, Sign.ELLIPTIC) * vector_to_cliff(1, 1, Sign.PARABOLIC)
