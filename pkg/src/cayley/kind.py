#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

from typing import Iterator, NamedTuple, Optional

from src.clifford.cliffnum import CliffNum, scalar_cliff
from src.clifford.matrix import CliffMatrix
from src.clifford.sign import Sign

__all__ = ["CayleyKind", "all_kinds"]


class CayleyKind(NamedTuple):
    """A Cayley transform of the sigma-plane. The matrix is
    [[1, -e1], [sigma_breve e1, 1]] over Cl(sigma), with sigma_breve = sigma
    unless the plane is parabolic, where sigma_breve picks the flavour
    (0 is the shift one unit down).
    """

    sigma: Sign
    sigma_breve: Sign

    @classmethod
    def make(cls, sigma, sigma_breve: Optional[int] = None) -> "CayleyKind":
        sigma = Sign.of(sigma)
        if sigma != Sign.PARABOLIC or sigma_breve is None:
            return cls(sigma, sigma)
        return cls(sigma, Sign.of(sigma_breve))

    @property
    def name(self) -> str:
        if self.sigma != Sign.PARABOLIC:
            return self.sigma.letter.upper()
        return "P" + self.sigma_breve.letter

    @property
    def is_parabolic(self) -> bool:
        return self.sigma == Sign.PARABOLIC

    def _e1(self, factor: int) -> CliffNum:
        return CliffNum(0, 0, factor, 0, self.sigma)

    def matrix(self) -> CliffMatrix:
        one = scalar_cliff(1, self.sigma)
        return CliffMatrix(one, self._e1(-1), self._e1(int(self.sigma_breve)), one)

    def adjugate(self) -> CliffMatrix:
        """matrix() * adjugate() = (1 + sigma sigma_breve) I"""
        one = scalar_cliff(1, self.sigma)
        return CliffMatrix(one, self._e1(1), self._e1(-int(self.sigma_breve)), one)

    def __str__(self):
        return self.name


def all_kinds() -> Iterator[CayleyKind]:
    """E, Pe, Pp, Ph and H"""
    yield CayleyKind.make(Sign.ELLIPTIC)
    for sigma_breve in Sign.values:
        yield CayleyKind.make(Sign.PARABOLIC, sigma_breve)
    yield CayleyKind.make(Sign.HYPERBOLIC)
