#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import itertools

from typing import Iterator, NamedTuple, Optional

from src.api.config import OPTIONS
from src.clifford.sign import Sign

__all__ = ["CycleContext", "all_contexts"]


class CycleContext(NamedTuple):
    """Signatures of the point space (sigma), the cycle space
    (sigma_breve), the multiplier of the FSC matrix (s) and the
    centre/focus flavour (varsigma)
    """

    sigma: Sign = Sign.ELLIPTIC
    sigma_breve: Sign = Sign.ELLIPTIC
    s: Sign = Sign.HYPERBOLIC
    varsigma: Sign = Sign.ELLIPTIC

    @classmethod
    def make(
        cls,
        sigma=Sign.ELLIPTIC,
        sigma_breve: Optional[int] = None,
        s=Sign.HYPERBOLIC,
        varsigma: Optional[int] = None,
    ) -> "CycleContext":
        """Validates every sign. sigma_breve and varsigma default to sigma."""
        sigma = Sign.of(sigma)
        return cls(
            sigma=sigma,
            sigma_breve=sigma if sigma_breve is None else Sign.of(sigma_breve),
            s=Sign.of(s),
            varsigma=sigma if varsigma is None else Sign.of(varsigma),
        )

    @classmethod
    def from_options(cls) -> "CycleContext":
        return cls.make(
            sigma=OPTIONS.sigma,
            sigma_breve=OPTIONS.sigma_breve,
            s=OPTIONS.s,
            varsigma=OPTIONS.varsigma,
        )

    def with_(self, **kwargs) -> "CycleContext":
        return self._replace(**{k: Sign.of(v) for k, v in kwargs.items()})

    def as_dict(self):
        return {k: int(v) for k, v in self._asdict().items()}


def all_contexts(varsigma: Optional[Sign] = None) -> Iterator[CycleContext]:
    """The 27 (sigma, sigma_breve, s) combinations"""
    for sigma, sigma_breve, s in itertools.product(Sign.values, repeat=3):
        yield CycleContext(sigma, sigma_breve, s, sigma if varsigma is None else varsigma)
