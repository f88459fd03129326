#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: ts=4:et:sw=4:

import enum

from typing import Union

from src.api.decorator import classproperty
from src.api.errors import InvalidSign

__all__ = ["Sign", "chi"]


@enum.unique
class Sign(enum.IntEnum):
    """The EPH trichotomy. Used for the point space (sigma), the
    cycle space (sigma breve), the centre/focus flavour (varsigma)
    and the FSC multiplier s.
    """

    ELLIPTIC = -1
    PARABOLIC = 0
    HYPERBOLIC = 1

    @classproperty
    def values(cls):
        return cls.ELLIPTIC, cls.PARABOLIC, cls.HYPERBOLIC

    @classmethod
    def of(cls, value: Union[int, str, "Sign"]) -> "Sign":
        if isinstance(value, Sign):
            return value

        try:
            number = int(value)
            if not isinstance(value, str) and number != value:
                raise ValueError(value)
            return cls(number)
        except (TypeError, ValueError):
            raise InvalidSign(value)

    @property
    def letter(self) -> str:
        return "eph"[self.value + 1]


def chi(value: int) -> int:
    """Heaviside sign: +1 for t >= 0, -1 for t < 0"""
    return 1 if value >= 0 else -1
