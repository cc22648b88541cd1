"""Sine, cosine and tangent of rational multiples of 2*pi as exact field elements.

An angle is addressed by an index ``j`` inside a conductor ``n``: it denotes
``2*pi*j/n`` radians.  With ``n = 720`` the index is the angle in half
degrees, so every integral and half-integral degree value is reachable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import (
    CycloContext,
    CycloElement,
    elem_from_exponents,
    elem_from_power,
    inverse,
    make_context,
)

__all__ = [
    "AngleIndex",
    "ConductorNotDivisibleBy4Error",
    "TangentPoleError",
    "HalfAngleUndefinedError",
    "DEGREE_CONDUCTOR",
    "cos_of",
    "sin_of",
    "tan_of",
    "tan_half_via_identity",
]

DEGREE_CONDUCTOR = 720


class ConductorNotDivisibleBy4Error(ValueError):
    pass


class TangentPoleError(ZeroDivisionError):
    pass


class HalfAngleUndefinedError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class AngleIndex:
    """The angle ``j * 2*pi / n``, kept in canonical form ``0 <= j < n``."""

    j: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"conductor must be positive, got {self.n}")
        object.__setattr__(self, "j", self.j % self.n)

    @classmethod
    def from_degrees(cls, degrees: Fraction | int, n: int = DEGREE_CONDUCTOR) -> AngleIndex:
        j = Fraction(degrees) * n / 360
        if j.denominator != 1:
            raise ValueError(f"{degrees} degrees is not a multiple of 360/{n}")
        return cls(int(j), n)

    @property
    def degrees(self) -> Fraction:
        return Fraction(360 * self.j, self.n)

    def context(self) -> CycloContext:
        return make_context(self.n)


def _require_i(ctx: CycloContext) -> None:
    if ctx.n % 4:
        raise ConductorNotDivisibleBy4Error(
            f"conductor {ctx.n} has no square root of -1; use a multiple of 4"
        )


def cos_of(ctx: CycloContext, j: int) -> CycloElement:
    """(zeta^j + zeta^-j) / 2."""
    n = ctx.n
    terms: dict[int, Fraction] = {}
    for e in (j % n, -j % n):
        terms[e] = terms.get(e, Fraction(0)) + Fraction(1, 2)
    return elem_from_exponents(ctx, terms)


def sin_of(ctx: CycloContext, j: int) -> CycloElement:
    """(zeta^j - zeta^-j) / (2i), with i = zeta^(n/4)."""
    _require_i(ctx)
    n = ctx.n
    diff = elem_from_power(ctx, j) - elem_from_power(ctx, -j)
    if diff.is_zero():
        return diff
    two_i = elem_from_power(ctx, n // 4) * 2
    return diff * inverse(two_i)


def tan_of(ctx: CycloContext, j: int) -> CycloElement:
    _require_i(ctx)
    c = cos_of(ctx, j)
    if c.is_zero():
        raise TangentPoleError(f"tan undefined at index {j} of conductor {ctx.n}")
    return sin_of(ctx, j) * inverse(c)


def tan_half_via_identity(ctx: CycloContext, j: int) -> CycloElement:
    """tan of half the angle ``j``, computed as (1 - cos) / sin."""
    _require_i(ctx)
    s = sin_of(ctx, j)
    if s.is_zero():
        raise HalfAngleUndefinedError(f"sin vanishes at index {j} of conductor {ctx.n}")
    return (1 - cos_of(ctx, j)) * inverse(s)
