"""Exact derived-angle computation for the isosceles cevian configuration.

Angles are integers in units of ``pi/N`` radians (degrees for ``N = 180``).
All exact work happens in Q(zeta_{4N}), where one index step is half a unit,
so ``a/2`` and every half-unit candidate for the derived angle are available.

Two exact witnesses are provided:

* ``tan_theta_pair`` evaluates the sine-rule tangent formula as a
  projective pair ``(num, den)``; ``den == 0`` means a right angle.
* ``quadling_ratio`` gives the right-hand side of the sine-ratio identity
  ``sin(theta) / sin(b + c - theta) = R``.  The left side is strictly
  increasing on ``(0, b + c)``, so at most one theta satisfies it and
  ``certify_theta`` is a uniqueness-backed exact test.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cyclotomic import CycloElement, make_context
from .oracle import DEFAULT_DIGITS, HPReal, near_half_step, theta_estimate
from .trig import cos_of, sin_of

__all__ = [
    "DEFAULT_TOL",
    "Classification",
    "DerivedAngle",
    "InvalidTripletError",
    "InvalidCandidateError",
    "Triplet",
    "tan_theta_pair",
    "quadling_ratio",
    "certify_theta",
    "certify_theta_at",
    "tripp_agrees",
    "derive_theta",
    "mirror_theta",
    "solve",
]

DEFAULT_TOL = Fraction(1, 10**30)


class InvalidTripletError(ValueError):
    pass


class InvalidCandidateError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Triplet:
    """Apex angle ``a`` and cevian angles ``b`` (at B) and ``c`` (at C).

    Only geometric validity is enforced here: every angle positive and both
    cevian angles strictly below the base angle ``(N - a) / 2``.  The
    enumeration conventions additionally require ``b > c``.
    """

    a: int
    b: int
    c: int
    unit_N: int = 180

    def __post_init__(self) -> None:
        if self.unit_N < 1:
            raise InvalidTripletError(f"unit_N must be positive, got {self.unit_N}")
        if min(self.a, self.b, self.c) < 1:
            raise InvalidTripletError(f"angles must be >= 1 unit: {self}")
        if 2 * max(self.b, self.c) >= self.unit_N - self.a:
            raise InvalidTripletError(f"cevian angle not below base angle: {self}")

    @property
    def conductor(self) -> int:
        return 4 * self.unit_N

    @property
    def base_angle(self) -> Fraction:
        return Fraction(self.unit_N - self.a, 2)

    @property
    def is_canonical(self) -> bool:
        return self.b > self.c

    def mirror(self) -> Triplet:
        return Triplet(self.a, self.c, self.b, self.unit_N)

    def __str__(self) -> str:
        unit = "" if self.unit_N == 180 else f" [pi/{self.unit_N}]"
        return f"({self.a}, {self.b}, {self.c}){unit}"


class Classification(str, enum.Enum):
    INTEGRAL = "integral"
    HALF_INTEGRAL = "half_integral"
    NOT_RATIONAL = "not_rational"


@dataclass(frozen=True)
class DerivedAngle:
    half_steps: int | None
    classification: Classification
    certified: bool

    @property
    def value(self) -> Fraction | None:
        """Derived angle in units, or None when it is not rational."""
        return None if self.half_steps is None else Fraction(self.half_steps, 2)

    def __str__(self) -> str:
        if self.half_steps is None:
            return "not rational"
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{float(v):g}"


def tan_theta_pair(t: Triplet) -> tuple[CycloElement, CycloElement]:
    """Numerator and denominator of the sine-rule formula for tan(theta)."""
    ctx = make_context(t.conductor)
    a, b, c = 2 * t.a, 2 * t.b, 2 * t.c  # indices: one step is half a unit
    cos_a = cos_of(ctx, a)
    sin_c = sin_of(ctx, c)
    common = sin_c * (cos_a + cos_of(ctx, 2 * b))
    num = sin_of(ctx, b + c) * common
    den = sin_of(ctx, b) * (cos_a + cos_of(ctx, 2 * c)) + cos_of(ctx, b + c) * common
    return num, den


def _quadling_terms(t: Triplet, n: int) -> tuple[CycloElement, CycloElement]:
    ctx = make_context(n)
    s = n // (2 * t.unit_N)  # index steps per unit
    h = n // (4 * t.unit_N)  # index steps per half unit
    a2, b, c = t.a * h, t.b * s, t.c * s
    num = cos_of(ctx, b + a2) * sin_of(ctx, c) * cos_of(ctx, b - a2)
    den = cos_of(ctx, c - a2) * sin_of(ctx, b) * cos_of(ctx, c + a2)
    return num, den


def quadling_ratio(t: Triplet) -> tuple[CycloElement, CycloElement]:
    """Numerator and denominator of cos(b+a/2) sin c cos(b-a/2) / (cos(c-a/2) sin b cos(c+a/2))."""
    return _quadling_terms(t, t.conductor)


def certify_theta_at(t: Triplet, theta: Fraction | int) -> bool:
    """Exact test of the sine-ratio identity at a rational ``theta`` (units).

    The field is enlarged as needed for the denominator of ``theta``.
    """
    theta = Fraction(theta)
    total = t.b + t.c
    if not 0 < theta < total:
        raise InvalidCandidateError(f"theta={theta} outside (0, {total}) for {t}")
    n = lcm(4 * t.unit_N, 2 * t.unit_N * theta.denominator)
    num, den = _quadling_terms(t, n)
    ctx = make_context(n)
    per_unit = Fraction(n, 2 * t.unit_N)
    j = theta * per_unit
    rest = (total - theta) * per_unit
    assert j.denominator == 1 and rest.denominator == 1
    lhs = sin_of(ctx, int(j)) * den
    rhs = sin_of(ctx, int(rest)) * num
    return lhs == rhs


def certify_theta(t: Triplet, j: int) -> bool:
    """True iff theta = j half-units satisfies the sine-ratio identity exactly."""
    if not 0 < j < 2 * (t.b + t.c):
        raise InvalidCandidateError(f"candidate j={j} outside (0, {2 * (t.b + t.c)}) for {t}")
    ctx = make_context(t.conductor)
    num, den = quadling_ratio(t)
    return sin_of(ctx, j) * den == sin_of(ctx, 2 * (t.b + t.c) - j) * num


def tripp_agrees(t: Triplet, j: int) -> bool:
    """num*cos(theta) == den*sin(theta) for theta = j half-units."""
    ctx = make_context(t.conductor)
    num, den = tan_theta_pair(t)
    return num * cos_of(ctx, j) == den * sin_of(ctx, j)


def derive_theta(t: Triplet, estimate: HPReal, tol=DEFAULT_TOL) -> DerivedAngle:
    """Classify theta from a numeric estimate, certifying any half-step hit exactly.

    A rational derived angle always has denominator at most 2, so a value
    that misses every half step is irrational.
    """
    j = near_half_step(estimate, tol)
    if j is None or not certify_theta(t, j):
        return DerivedAngle(None, Classification.NOT_RATIONAL, False)
    kind = Classification.INTEGRAL if j % 2 == 0 else Classification.HALF_INTEGRAL
    return DerivedAngle(j, kind, True)


def mirror_theta(t: Triplet, j: int) -> int:
    """Half-steps of the derived angle of (a, c, b), given that of (a, b, c)."""
    return 2 * (t.b + t.c) - j


def solve(t: Triplet, digits: int = DEFAULT_DIGITS, tol=DEFAULT_TOL) -> tuple[HPReal, DerivedAngle]:
    est = theta_estimate(t, digits)
    return est, derive_theta(t, est, tol)
