"""High-precision coordinate construction of the isosceles configuration.

The figure is normalised with B = (0, 0) and C = (1, 0).  D lies on AC with
angle DBC = b, E lies on AB with angle ECB = c, and F is where BD and CE
cross.  The derived angle is EDB, measured at D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

import mpmath
from mpmath import mpf

if TYPE_CHECKING:
    from .solver import Triplet

__all__ = [
    "DEFAULT_DIGITS",
    "GUARD_DIGITS",
    "ConstructionError",
    "EstimationError",
    "HPReal",
    "FigurePoints",
    "construct",
    "estimate_theta",
    "angle_at",
    "near_half_step",
    "theta_estimate",
]

DEFAULT_DIGITS = 100
GUARD_DIGITS = 10

Point = tuple[mpf, mpf]


class ConstructionError(ValueError):
    pass


class EstimationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HPReal:
    """A real value together with the decimal precision it was computed at.

    Two instances compare equal when their decimal renderings at the stated
    precision agree, which makes text round trips exact.
    """

    value: mpf
    digits: int = DEFAULT_DIGITS

    def __str__(self) -> str:
        return mpmath.nstr(self.value, self.digits, strip_zeros=False, min_fixed=-mpmath.inf,
                           max_fixed=mpmath.inf)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HPReal):
            return NotImplemented
        return self.digits == other.digits and str(self) == str(other)

    def __hash__(self) -> int:
        return hash((self.digits, str(self)))

    def __float__(self) -> float:
        return float(self.value)

    @classmethod
    def parse(cls, text: str, digits: int) -> HPReal:
        with mpmath.workdps(digits + GUARD_DIGITS):
            return cls(mpf(text), digits)

    def to_string(self, digits: int) -> str:
        return mpmath.nstr(self.value, digits, strip_zeros=False, min_fixed=-mpmath.inf,
                           max_fixed=mpmath.inf)


@dataclass(frozen=True)
class FigurePoints:
    B: Point
    C: Point
    A: Point
    D: Point
    E: Point
    F: Point
    digits: int = DEFAULT_DIGITS


def _intersect(p: Point, d: Point, q: Point, e: Point) -> tuple[Point, mpf, mpf]:
    """Intersection of lines p + t*d and q + s*e, returned with (t, s)."""
    det = e[0] * d[1] - d[0] * e[1]
    if det == 0:
        raise ConstructionError("parallel lines in construction")
    rx, ry = q[0] - p[0], q[1] - p[1]
    t = (e[0] * ry - e[1] * rx) / det
    s = (d[0] * ry - d[1] * rx) / det
    return (p[0] + t * d[0], p[1] + t * d[1]), t, s


def _units_to_radians(units, unit_N: int) -> mpf:
    return mpf(units) * mpmath.pi / unit_N


def construct(t: Triplet, digits: int = DEFAULT_DIGITS) -> FigurePoints:
    N = t.unit_N
    if not (t.a >= 1 and t.b >= 1 and t.c >= 1 and 2 * max(t.b, t.c) < N - t.a):
        raise ConstructionError(f"invalid triplet {t}")
    with mpmath.workdps(digits + GUARD_DIGITS):
        base = _units_to_radians(mpf(N - t.a) / 2, N)
        b = _units_to_radians(t.b, N)
        c = _units_to_radians(t.c, N)
        B: Point = (mpf(0), mpf(0))
        C: Point = (mpf(1), mpf(0))
        A: Point = (mpf(1) / 2, mpmath.tan(base) / 2)
        AC = (A[0] - C[0], A[1] - C[1])
        AB = (A[0] - B[0], A[1] - B[1])
        D, _, sd = _intersect(B, (mpmath.cos(b), mpmath.sin(b)), C, AC)
        E, _, se = _intersect(C, (-mpmath.cos(c), mpmath.sin(c)), B, AB)
        F, tf, sf = _intersect(B, (D[0] - B[0], D[1] - B[1]), C, (E[0] - C[0], E[1] - C[1]))
        if not (0 < sd < 1 and 0 < se < 1):
            raise ConstructionError(f"cevian foot outside its side for {t}")
        if not (0 < tf < 1 and 0 < sf < 1):
            raise ConstructionError(f"cevians do not cross inside the triangle for {t}")
    return FigurePoints(B=B, C=C, A=A, D=D, E=E, F=F, digits=digits)


def angle_at(vertex: Point, p: Point, q: Point) -> mpf:
    """Angle p-vertex-q in degrees, in [0, 180], via atan2(|cross|, dot)."""
    u = (p[0] - vertex[0], p[1] - vertex[1])
    v = (q[0] - vertex[0], q[1] - vertex[1])
    if (u[0] == 0 and u[1] == 0) or (v[0] == 0 and v[1] == 0):
        raise EstimationError("coincident points")
    cross = u[0] * v[1] - u[1] * v[0]
    dot = u[0] * v[0] + u[1] * v[1]
    return mpmath.degrees(mpmath.atan2(abs(cross), dot))


def estimate_theta(p: FigurePoints, digits: int | None = None) -> HPReal:
    """The angle EDB in degrees."""
    digits = p.digits if digits is None else digits
    with mpmath.workdps(digits + GUARD_DIGITS):
        theta = angle_at(p.D, p.E, p.B)
    if not 0 < theta < 180:
        raise EstimationError(f"derived angle {theta} outside (0, 180)")
    return HPReal(theta, digits)


def theta_estimate(t: Triplet, digits: int = DEFAULT_DIGITS) -> HPReal:
    """Derived angle of ``t`` in its own units (degrees when unit_N = 180)."""
    est = estimate_theta(construct(t, digits), digits)
    if t.unit_N == 180:
        return est
    with mpmath.workdps(digits + GUARD_DIGITS):
        return HPReal(est.value * t.unit_N / 180, digits)


def _to_mpf(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def near_half_step(theta: HPReal | mpf, tol) -> int | None:
    """round(2*theta) when 2*theta is within ``tol`` of that integer."""
    value = theta.value if isinstance(theta, HPReal) else theta
    digits = theta.digits if isinstance(theta, HPReal) else mpmath.mp.dps
    with mpmath.workdps(digits + GUARD_DIGITS):
        tol = _to_mpf(tol)
        if not 0 < tol < mpf(1) / 4:
            raise ValueError("tol must lie in (0, 1/4)")
        twice = 2 * value
        j = int(mpmath.nint(twice))
        if abs(twice - j) < tol:
            return j
    return None
