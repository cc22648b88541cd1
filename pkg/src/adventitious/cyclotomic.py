"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) with
rational coefficients, always reduced modulo the cyclotomic polynomial.
Internally a vector of integer numerators shares one positive common
denominator, which keeps multiplication in plain integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "CycloContext",
    "CycloElement",
    "ConductorMismatchError",
    "InvalidAutomorphismError",
    "InvalidSubfieldError",
    "InvalidLiftError",
    "cyclotomic_poly",
    "totient",
    "make_context",
    "elem_from_power",
    "elem_from_rational",
    "elem_from_exponents",
    "add",
    "sub",
    "mul",
    "neg",
    "inverse",
    "galois_map",
    "is_real",
    "is_rational",
    "is_in_subfield",
    "minimal_polynomial",
    "lift_to_supfield",
    "format_polynomial",
]


class ConductorMismatchError(ValueError):
    """Operands live in different cyclotomic fields; lift one explicitly."""


class InvalidAutomorphismError(ValueError):
    pass


class InvalidSubfieldError(ValueError):
    pass


class InvalidLiftError(ValueError):
    pass


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient undefined for n={n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _exact_divide(num: list[int], den: Sequence[int]) -> list[int]:
    """Quotient of integer polynomials (ascending coefficients), den monic.

    Raises ArithmeticError when the division leaves a remainder.
    """
    rem = list(num)
    dd = len(den) - 1
    if den[dd] != 1:
        raise ValueError("divisor must be monic")
    tail = [(e, c) for e, c in enumerate(den[:dd]) if c]
    q = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            q[i - dd] = c
            rem[i] = 0
            for e, p in tail:
                rem[i - dd + e] -= c * p
    if any(rem[:dd]):
        raise ArithmeticError("polynomial division is not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Phi_n = (x^n - 1) / prod(Phi_d for proper divisors d of n).
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_divide(poly, cyclotomic_poly(d))
    return tuple(poly)


@dataclass(frozen=True)
class CycloContext:
    """The field Q(zeta_n): conductor, degree phi(n) and Phi_n."""

    n: int
    degree: int
    phi_poly: tuple[int, ...]
    _tail: tuple[tuple[int, int], ...] = field(repr=False, compare=False)

    def reduce(self, vec: list[int]) -> list[int]:
        """Reduce an integer coefficient vector modulo Phi_n, in place."""
        deg = self.degree
        tail = self._tail
        for i in range(len(vec) - 1, deg - 1, -1):
            c = vec[i]
            if c:
                vec[i] = 0
                for e, p in tail:
                    vec[i - deg + e] -= c * p
        if len(vec) < deg:
            vec.extend([0] * (deg - len(vec)))
        del vec[deg:]
        return vec

    @property
    def zeta(self) -> CycloElement:
        return elem_from_power(self, 1)

    @property
    def one(self) -> CycloElement:
        return elem_from_rational(self, 1)

    @property
    def zero(self) -> CycloElement:
        return elem_from_rational(self, 0)


@lru_cache(maxsize=None)
def make_context(n: int) -> CycloContext:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"conductor must be a positive integer, got {n!r}")
    poly = cyclotomic_poly(n)
    deg = len(poly) - 1
    tail = tuple((e, c) for e, c in enumerate(poly[:deg]) if c)
    return CycloContext(n=n, degree=deg, phi_poly=poly, _tail=tail)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    g = reduce(gcd, num, den)
    if not any(num):
        return tuple([0] * len(num)), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycloElement:
    """An element of Q(zeta_n) in canonical power-basis form.

    Instances are immutable and hashable. Arithmetic between elements of
    different conductors raises :class:`ConductorMismatchError`.
    """

    __slots__ = ("conductor", "_num", "_den")

    conductor: int
    _num: tuple[int, ...]
    _den: int

    def __init__(self, conductor: int, coeffs: Iterable[Fraction | int]):
        ctx = make_context(conductor)
        values = [Fraction(c) for c in coeffs]
        if len(values) != ctx.degree:
            raise ValueError(
                f"expected {ctx.degree} coefficients for conductor {conductor}, "
                f"got {len(values)}"
            )
        den = reduce(lambda x, y: x * y // gcd(x, y), (v.denominator for v in values), 1)
        num = [v.numerator * (den // v.denominator) for v in values]
        self._set(conductor, *_normalize(num, den))

    def _set(self, conductor: int, num: tuple[int, ...], den: int) -> None:
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    @classmethod
    def _raw(cls, conductor: int, num: list[int], den: int) -> CycloElement:
        self = object.__new__(cls)
        self._set(conductor, *_normalize(num, den))
        return self

    def __setattr__(self, name, value):
        raise AttributeError("CycloElement is immutable")

    @property
    def context(self) -> CycloContext:
        return make_context(self.conductor)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycloElement):
            return NotImplemented
        return (
            self.conductor == other.conductor
            and self._den == other._den
            and self._num == other._num
        )

    def __hash__(self) -> int:
        return hash((self.conductor, self._num, self._den))

    def __repr__(self) -> str:
        return f"CycloElement({self.conductor}, {format_polynomial(self.coeffs, 'z')})"

    def _coerce(self, other) -> CycloElement:
        if isinstance(other, CycloElement):
            if other.conductor != self.conductor:
                raise ConductorMismatchError(
                    f"conductor {self.conductor} vs {other.conductor}; lift_to_supfield first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return elem_from_rational(self.context, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._den, other._den
        if d1 == d2:
            num = [x + y for x, y in zip(self._num, other._num)]
            return CycloElement._raw(self.conductor, num, d1)
        num = [x * d2 + y * d1 for x, y in zip(self._num, other._num)]
        return CycloElement._raw(self.conductor, num, d1 * d2)

    __radd__ = __add__

    def __neg__(self) -> CycloElement:
        return CycloElement._raw(self.conductor, [-x for x in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElement._raw(
                self.conductor, [x * q.numerator for x in self._num], self._den * q.denominator
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self.context
        a = [(i, x) for i, x in enumerate(self._num) if x]
        b = [(i, y) for i, y in enumerate(other._num) if y]
        prod = [0] * (2 * ctx.degree - 1)
        for i, x in a:
            for k, y in b:
                prod[i + k] += x * y
        return CycloElement._raw(self.conductor, ctx.reduce(prod), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * inverse(other)

    def __rtruediv__(self, other):
        return inverse(self) * other

    def __pow__(self, e: int) -> CycloElement:
        if e < 0:
            return inverse(self) ** (-e)
        result = elem_from_rational(self.context, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def elem_from_rational(ctx: CycloContext, q: int | Fraction) -> CycloElement:
    q = Fraction(q)
    num = [0] * ctx.degree
    num[0] = q.numerator
    return CycloElement._raw(ctx.n, num, q.denominator)


def elem_from_exponents(ctx: CycloContext, terms: Mapping[int, int | Fraction]) -> CycloElement:
    """Build sum(coeff * zeta^e) for a mapping of exponents to rationals."""
    den = 1
    for c in terms.values():
        d = Fraction(c).denominator
        den = den * d // gcd(den, d)
    vec = [0] * max(ctx.n, ctx.degree)
    for e, c in terms.items():
        c = Fraction(c)
        vec[e % ctx.n] += c.numerator * (den // c.denominator)
    return CycloElement._raw(ctx.n, ctx.reduce(vec), den)


def elem_from_power(ctx: CycloContext, k: int) -> CycloElement:
    """zeta_n^k in canonical form (k taken modulo n)."""
    return elem_from_exponents(ctx, {k % ctx.n: 1})


def add(x: CycloElement, y: CycloElement) -> CycloElement:
    return x + y


def sub(x: CycloElement, y: CycloElement) -> CycloElement:
    return x - y


def mul(x: CycloElement, y: CycloElement) -> CycloElement:
    return x * y


def neg(x: CycloElement) -> CycloElement:
    return -x


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = c / lead
            q[i - db] = c
            for k in range(db + 1):
                if b[k]:
                    a[i - db + k] -= c * b[k]
    return _poly_trim(q), _poly_trim(a[:db])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                if y:
                    out[i + k] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def inverse(x: CycloElement) -> CycloElement:
    """Multiplicative inverse via the extended Euclidean algorithm mod Phi_n."""
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero in a cyclotomic field")
    ctx = x.context
    nz = [i for i, c in enumerate(x._num) if c]
    if len(nz) == 1:
        # c * zeta^k has inverse (1/c) * zeta^(-k)
        k = nz[0]
        c = Fraction(x._num[k], x._den)
        return elem_from_exponents(ctx, {-k % ctx.n: 1 / c})
    r0 = [Fraction(c) for c in ctx.phi_poly]
    r1 = _poly_trim(list(x.coeffs))
    s0: list[Fraction] = []
    s1: list[Fraction] = [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ArithmeticError("element shares a factor with Phi_n")  # impossible in a field
    c = r1[0]
    coeffs = [v / c for v in s1] + [Fraction(0)] * (ctx.degree - len(s1))
    return CycloElement(ctx.n, coeffs[: ctx.degree])


def galois_map(x: CycloElement, k: int) -> CycloElement:
    """Apply the automorphism zeta_n -> zeta_n^k."""
    ctx = x.context
    n = ctx.n
    if gcd(k % n, n) != 1:
        raise InvalidAutomorphismError(f"gcd({k}, {n}) != 1")
    vec = [0] * max(n, ctx.degree)
    for i, c in enumerate(x._num):
        if c:
            vec[(i * k) % n] += c
    return CycloElement._raw(n, ctx.reduce(vec), x._den)


def is_real(x: CycloElement) -> bool:
    return galois_map(x, x.conductor - 1) == x


def is_rational(x: CycloElement) -> Fraction | None:
    if any(x._num[1:]):
        return None
    return Fraction(x._num[0], x._den)


def is_in_subfield(x: CycloElement, m: int) -> bool:
    """True iff x lies in Q(zeta_m), viewed inside Q(zeta_n) for m | n."""
    n = x.conductor
    if m < 1 or n % m:
        raise InvalidSubfieldError(f"{m} does not divide conductor {n}")
    for k in range(1, n + 1):
        if (k - 1) % m == 0 and gcd(k, n) == 1 and k % n != 1 % n:
            if galois_map(x, k) != x:
                return False
    return True


def _eliminate(
    vec: list[int], combo: list[int], basis: list[tuple[int, list[int], list[int]]]
) -> tuple[list[int], list[int]]:
    # fraction-free: vec <- p*vec - v*row, then strip the common content
    for pivot, row, row_combo in basis:
        v = vec[pivot]
        if not v:
            continue
        p = row[pivot]
        vec = [p * a - v * b for a, b in zip(vec, row)]
        combo = [p * a - v * b for a, b in zip(combo, row_combo)]
        g = reduce(gcd, vec, reduce(gcd, combo, 0))
        if g > 1:
            vec = [a // g for a in vec]
            combo = [a // g for a in combo]
    return vec, combo


def minimal_polynomial(x: CycloElement) -> tuple[Fraction, ...]:
    """Monic minimal polynomial of x over Q, coefficients lowest degree first.

    Powers 1, x, x^2, ... are fed into a fraction-free echelon basis until
    the new power becomes dependent on the earlier ones.
    """
    ctx = x.context
    basis: list[tuple[int, list[int], list[int]]] = []
    dens: list[int] = []
    power = elem_from_rational(ctx, 1)
    for d in range(ctx.degree + 1):
        dens.append(power._den)
        vec = list(power._num)
        combo = [0] * d + [1]
        for entry in basis:
            entry[2].append(0)
        vec, combo = _eliminate(vec, combo, basis)
        if not any(vec):
            # sum(combo[i] * num_i) = 0 and x^i = num_i / den_i
            coeffs = [Fraction(c * den) for c, den in zip(combo, dens)]
            lead = coeffs[-1]
            return tuple(c / lead for c in coeffs)
        pivot = next(i for i, v in enumerate(vec) if v)
        basis.append((pivot, vec, combo))
        power = power * x
    raise ArithmeticError("no dependency found up to degree phi(n)")  # unreachable


def lift_to_supfield(x: CycloElement, n2: int) -> CycloElement:
    """Embed Q(zeta_n) into Q(zeta_n2) via zeta_n = zeta_n2^(n2/n)."""
    n = x.conductor
    if n2 < 1 or n2 % n:
        raise InvalidLiftError(f"{n} does not divide {n2}")
    if n2 == n:
        return x
    ctx2 = make_context(n2)
    step = n2 // n
    vec = [0] * max(n2, ctx2.degree)
    for i, c in enumerate(x._num):
        if c:
            vec[i * step] += c
    return CycloElement._raw(n2, ctx2.reduce(vec), x._den)


def format_polynomial(coeffs: Sequence[Fraction | int], var: str = "x") -> str:
    """Render ascending coefficients as a readable polynomial string."""
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[e])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
