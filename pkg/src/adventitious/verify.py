"""Reproduction checks bundled behind ``adventitious verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

import mpmath

from . import cyclotomic
from .cyclotomic import (
    is_in_subfield,
    make_context,
    minimal_polynomial,
    totient,
)
from .oracle import DEFAULT_DIGITS
from .search import Convention, enumerate_triplets, expected_count, run_search
from .solver import (
    Classification,
    Triplet,
    certify_theta,
    certify_theta_at,
    quadling_ratio,
    tripp_agrees,
)
from .trig import cos_of, sin_of, tan_half_via_identity, tan_of

__all__ = [
    "CheckResult",
    "cyclotomic_table_ok",
    "lemma1_degrees",
    "lemma3_membership",
    "proof_chain_steps",
    "quarter_step_rejections",
    "run_checks",
    "format_table",
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def cyclotomic_table_ok(limit: int = 100) -> bool:
    """prod(Phi_d for d | n) == x^n - 1 for every n <= limit."""
    for n in range(1, limit + 1):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                phi = cyclotomic.cyclotomic_poly(d)
                out = [0] * (len(prod) + len(phi) - 1)
                for i, x in enumerate(prod):
                    if x:
                        for k, y in enumerate(phi):
                            out[i + k] += x * y
                prod = out
        if prod != [-1] + [0] * (n - 1) + [1]:
            return False
    return tuple(cyclotomic.cyclotomic_poly(12)) == (1, 0, -1, 0, 1)


def lemma1_degrees(ns=(4, 8, 12, 16, 20, 24)) -> dict[int, tuple[int, int]]:
    """n -> (degree of the minimal polynomial of tan(pi/n), phi(n)/2).

    tan(pi/n) is built in Q(zeta_n) as (1 - cos a)/sin a with a = 2*pi/n.
    """
    out = {}
    for n in ns:
        x = tan_half_via_identity(make_context(n), 1)
        out[n] = (len(minimal_polynomial(x)) - 1, totient(n) // 2)
    return out


def lemma3_membership(
    base: int = 24, ms=range(1, 7), with_degree: bool = True
) -> dict[int, tuple[bool, int | None]]:
    """m -> (tan(2*pi/(base*m)) lies in Q(zeta_base), its minimal-polynomial degree).

    ``base`` must be a multiple of 8 so that 4 divides ``base*m/2``.

    The degree is skipped (None) when ``with_degree`` is false; it dominates
    the cost for large conductors.
    """
    out = {}
    for m in ms:
        x = tan_of(make_context(base * m), 1)
        degree = len(minimal_polynomial(x)) - 1 if with_degree else None
        out[m] = (is_in_subfield(x, base), degree)
    return out


def proof_chain_steps() -> list[tuple[str, bool]]:
    """Replay the exact identity chain for (45, 45, 15) in Q(zeta_720).

    Ratios are compared by cross multiplication; indices are half degrees.
    """
    ctx = make_context(720)

    def c(deg2):
        return cos_of(ctx, deg2)

    def s(deg2):
        return sin_of(ctx, deg2)

    num, den = quadling_ratio(Triplet(45, 45, 15))
    # cos(3pi/8) sin(pi/12) cos(pi/8) / (cos(pi/24) sin(pi/4) cos(5pi/24))
    n1, d1 = c(135) * s(30) * c(45), c(15) * s(90) * c(75)
    # (2 sin(pi/8) cos(pi/8)) sin(pi/24) sin(pi/12) / ((2 sin(pi/24) cos(pi/24)) sin(pi/4) cos(5pi/24))
    n2 = s(45) * c(45) * 2 * s(15) * s(30)
    d2 = s(15) * c(15) * 2 * s(90) * c(75)
    # sin(pi/24) / sin(pi/4 + pi/12 - pi/24)
    n3, d3 = s(15), s(90 + 30 - 15)
    return [
        ("ratio equals the substituted cosine/sine quotient", num == n1 and den == d1),
        ("rewrite with double-angle factors", n1 * d2 == n2 * d1),
        ("collapse to sin(pi/24)/sin(pi/4 + pi/12 - pi/24)", n2 * d3 == n3 * d2),
        ("end to end", num * d3 == n3 * den),
        ("theta = pi/24 certified", certify_theta(Triplet(45, 45, 15), 15)),
    ]


def quarter_step_rejections(cases) -> list[tuple[Triplet, Fraction]]:
    """Quarter-unit candidates that wrongly certify (the list should be empty).

    ``cases`` holds (triplet, approximate derived angle) pairs; the odd
    quarter steps within a unit of that angle are tested exactly in the
    enlarged field Q(zeta_{8N}).
    """
    failures = []
    for t, centre in cases:
        base = int(Fraction(centre) * 4)
        for q in range(base - 3, base + 4):
            if q % 2 == 0:
                continue
            cand = Fraction(q, 4)
            if 0 < cand < t.b + t.c and certify_theta_at(t, cand):
                failures.append((t, cand))
    return failures


def _timed(name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crashing check is a failing check
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, ok, detail, time.perf_counter() - start)


def _check_counts() -> tuple[bool, str]:
    te = sum(1 for _ in enumerate_triplets(Convention("tripp-even")))
    full = sum(1 for _ in enumerate_triplets(Convention("full")))
    ok = te == 113564 == comb(89, 3) and full == 231044 == comb(90, 3) + comb(89, 3)
    ok = ok and te == expected_count(Convention("tripp-even"))
    return ok, f"tripp-even={te}, full={full}"


def _check_certifications() -> tuple[bool, str]:
    langley = Triplet(20, 60, 50)
    lonely = Triplet(45, 45, 15)
    ok = (
        certify_theta(langley, 60)
        and not certify_theta(langley, 61)
        and certify_theta(lonely, 15)
        and tripp_agrees(langley, 60)
        and tripp_agrees(lonely, 15)
    )
    return ok, "(20,60,50;30) and (45,45,15;7.5) certified, Tripp formula agrees"


def _check_proof_chain() -> tuple[bool, str]:
    steps = proof_chain_steps()
    bad = [name for name, ok in steps if not ok]
    return not bad, "all steps exact" if not bad else f"failed: {', '.join(bad)}"


def _check_lemma1() -> tuple[bool, str]:
    degs = lemma1_degrees()
    ok = all(d == expect for d, expect in degs.values())
    return ok, " ".join(f"n={n}:{d}" for n, (d, _) in degs.items())


def _check_lemma3(base: int, with_degree: bool) -> Callable[[], tuple[bool, str]]:
    def check() -> tuple[bool, str]:
        res = lemma3_membership(base, with_degree=with_degree)
        ok = all(inside == (2 % m == 0) for m, (inside, _) in res.items())
        if with_degree:
            # Q(tan) is the real subfield of Q(zeta_{base*m/2}); membership forces
            # its degree to divide that of Q(zeta_base)+
            ok = ok and all(
                deg == totient(base * m // 2) // 2
                and (not inside or (totient(base) // 2) % deg == 0)
                for m, (inside, deg) in res.items()
            )
        members = [m for m, (inside, _) in res.items() if inside]
        return ok, f"members m={members}"

    return check


def _check_search(name: str, digits: int, jobs: int | None) -> Callable[[], tuple[bool, str]]:
    def check() -> tuple[bool, str]:
        report = run_search(Convention.parse(name), digits=digits, workers=jobs)
        sols = {(r.triplet.a, r.triplet.b, r.triplet.c): r for r in report.solutions}
        exact = {k: Fraction(r.half_steps, 2) for k, r in sols.items()}
        with mpmath.workdps(digits + 10):
            worst = max(
                (abs(r.theta_estimate.value - mpmath.mpf(r.half_steps) / 2) for r in sols.values()),
                default=mpmath.mpf(0),
            )
            oracle_ok = worst < mpmath.mpf(10) ** -(digits - 10)
        no_quarter = not quarter_step_rejections((r.triplet, exact[k]) for k, r in sols.items())
        if name == "tripp-even":
            ok = report.integral_count == 53 and exact.get((20, 60, 50)) == 30
            ok = ok and report.half_integral_count == 0
        elif name == "full":
            halves = [k for k, r in sols.items() if r.classification is Classification.HALF_INTEGRAL]
            ok = halves == [(45, 45, 15)] and exact[(45, 45, 15)] == Fraction(15, 2)
            ok = ok and (45, 15, 45) not in sols
        else:
            ok = exact.get((15, 15, 5)) == Fraction(5, 2)
        ok = ok and oracle_ok and no_quarter and report.total_enumerated == expected_count(
            report.convention
        )
        detail = (
            f"{report.total_enumerated} triplets, {report.integral_count} integral, "
            f"{report.half_integral_count} half-integral, oracle err {mpmath.nstr(worst, 3)}"
        )
        return ok, detail

    return check


def run_checks(quick: bool = False, digits: int = DEFAULT_DIGITS, jobs: int | None = None) -> list[CheckResult]:
    checks: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
        ("cyclotomic polynomials", lambda: (cyclotomic_table_ok(), "prod Phi_d = x^n - 1, n <= 100")),
        ("enumeration counts", _check_counts),
        ("exact certifications", _check_certifications),
        ("proof-chain identity (45,45,15)", _check_proof_chain),
        ("lemma 1 degrees", _check_lemma1),
        ("lemma 3 base 24", _check_lemma3(24, with_degree=True)),
    ]
    if not quick:
        checks += [
            ("lemma 3 base 360", _check_lemma3(360, with_degree=False)),
            ("search tripp-even", _check_search("tripp-even", digits, jobs)),
            ("search full", _check_search("full", digits, jobs)),
            ("search unit:60", _check_search("unit:60", digits, jobs)),
        ]
    return [_timed(name, fn) for name, fn in checks]


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.name:<{width}}  {r.seconds:7.2f}s  {r.detail}")
    return "\n".join(lines)
