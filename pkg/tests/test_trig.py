import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adventitious.cyclotomic import (
    is_rational,
    is_real,
    lift_to_supfield,
    make_context,
    minimal_polynomial,
    totient,
)
from adventitious.trig import (
    AngleIndex,
    ConductorNotDivisibleBy4Error,
    HalfAngleUndefinedError,
    TangentPoleError,
    cos_of,
    sin_of,
    tan_half_via_identity,
    tan_of,
)

from helpers import evaluate

CTX = make_context(720)


def test_angle_index():
    a = AngleIndex(-15, 720)
    assert a.j == 705
    assert AngleIndex.from_degrees(Fraction(15, 2)).j == 15
    assert AngleIndex(15, 720).degrees == Fraction(15, 2)
    with pytest.raises(ValueError):
        AngleIndex.from_degrees(Fraction(1, 4))


def test_cos_examples():
    assert is_rational(cos_of(CTX, 120)) == Fraction(1, 2)
    assert is_rational(cos_of(CTX, 0)) == 1
    c45 = cos_of(CTX, 90)
    assert is_rational(c45) is None
    assert is_real(c45)
    assert is_rational(c45 * c45) == Fraction(1, 2)


def test_sin_examples():
    assert is_rational(sin_of(CTX, 180)) == 1
    assert is_rational(sin_of(CTX, 60)) == Fraction(1, 2)
    s15 = sin_of(CTX, 30)
    # 16x^4 - 16x^2 + 1, made monic
    assert minimal_polynomial(s15) == (Fraction(1, 16), 0, -1, 0, 1)
    assert is_rational(4 * s15 * s15 + cos_of(CTX, 60) * 2) == 2
    with pytest.raises(ConductorNotDivisibleBy4Error):
        sin_of(make_context(30), 1)


def test_tan_examples():
    assert is_rational(tan_of(CTX, 90)) == 1
    assert is_rational(tan_of(CTX, 0)) == 0
    with pytest.raises(TangentPoleError):
        tan_of(CTX, 180)


def test_tan_seven_and_a_half_degree():
    # 7.5 degrees is pi/24, which generates the real subfield of Q(zeta_24)
    t = tan_of(CTX, 15)
    assert len(minimal_polynomial(t)) - 1 == totient(24) // 2 == 4
    expected = math.sqrt(6) - math.sqrt(3) + math.sqrt(2) - 2
    assert abs(evaluate(t).real - expected) < 1e-12


def test_half_angle_examples():
    assert is_rational(tan_half_via_identity(CTX, 180)) == 1
    assert tan_half_via_identity(CTX, 120) == tan_of(CTX, 60)
    small = tan_half_via_identity(make_context(24), 4)
    assert lift_to_supfield(small, 48) == tan_of(make_context(48), 4)
    with pytest.raises(HalfAngleUndefinedError):
        tan_half_via_identity(CTX, 0)


def test_values_match_floats():
    for j in (1, 15, 77, 300, 511):
        rad = 2 * math.pi * j / 720
        assert abs(evaluate(cos_of(CTX, j)) - math.cos(rad)) < 1e-12
        assert abs(evaluate(sin_of(CTX, j)) - math.sin(rad)) < 1e-12


@pytest.mark.parametrize("j", range(0, 720, 7))
def test_pythagorean_identity(j):
    s, c = sin_of(CTX, j), cos_of(CTX, j)
    assert is_rational(s * s + c * c) == 1
    assert is_real(s) and is_real(c)


@pytest.mark.parametrize("n", [24, 48, 720])
def test_half_angle_consistency(n):
    ctx, ctx2 = make_context(n), make_context(2 * n)
    for j in range(1, n, max(1, n // 24)):
        if 2 * j == n:
            continue  # tan of a right angle
        assert lift_to_supfield(tan_half_via_identity(ctx, j), 2 * n) == tan_of(ctx2, j)


@settings(max_examples=60, deadline=None)
@given(st.integers(-720, 720))
def test_parity(j):
    assert sin_of(CTX, -j) == -sin_of(CTX, j)
    assert cos_of(CTX, -j) == cos_of(CTX, j)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 719), st.integers(0, 719))
def test_angle_addition(j, k):
    lhs = sin_of(CTX, j + k)
    rhs = sin_of(CTX, j) * cos_of(CTX, k) + cos_of(CTX, j) * sin_of(CTX, k)
    assert lhs == rhs
    assert cos_of(CTX, j + k) == cos_of(CTX, j) * cos_of(CTX, k) - sin_of(CTX, j) * sin_of(CTX, k)


def test_rational_cosines_of_integer_degrees():
    rational = {d: is_rational(cos_of(CTX, 2 * d)) for d in range(91)}
    hits = {d: v for d, v in rational.items() if v is not None}
    assert hits == {0: 1, 60: Fraction(1, 2), 90: 0}
