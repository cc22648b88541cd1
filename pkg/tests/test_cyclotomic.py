from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from adventitious.cyclotomic import (
    ConductorMismatchError,
    CycloElement,
    InvalidAutomorphismError,
    InvalidLiftError,
    InvalidSubfieldError,
    cyclotomic_poly,
    elem_from_power,
    elem_from_rational,
    galois_map,
    inverse,
    is_in_subfield,
    is_rational,
    is_real,
    lift_to_supfield,
    make_context,
    minimal_polynomial,
    totient,
)
from adventitious.trig import cos_of, tan_half_via_identity, tan_of

from helpers import evaluate, poly_eval

X = sympy.Symbol("x")


def const(n, q):
    return elem_from_rational(make_context(n), q)


def z(n, k=1):
    return elem_from_power(make_context(n), k)


# --- contexts ---------------------------------------------------------------


@pytest.mark.parametrize(
    "n, poly",
    [(1, (-1, 1)), (4, (1, 0, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_small_cyclotomic_polynomials(n, poly):
    ctx = make_context(n)
    assert ctx.phi_poly == poly
    assert ctx.degree == len(poly) - 1


@pytest.mark.parametrize("n", list(range(1, 61)) + [72, 144, 240, 360, 720, 1440])
def test_cyclotomic_poly_matches_sympy(n):
    expected = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_poly(n)) == [int(c) for c in expected]
    assert make_context(n).degree == totient(n) == int(sympy.totient(n))


@pytest.mark.parametrize("n", range(1, 101))
def test_divisor_product_is_x_n_minus_1(n):
    prod = sympy.Integer(1)
    for d in sympy.divisors(n):
        prod *= sympy.Poly(list(cyclotomic_poly(d))[::-1], X).as_expr()
    assert sympy.expand(prod - (X**n - 1)) == 0


def test_context_is_memoized_and_frozen():
    assert make_context(720) is make_context(720)
    with pytest.raises(AttributeError):
        make_context(12).n = 5


def test_bad_conductor():
    with pytest.raises(ValueError):
        make_context(0)


# --- elements ---------------------------------------------------------------


def test_powers_of_zeta():
    assert is_rational(z(4, 0)) == 1
    assert is_rational(z(4, 2)) == -1
    assert z(12, 13) == z(12, 1)
    assert z(12, -1) == z(12, 11)


def test_zeta12_to_the_eighth():
    # x^8 mod x^4 - x^2 + 1 is -x^2
    eighth = z(12, 4) * z(12, 4)
    assert eighth == -z(12, 2)
    assert eighth.coeffs == (0, 0, -1, 0)
    assert abs(evaluate(eighth) - evaluate(z(12, 8))) < 1e-12


def test_ring_operations_n4():
    i = z(4)
    assert is_rational(i * i) == -1
    assert is_rational((1 + i) + (1 - i)) == 2
    assert -i == galois_map(i, 3)


def test_coeff_length_and_zero():
    x = z(720, 500)
    assert len(x.coeffs) == 192
    assert (x - x).is_zero()
    assert not x.is_zero()


def test_mismatched_conductors():
    with pytest.raises(ConductorMismatchError):
        z(4) + z(12)
    with pytest.raises(ConductorMismatchError):
        z(4) * z(8)


def test_constructor_checks_length():
    with pytest.raises(ValueError):
        CycloElement(12, [1, 2])
    assert CycloElement(12, [Fraction(1, 2), 0, 0, 0]) == const(12, Fraction(1, 2))


def test_elements_are_immutable_and_hashable():
    x = z(12)
    with pytest.raises(AttributeError):
        x.conductor = 24
    assert len({x, z(12, 13), z(12, 2)}) == 2


def test_inverse_examples():
    assert inverse(z(4)) == -z(4)
    assert is_rational(inverse(const(7, 2))) == Fraction(1, 2)
    y = 1 + z(12)
    assert is_rational(y * inverse(y)) == 1
    with pytest.raises(ZeroDivisionError):
        inverse(const(12, 0))


def test_inverse_dense_element_720():
    x = cos_of(make_context(720), 15) + z(720, 7) * Fraction(3, 5)
    assert is_rational(x * inverse(x)) == 1


# --- Galois action ----------------------------------------------------------


def test_galois_examples():
    x = z(12) + 3 * z(12, 3)
    assert galois_map(x, 1) == x
    real = z(12) + z(12, -1)
    assert galois_map(real, 11) == real
    with pytest.raises(InvalidAutomorphismError):
        galois_map(x, 2)


@pytest.mark.parametrize("n", [8, 12, 24, 36])
def test_galois_composition(n):
    ctx = make_context(n)
    x = elem_from_power(ctx, 1) * 2 + elem_from_power(ctx, 5) - Fraction(1, 3)
    units = [k for k in range(1, n) if sympy.gcd(k, n) == 1]
    for k in units:
        for k2 in units:
            assert galois_map(galois_map(x, k), k2) == galois_map(x, k * k2 % n)


def test_galois_matches_numeric_conjugation():
    x = z(24, 5) + 2 * z(24, 7)
    assert abs(evaluate(galois_map(x, 23)) - evaluate(x).conjugate()) < 1e-12


def test_is_real():
    ctx = make_context(12)
    assert is_real(cos_of(ctx, 1))
    assert not is_real(z(4))
    assert is_real(const(12, Fraction(-3, 7)))


def test_is_rational():
    assert is_rational(const(12, Fraction(3, 2))) == Fraction(3, 2)
    assert is_rational(z(12)) is None
    assert is_rational(z(12, 4) + z(12, -4)) == -1


def test_subfield_membership():
    assert is_in_subfield(const(24, 5), 1)
    assert is_in_subfield(const(24, 5), 8)
    assert is_in_subfield(z(24), 24)
    assert not is_in_subfield(z(24), 12)
    assert is_in_subfield(z(24, 2), 12)
    tan15 = tan_of(make_context(24), 1)
    assert is_in_subfield(tan15, 24)
    tan5 = tan_of(make_context(72), 1)
    assert not is_in_subfield(tan5, 24)
    with pytest.raises(InvalidSubfieldError):
        is_in_subfield(z(24), 5)


def test_subfield_agrees_with_lift():
    # an element of Q(zeta_m) lifted into Q(zeta_n) is in the subfield
    for m, n in [(3, 12), (4, 24), (12, 72), (8, 40)]:
        x = z(m) * 3 + Fraction(1, 2) * z(m, 2)
        assert is_in_subfield(lift_to_supfield(x, n), m)


# --- minimal polynomials ----------------------------------------------------


def test_minimal_polynomial_examples():
    assert minimal_polynomial(z(4)) == (1, 0, 1)
    assert minimal_polynomial(const(9, Fraction(1, 2))) == (Fraction(-1, 2), 1)
    tan15 = tan_half_via_identity(make_context(12), 1)
    assert minimal_polynomial(tan15) == (1, -4, 1)


@pytest.mark.parametrize("n", range(1, 37))
def test_minimal_polynomial_of_zeta(n):
    mp = minimal_polynomial(z(n))
    assert len(mp) - 1 == totient(n)
    assert list(mp) == list(cyclotomic_poly(n))


@pytest.mark.parametrize(
    "kind, n, j, expr",
    [
        ("cos", 48, 1, sympy.cos(sympy.pi / 24)),
        ("tan", 24, 1, sympy.tan(sympy.pi / 12)),
        ("tan", 48, 1, sympy.tan(sympy.pi / 24)),
        ("cos", 40, 3, sympy.cos(3 * sympy.pi / 20)),
        ("cos", 60, 7, sympy.cos(7 * sympy.pi / 30)),
    ],
)
def test_minimal_polynomial_matches_sympy(kind, n, j, expr):
    ctx = make_context(n)
    x = tan_of(ctx, j) if kind == "tan" else cos_of(ctx, j)
    expected = sympy.Poly(sympy.minimal_polynomial(expr, X), X)
    expected = expected.monic().all_coeffs()[::-1]
    assert list(minimal_polynomial(x)) == [Fraction(int(c.p), int(c.q)) for c in expected]


@pytest.mark.parametrize("n", [4, 8, 12, 16, 20, 24])
def test_lemma1_degree(n):
    x = tan_half_via_identity(make_context(n), 1)
    mp = minimal_polynomial(x)
    assert len(mp) - 1 == totient(n) // 2
    assert abs(poly_eval(mp, evaluate(x).real)) < 1e-9


def test_minpoly_degree_divides_field_degree():
    ctx = make_context(720)
    for j in (1, 15, 30, 45, 90, 7):
        deg = len(minimal_polynomial(cos_of(ctx, j))) - 1
        assert ctx.degree % deg == 0


# --- lifting ----------------------------------------------------------------


def test_lift_examples():
    assert is_rational(lift_to_supfield(const(4, 7), 12)) == 7
    assert lift_to_supfield(z(4), 12) == z(12, 3)
    cos60_small = cos_of(make_context(12), 2)
    cos60_big = cos_of(make_context(720), 120)
    assert lift_to_supfield(cos60_small, 720) == cos60_big
    with pytest.raises(InvalidLiftError):
        lift_to_supfield(z(4), 10)


# --- properties -------------------------------------------------------------

small = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@st.composite
def elements(draw, n):
    ctx = make_context(n)
    return CycloElement(n, [draw(small) for _ in range(ctx.degree)])


conductors = st.sampled_from([4, 8, 12, 24])


@settings(max_examples=40, deadline=None)
@given(st.data(), conductors)
def test_field_axioms(data, n):
    x, y, w = (data.draw(elements(n)) for _ in range(3))
    assert (x * y) * w == x * (y * w)
    assert (x + y) + w == x + (y + w)
    assert x * (y + w) == x * y + x * w
    assert x * y == y * x
    if not x.is_zero():
        assert is_rational(x * inverse(x)) == 1


@settings(max_examples=30, deadline=None)
@given(st.data(), st.sampled_from([(4, 12), (8, 24), (12, 24), (12, 72)]))
def test_lift_is_a_homomorphism(data, pair):
    n, n2 = pair
    x, y = data.draw(elements(n)), data.draw(elements(n))
    assert lift_to_supfield(x * y, n2) == lift_to_supfield(x, n2) * lift_to_supfield(y, n2)
    assert lift_to_supfield(x + y, n2) == lift_to_supfield(x, n2) + lift_to_supfield(y, n2)
    assert is_in_subfield(lift_to_supfield(x, n2), n)


@settings(max_examples=30, deadline=None)
@given(st.data(), conductors)
def test_rational_implies_real_and_in_q(data, n):
    q = data.draw(small)
    x = data.draw(elements(n))
    for e in (const(n, q), x):
        if is_rational(e) is not None:
            assert is_real(e)
            assert is_in_subfield(e, 1)


@settings(max_examples=30, deadline=None)
@given(st.data(), conductors)
def test_numeric_evaluation_respects_products(data, n):
    x, y = data.draw(elements(n)), data.draw(elements(n))
    assert abs(evaluate(x * y) - evaluate(x) * evaluate(y)) < 1e-6
