from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from altperm.laurent import P, Q, LaurentPolynomial
from altperm.series import (
    SeriesDomainError,
    TruncatedSeries,
    UnsupportedScaling,
    cos,
    egf_coefficient,
    invert_vars,
    max_order,
    pow_exponent,
    reciprocal,
    sec,
    series_arith,
    sin,
    substitute_scaled_var,
    tan,
    zigzag_numbers,
)

N = 12

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series_st(order=N, constant=None):
    coeffs = st.lists(fractions, min_size=order + 1, max_size=order + 1)
    if constant is not None:
        coeffs = coeffs.map(lambda cs: [Fraction(constant)] + cs[1:])
    return coeffs.map(lambda cs: TruncatedSeries(cs, order))


def one(order=N):
    return TruncatedSeries.constant(1, order)


# -- constructors --


def test_sec_and_tan_match_secant_and_tangent_numbers():
    assert sec(6).coeffs == (1, 0, Fraction(1, 2), 0, Fraction(5, 24), 0, Fraction(61, 720))
    assert tan(5).coeffs == (0, 1, 0, Fraction(1, 3), 0, Fraction(2, 15))


def test_zigzag_triangle():
    assert zigzag_numbers(10) == (1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521)


def test_egf_coefficient_examples():
    assert egf_coefficient(sec(8) + tan(8), 7) == 272
    assert egf_coefficient(reciprocal(cos(6) - sin(6)), 4) == 57
    f = TruncatedSeries([7, 1, 2], 2)
    assert egf_coefficient(f, 0) == 7
    with pytest.raises(IndexError):
        egf_coefficient(f, 3)


def test_springer_egf_from_reciprocal():
    s = reciprocal(cos(6) - sin(6))
    assert [egf_coefficient(s, n) for n in range(7)] == [1, 1, 3, 11, 57, 361, 2763]


def test_reciprocal_of_cos_is_sec():
    assert reciprocal(cos(N)) == sec(N)


def test_reciprocal_needs_unit_constant():
    with pytest.raises(SeriesDomainError):
        reciprocal(sin(5))
    with pytest.raises(SeriesDomainError):
        TruncatedSeries([P + Q, 1], 3).reciprocal()


def test_sec_times_cos_is_one():
    assert series_arith(sec(N), cos(N), "mul") == one()


def test_tan_is_sin_over_cos():
    assert sin(N) * reciprocal(cos(N)) == tan(N)


def test_pythagoras():
    assert sin(N) * sin(N) + cos(N) * cos(N) == one()


def test_derivative_of_tan():
    t = tan(N + 1)
    assert t.derivative() == (1 + t * t).truncate(N)


def test_integrate_examples():
    assert one(5).integrate() == TruncatedSeries.variable(6)
    assert cos(N).integrate() == sin(N + 1)


def test_integrate_cap():
    assert one(5).integrate(cap=5).order == 5


def test_binary_order_is_minimum():
    assert (sec(5) + sin(8)).order == 5
    assert (sec(5) * sin(8)).order == 5


def test_scale_examples():
    s2 = substitute_scaled_var(sin(5), 2)
    assert s2.coeffs[:4] == (0, 2, 0, Fraction(-4, 3))
    assert substitute_scaled_var(sec(N), 1) == sec(N)
    spq = substitute_scaled_var(sec(4), P * Q)
    assert spq[2] == P**2 * Q**2 / 2
    assert spq[0] == 1


def test_scale_rejects_polynomial_argument():
    with pytest.raises(UnsupportedScaling):
        sec(4).scale(P + Q)


def test_exp_log_examples():
    assert TruncatedSeries([0], N).exp() == one()
    lsec = sec(N).log()
    assert lsec[2] == Fraction(1, 2)
    assert lsec[4] == Fraction(1, 12)
    assert lsec.exp() == sec(N)


def test_exp_log_domain_errors():
    with pytest.raises(SeriesDomainError):
        one(3).exp()
    with pytest.raises(SeriesDomainError):
        sin(3).log()
    with pytest.raises(SeriesDomainError):
        (2 * sec(3)).pow(Q)


def test_pow_examples():
    f = pow_exponent(sec(4), Q)
    assert egf_coefficient(f, 4) == 2 * Q + 3 * Q**2
    assert pow_exponent(sec(N), 0) == one()
    assert pow_exponent(sec(N), 1) == sec(N)
    assert pow_exponent(sec(N), -1) == cos(N)


def test_invert_vars_on_series_is_involution():
    f = sec(6).pow(P + Q)
    assert invert_vars(invert_vars(f)) == f
    assert invert_vars(P * Q**2 + P**2 * Q) == P**-1 * Q**-2 + P**-2 * Q**-1


def test_getitem_out_of_range():
    with pytest.raises(IndexError):
        sec(3)[4]


def test_max_order_env(monkeypatch):
    monkeypatch.delenv("ALTPERM_MAX_ORDER", raising=False)
    assert max_order() == 14
    monkeypatch.setenv("ALTPERM_MAX_ORDER", "20")
    assert max_order() == 20


# -- property tests --

SMALL = 8


@settings(max_examples=40, deadline=None)
@given(series_st(SMALL), series_st(SMALL), series_st(SMALL))
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=40, deadline=None)
@given(series_st(SMALL, constant=1))
def test_reciprocal_property(f):
    assert f * f.reciprocal() == one(SMALL)


@settings(max_examples=40, deadline=None)
@given(series_st(SMALL, constant=1), fractions, fractions)
def test_pow_additivity_rational(f, a, b):
    assert f.pow(a) * f.pow(b) == f.pow(a + b)


@settings(max_examples=20, deadline=None)
@given(series_st(6, constant=1), st.integers(-2, 2), st.integers(-2, 2))
def test_pow_additivity_laurent_exponents(f, i, j):
    e1, e2 = Q**i + P, P**j * Q
    assert f.pow(e1) * f.pow(e2) == f.pow(e1 + e2)


@settings(max_examples=40, deadline=None)
@given(series_st(SMALL, constant=0))
def test_log_exp_round_trip(g):
    assert g.exp().log() == g


@settings(max_examples=40, deadline=None)
@given(series_st(SMALL), st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 4))
def test_scale_inverse(f, i, j, c):
    m = c * P**i * Q**j
    assert f.scale(m).scale(m.inverse()) == f


@settings(max_examples=40, deadline=None)
@given(series_st(SMALL))
def test_derivative_inverts_integrate(f):
    assert f.integrate().derivative() == f


def test_integer_pow_matches_repeated_product():
    f = sec(N) + sin(N)
    assert f**3 == f * f * f


def test_series_with_laurent_coefficients_multiply():
    f = TruncatedSeries([1, P], 3)
    g = TruncatedSeries([1, LaurentPolynomial.constant(-1) * P], 3)
    assert (f * g)[2] == -P**2
