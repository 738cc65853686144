from math import comb

import pytest

from altperm import springer as s
from altperm.laurent import P, Q, LaurentPolynomial
from altperm.perms import enumerate_alternating, enumerate_rc_fixed, extreme_stats
from altperm.series import egf_coefficient

SPRINGER = [1, 1, 3, 11, 57, 361, 2763]

Q_GOLDEN = {
    1: [1],
    2: [1, 2],
    3: [3, 4, 4],
    4: [11, 18, 12, 16],
    5: [57, 88, 72, 64, 80],
    6: [361, 570, 440, 480, 400, 512],
}


def q_poly(coeffs):
    return LaurentPolynomial({(0, i): c for i, c in enumerate(coeffs) if c})


def test_euler_numbers():
    assert s.euler_numbers(8) == [1, 1, 1, 2, 5, 16, 61, 272, 1385]
    assert s.euler_recurrence(0) == [1]


def test_euler_recurrence_first_step():
    # 2 E_2 = C(1,0) E_1 E_0 + C(1,1) E_0 E_1
    e = s.euler_recurrence(2)
    assert 2 * e[2] == comb(1, 0) * e[1] * e[0] + comb(1, 1) * e[0] * e[1]


def test_euler_counts_up_down_permutations():
    assert len(list(enumerate_alternating(4, "ud"))) == s.euler_numbers(4)[4] == 5


def test_springer_numbers():
    assert s.springer_numbers(6) == SPRINGER
    assert s.rc_count_recurrence(6) == SPRINGER


def test_rc_recurrence_second_term():
    # b_2 = 2^0 C(1,0) E_0 b_1 + 2^1 C(1,1) E_1 b_0
    assert s.rc_count_recurrence(2)[2] == 1 * 1 * 1 * 1 + 2 * 1 * 1 * 1 == 3


def test_brute_rc_counts():
    assert [s.brute_rc_count(n) for n in range(6)] == SPRINGER[:6]
    assert s.brute_rc_count(2) == len(list(enumerate_rc_fixed(4))) == 3
    with pytest.raises(ValueError):
        s.rc_fixed_array(5)


def test_verified_springer():
    assert s.verified_springer(5) == SPRINGER[:6]


def test_brute_lle_be_examples():
    d4 = s.brute_lle_be(4)
    assert d4 == P + 2 * Q
    assert d4.specialize(p=1) == 1 + 2 * Q
    assert d4(1, 1) == 3


@pytest.mark.parametrize("half", range(1, 6))
def test_brute_lle_be_matches_scalar_code(half):
    expected = LaurentPolynomial()
    for pi in enumerate_rc_fixed(2 * half):
        lle, be = extreme_stats(pi)
        expected = expected + P**be * Q**lle
    assert s.brute_lle_be(2 * half) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_refined_series_against_enumeration(n):
    joint = s.brute_lle_be(2 * n)
    assert s.refined_coefficient("Q", n) == joint.specialize(p=1) == q_poly(Q_GOLDEN[n])
    assert s.refined_coefficient("U", n) == joint.specialize(q=1)
    assert s.refined_coefficient("W", n) == joint


def test_q_expansion_golden_values():
    for n, coeffs in Q_GOLDEN.items():
        assert s.refined_coefficient("Q", n) == q_poly(coeffs)


def test_w_specialises_to_q_and_u():
    w, qs, us = s.gf_W(8), s.gf_Q(8), s.gf_U(8)
    assert w.map(lambda c: LaurentPolynomial.coerce(c).specialize(p=1)) == qs
    assert w.map(lambda c: LaurentPolynomial.coerce(c).specialize(q=1)) == us


def test_refined_series_at_one_are_springer_minus_one():
    target = s.springer_series(8) - 1
    for series in (s.gf_Q(8), s.gf_U(8), s.gf_W(8)):
        at_one = series.map(lambda c: LaurentPolynomial.coerce(c)(1, 1))
        assert at_one.agrees_with(target, upto=8, start=1)
        assert at_one[0] == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_lle_be_reciprocity(n):
    qn, un = s.refined_coefficient("Q", n), s.refined_coefficient("U", n)
    for i in range(n):
        assert qn.coefficient(0, i) == un.coefficient(n - 1 - i, 0)


Q_DEFORMED_GOLDEN = {
    1: [q_poly([1]), q_poly([0, 1]), q_poly([1, 0, 2]), q_poly([0, 5, 0, 6]), q_poly([5, 0, 28, 0, 24])],
    2: [q_poly([1]), q_poly([0, 1]), q_poly([1, 0, 2]), q_poly([0, 6, 0, 5]), q_poly([5, 0, 36, 0, 16])],
    3: [q_poly([1]), q_poly([1]), q_poly([2, 0, 1]), q_poly([5, 0, 6]), q_poly([16, 0, 36, 0, 5])],
    4: [q_poly([1]), q_poly([0, 1]), q_poly([0, 2, 1]), q_poly([0, 4, 6, 1]), q_poly([0, 16, 28, 12, 1])],
}


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_q_deformed_springer_golden_coefficients(i):
    series = s.q_springer_series(i, 4)
    assert [LaurentPolynomial.coerce(egf_coefficient(series, n)) for n in range(5)] == Q_DEFORMED_GOLDEN[i]


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_q_deformed_springer_at_one(i):
    series = s.q_springer_series(i, 8).map(lambda c: LaurentPolynomial.coerce(c)(1, 1))
    assert series == s.springer_series(8)


def test_q_deformed_springer_bad_index():
    with pytest.raises(ValueError):
        s.q_springer_series(5, 4)
