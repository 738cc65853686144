"""Euler and Springer numbers, rc-fixed up-down permutations, and their refinements.

Springer-type series are indexed by half-length: the ``t^n`` coefficient of
``P``, ``Q``, ``U`` and ``W`` describes rc-fixed up-down permutations of
length ``2n``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import List

from .laurent import P, Q, LaurentPolynomial, from_counts
from .distributions import as_distribution, verify
from .perms import AltClass
from .series import TruncatedSeries, cos, egf_coefficient, max_order, sec, sin, tan
from . import sweep


class SequenceMismatch(AssertionError):
    pass


def euler_recurrence(n_max: int) -> List[int]:
    """``E_0 .. E_{n_max}`` from ``2 E_{n+1} = sum_k C(n,k) E_{n-k} E_k``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    e = [1, 1]
    for n in range(1, n_max):
        total = sum(comb(n, k) * e[n - k] * e[k] for k in range(n + 1))
        e.append(total // 2)
    return e[: n_max + 1]


def euler_numbers(n_max: int) -> List[int]:
    """Euler numbers by recurrence, cross-checked against the EGF ``sec t + tan t``."""
    values = euler_recurrence(n_max)
    check = min(n_max, max_order())
    series = sec(check) + tan(check)
    for n in range(check + 1):
        if egf_coefficient(series, n) != values[n]:
            raise SequenceMismatch(f"E_{n}: recurrence {values[n]} != sec+tan {egf_coefficient(series, n)}")
    return values


def springer_series(order: int) -> TruncatedSeries:
    """``1 / (cos t - sin t)``."""
    return (cos(order) - sin(order)).reciprocal()


def springer_numbers(n_max: int) -> List[int]:
    series = springer_series(n_max)
    return [int(egf_coefficient(series, n)) for n in range(n_max + 1)]


def rc_count_recurrence(n_max: int) -> List[int]:
    """``b_n = sum_k 2^k C(n-1,k) E_k b_{n-k-1}`` with ``b_0 = 1``."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    e = euler_recurrence(max(n_max, 1))
    b = [1]
    for n in range(1, n_max + 1):
        b.append(sum(2**k * comb(n - 1, k) * e[k] * b[n - k - 1] for k in range(n)))
    return b


def rc_fixed_array(length: int):
    """Rows of the up-down array of even ``length`` fixed by reverse-complement."""
    if length < 0 or length % 2:
        raise ValueError(f"rc-fixed up-down permutations need an even length, got {length}")
    arr = sweep.alternating_array(length, AltClass.UP_DOWN)
    return arr[sweep.rc_fixed_mask(arr)]


def brute_rc_count(half_n: int) -> int:
    return int(len(rc_fixed_array(2 * half_n)))


def verified_springer(n_max: int) -> List[int]:
    """Springer numbers where EGF, recurrence and enumeration agree."""
    gf, rec = springer_numbers(n_max), rc_count_recurrence(n_max)
    brute = [brute_rc_count(n) for n in range(n_max + 1)]
    return verify(f"Springer numbers up to {n_max}", {"gf": gf, "rec": rec, "brute": brute})


# -- q- and (p,q)-analogues --


def _euler_egf(order: int) -> TruncatedSeries:
    return sec(order) + tan(order)


@lru_cache(maxsize=None)
def gf_W(order: int) -> TruncatedSeries:
    """``int_0^t (sec 2qz + tan 2qz) / (cos pz - sin pz) dz``: p marks be, q marks lle."""
    return _refined(order, 2 * Q, P)


@lru_cache(maxsize=None)
def gf_Q(order: int) -> TruncatedSeries:
    """``int_0^t (sec 2qz + tan 2qz) / (cos z - sin z) dz``: q marks lle."""
    return _refined(order, 2 * Q, 1)


@lru_cache(maxsize=None)
def gf_U(order: int) -> TruncatedSeries:
    """``int_0^t (sec 2z + tan 2z) / (cos pz - sin pz) dz``: p marks be."""
    return _refined(order, 2, P)


def _refined(order: int, euler_scale, springer_scale) -> TruncatedSeries:
    if order < 1:
        raise ValueError("order must be at least 1")
    integrand = _euler_egf(order - 1).scale(euler_scale) * springer_series(order - 1).scale(springer_scale)
    return integrand.integrate()


def refined_coefficient(which: str, half_n: int) -> LaurentPolynomial:
    series = {"Q": gf_Q, "U": gf_U, "W": gf_W}[which](max(half_n, 1))
    return as_distribution(egf_coefficient(series, half_n), f"{which} at half-length {half_n}")


def brute_lle_be(length: int) -> LaurentPolynomial:
    """``sum p^be q^lle`` over rc-fixed up-down permutations of even ``length``."""
    if length < 2 or length % 2:
        raise ValueError(f"need an even length >= 2, got {length}")
    lle, be = sweep.extreme_columns(rc_fixed_array(length))
    return from_counts({(b, l): c for (b, l), c in sweep.tally(be, lle).items()})


# -- further q-deformations of the Springer series --

Q_SPRINGER_FORMS = {
    1: "1/(cos t - q sin t)",
    2: "1/(cos t - sin qt)",
    3: "1/(cos qt - sin t)",
    4: "(cos t - sin t)^(-q)",
}


def q_springer_series(i: int, order: int) -> TruncatedSeries:
    """The four q-deformations of ``1/(cos t - sin t)``; each reduces to it at ``q = 1``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    c, s = cos(order), sin(order)
    if i == 1:
        return (c - s * Q).reciprocal()
    if i == 2:
        return (c - s.scale(Q)).reciprocal()
    if i == 3:
        return (c.scale(Q) - s).reciprocal()
    if i == 4:
        return (c - s).pow(-Q)
    raise ValueError(f"series index must be 1..4, got {i}")

