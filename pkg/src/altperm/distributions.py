"""Distributions of maxima/minima statistics on alternating permutations.

Every distribution is available by exhaustive enumeration (``brute_*``), by
extracting EGF coefficients from a closed-form series (``gf_*``) and, for the
mmp pairs, by binomial convolution (``rec_joint_mmp``). :func:`verify`
compares any set of these and raises :class:`VerificationError` on
disagreement.

Variable conventions: single statistics are recorded by ``q``. Joint mmp
distributions record ``mmp(0,1,0,0)`` by ``p`` and ``mmp(1,0,0,0)`` by ``q``;
joint max/min distributions record ``lrmax`` by ``p`` and ``rlmax`` by ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Mapping, Tuple

from .laurent import ONE, P, Q, LaurentPolynomial, PolynomialityError, from_counts
from .perms import AltClass, MmpSpec, StatKind
from .series import TruncatedSeries, egf_coefficient, sec
from . import sweep

UD = AltClass.UP_DOWN
DU = AltClass.DOWN_UP

NON_RLMAX = MmpSpec(1, 0, 0, 0)
NON_LRMAX = MmpSpec(0, 1, 0, 0)
NON_LRMIN = MmpSpec(0, 0, 1, 0)
NON_RLMIN = MmpSpec(0, 0, 0, 1)


class VerificationError(AssertionError):
    """Independent computations of the same quantity disagree."""

    def __init__(self, what: str, results: Mapping[str, object]):
        self.what = what
        self.results = dict(results)
        lines = [f"{what}: methods disagree"]
        items = list(self.results.items())
        for name, value in items:
            lines.append(f"  {name}: {value}")
        base_name, base = items[0]
        for name, value in items[1:]:
            if value != base:
                try:
                    lines.append(f"  {name} - {base_name}: {value - base}")
                except TypeError:
                    pass
        super().__init__("\n".join(lines))


def verify(what: str, results: Mapping[str, object]):
    """Return the common value of ``results`` or raise :class:`VerificationError`."""
    values = list(results.values())
    if not values:
        raise ValueError("nothing to verify")
    if any(v != values[0] for v in values[1:]):
        raise VerificationError(what, results)
    return values[0]


def as_distribution(c, what: str = "coefficient") -> LaurentPolynomial:
    """Checkpoint: a genuine polynomial with non-negative integer coefficients."""
    poly = LaurentPolynomial.coerce(c)
    poly.require_polynomial(what)
    if not poly.has_integer_coefficients() or any(v < 0 for _, v in poly.items()):
        raise PolynomialityError(f"{what} is not a counting polynomial: {poly}")
    return poly


def _require_length(n: int):
    if n < 1:
        raise ValueError(f"length must be at least 1, got {n}")


# -- single statistics --

#: variant -> (class, parity of length) for q^rlmax
SINGLE_VARIANTS: Dict[int, Tuple[AltClass, int]] = {1: (UD, 0), 2: (UD, 1), 3: (DU, 0), 4: (DU, 1)}

#: equidistributed (class, statistic) representatives of each variant
SINGLE_FAMILIES: Dict[int, List[Tuple[AltClass, StatKind]]] = {
    1: [(UD, StatKind.RLMAX), (DU, StatKind.LRMAX), (DU, StatKind.RLMIN), (UD, StatKind.LRMIN)],
    2: [(UD, StatKind.RLMAX), (UD, StatKind.LRMAX), (DU, StatKind.RLMIN), (DU, StatKind.LRMIN)],
    3: [(DU, StatKind.RLMAX), (UD, StatKind.LRMAX), (UD, StatKind.RLMIN), (DU, StatKind.LRMIN)],
    4: [(DU, StatKind.RLMAX), (DU, StatKind.LRMAX), (UD, StatKind.RLMIN), (UD, StatKind.LRMIN)],
}


def single_variant(n: int, cls, kind=StatKind.RLMAX) -> int:
    """Which of the four single-statistic series governs ``kind`` on ``cls`` at length ``n``."""
    cls, kind = AltClass.parse(cls), StatKind(kind)
    for variant, family in SINGLE_FAMILIES.items():
        if (cls, kind) in family and SINGLE_VARIANTS[variant][1] == n % 2:
            return variant
    raise AssertionError("unreachable")


def brute_single(n: int, cls, kind) -> LaurentPolynomial:
    """``sum q^stat`` over the alternating permutations of length ``n`` in ``cls``."""
    _require_length(n)
    arr = sweep.alternating_array(n, AltClass.parse(cls))
    counts = sweep.tally(sweep.stat_column(arr, kind))
    return from_counts({(0, s): c for (s,), c in counts.items()})


@lru_cache(maxsize=None)
def gf_single(variant: int, order: int) -> TruncatedSeries:
    """Closed-form EGF of ``q^rlmax`` for variant 1..4, truncated at ``t^order``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if variant == 1:
        return sec(order).pow(Q)
    sec_over_q = sec(order).scale(Q.inverse())  # sec(z/q)
    if variant == 2:
        inner = sec_over_q.pow(-Q).integrate().scale(Q)
        return (sec(order).pow(Q) * inner).truncate(order)
    if variant == 3:
        inner = sec_over_q.pow(-Q).integrate()
        outer = (sec_over_q.pow(1 + Q) * inner).integrate().scale(Q)
        return (1 + outer).truncate(order)
    if variant == 4:
        return sec_over_q.pow(1 + Q).integrate().scale(Q).truncate(order)
    raise ValueError(f"single-statistic variant must be 1..4, got {variant}")


def gf_single_coefficient(variant: int, n: int) -> LaurentPolynomial:
    return as_distribution(egf_coefficient(gf_single(variant, max(n, 1)), n), f"F{variant} at length {n}")


def gf_single_for(n: int, cls, kind) -> LaurentPolynomial:
    return gf_single_coefficient(single_variant(n, cls, kind), n)


# -- joint mmp statistics --

#: variant -> (class, parity)
JOINT_VARIANTS: Dict[str, Tuple[AltClass, int]] = {"A": (UD, 0), "B": (UD, 1), "C": (DU, 0), "D": (DU, 1)}

#: equidistributed (class, p-pattern, q-pattern) representatives
JOINT_MMP_FAMILIES: Dict[str, List[Tuple[AltClass, MmpSpec, MmpSpec]]] = {
    "A": [(UD, NON_LRMAX, NON_RLMAX), (DU, NON_RLMAX, NON_LRMAX), (DU, NON_LRMIN, NON_RLMIN), (UD, NON_RLMIN, NON_LRMIN)],
    "B": [(UD, NON_LRMAX, NON_RLMAX), (UD, NON_RLMAX, NON_LRMAX), (DU, NON_LRMIN, NON_RLMIN), (DU, NON_RLMIN, NON_LRMIN)],
    "C": [(DU, NON_LRMAX, NON_RLMAX), (UD, NON_RLMAX, NON_LRMAX), (UD, NON_LRMIN, NON_RLMIN), (DU, NON_RLMIN, NON_LRMIN)],
    "D": [(DU, NON_LRMAX, NON_RLMAX), (DU, NON_RLMAX, NON_LRMAX), (UD, NON_LRMIN, NON_RLMIN), (UD, NON_RLMIN, NON_LRMIN)],
}


def joint_variant(n: int, cls) -> str:
    cls = AltClass.parse(cls)
    for name, (c, parity) in JOINT_VARIANTS.items():
        if c is cls and parity == n % 2:
            return name
    raise AssertionError("unreachable")


def _check_joint_variant(variant: str) -> str:
    variant = variant.upper()
    if variant not in JOINT_VARIANTS:
        raise ValueError(f"joint variant must be one of A, B, C, D; got {variant!r}")
    return variant


def brute_mmp_pair(n: int, cls, p_spec, q_spec) -> LaurentPolynomial:
    """``sum p^mmp(p_spec) q^mmp(q_spec)`` over the class at length ``n``."""
    _require_length(n)
    arr = sweep.alternating_array(n, AltClass.parse(cls))
    quads = sweep.quadrant_columns(arr)
    counts = sweep.tally(sweep.mmp_column(arr, p_spec, quads), sweep.mmp_column(arr, q_spec, quads))
    return from_counts(counts)


def brute_joint_mmp(n: int, cls) -> LaurentPolynomial:
    """Joint distribution of ``(mmp(0,1,0,0), mmp(1,0,0,0))`` recorded by ``(p, q)``."""
    return brute_mmp_pair(n, cls, NON_LRMAX, NON_RLMAX)


@lru_cache(maxsize=None)
def _mmp_ingredients(order: int):
    pq = P * Q
    weight = sec(order).scale(pq).pow(P.inverse() + Q.inverse())  # sec(pq s)^(1/p + 1/q)
    int_p = sec(order).scale(P).pow(-P.inverse()).integrate()  # x -> int_0^x sec(pz)^(-1/p) dz
    int_q = sec(order).scale(Q).pow(-Q.inverse()).integrate()
    return weight, int_p.scale(Q), int_q.scale(P)


@lru_cache(maxsize=None)
def gf_joint_mmp(variant: str, order: int) -> TruncatedSeries:
    """Closed-form EGF of the joint mmp distribution for A, B, C or D."""
    variant = _check_joint_variant(variant)
    if order < 1:
        raise ValueError("order must be at least 1")
    weight, int_p_qs, int_q_ps = _mmp_ingredients(order)
    if variant == "A":
        series = 1 + (weight * int_p_qs).integrate()
    elif variant == "B":
        series = TruncatedSeries.variable(order + 1) + (weight * int_p_qs * int_q_ps).integrate()
    elif variant == "C":
        series = 1 + (weight * int_q_ps).integrate()
    else:
        series = weight.integrate()
    return series.truncate(order)


def gf_joint_mmp_coefficient(variant: str, n: int) -> LaurentPolynomial:
    variant = _check_joint_variant(variant)
    return as_distribution(egf_coefficient(gf_joint_mmp(variant, max(n, 1)), n), f"{variant} at length {n}")


@lru_cache(maxsize=None)
def _rec_a(n: int) -> LaurentPolynomial:
    # UD of even length n; the maximum sits at position 2k
    if n == 0:
        return ONE
    total = LaurentPolynomial()
    for k in range(1, n // 2 + 1):
        left = _rec_b(2 * k - 1).specialize(q=1).shift(0, 2 * k - 1)
        right = _rec_a(n - 2 * k).specialize(p=1).shift(n - 2 * k, 0)
        total = total + left * right * comb(n - 1, 2 * k - 1)
    return total


@lru_cache(maxsize=None)
def _rec_b(n: int) -> LaurentPolynomial:
    # UD of odd length n = 2m+1; the maximum sits at position 2k, 1 <= k <= m
    if n == 1:
        return ONE
    m = (n - 1) // 2
    total = LaurentPolynomial()
    for k in range(1, m + 1):
        left = _rec_b(2 * k - 1).specialize(q=1).shift(0, 2 * k - 1)
        right_len = n - 2 * k
        right = _rec_b(right_len).specialize(p=1).shift(right_len, 0)
        total = total + left * right * comb(n - 1, 2 * k - 1)
    return total


def _down_up_left_block(m: int) -> LaurentPolynomial:
    # p-distribution of mmp(0,1,0,0) over DU of even length m, i.e. C_m(p, 1).
    # Reversal turns it into the q-marginal of A with q renamed to p.
    return _rec_a(m).specialize(p=1).swap()


def _rec_c(n: int) -> LaurentPolynomial:
    # DU of even length n; the maximum sits at position 2k+1
    if n == 0:
        return ONE
    total = LaurentPolynomial()
    for k in range(0, n // 2):
        left = _down_up_left_block(2 * k).shift(0, 2 * k)
        right_len = n - 2 * k - 1
        right = _rec_b(right_len).specialize(p=1).shift(right_len, 0)
        total = total + left * right * comb(n - 1, 2 * k)
    return total


def _rec_d(n: int) -> LaurentPolynomial:
    # DU of odd length n = 2m+1; the maximum sits at position 2k+1
    m = (n - 1) // 2
    total = LaurentPolynomial()
    for k in range(0, m + 1):
        left = _down_up_left_block(2 * k).shift(0, 2 * k)
        right_len = n - 1 - 2 * k
        right = _rec_a(right_len).specialize(p=1).shift(right_len, 0)
        total = total + left * right * comb(n - 1, 2 * k)
    return total


def rec_joint_mmp(variant: str, n: int) -> LaurentPolynomial:
    """Joint mmp distribution by convolution over the position of the maximum.

    Entries left of the maximum all have a larger entry to their right (one
    factor ``q`` each) and entries right of it all have a larger entry to
    their left (one factor ``p`` each); each side then contributes its own
    distribution with the other variable set to 1. Values are memoised.
    """
    variant = _check_joint_variant(variant)
    parity = JOINT_VARIANTS[variant][1]
    if n < 0 or n % 2 != parity:
        raise ValueError(f"variant {variant} needs {'odd' if parity else 'even'} length, got {n}")
    if variant == "A":
        return _rec_a(n)
    if variant == "B":
        return _rec_b(n)
    if variant == "C":
        return _rec_c(n)
    return _rec_d(n)


# -- joint max/min statistics --

MAXMIN_VARIANTS: Dict[int, Tuple[AltClass, int]] = {1: (UD, 0), 2: (UD, 1), 3: (DU, 0), 4: (DU, 1)}
MAXMIN_TO_MMP = {1: "A", 2: "B", 3: "C", 4: "D"}

L, R = StatKind.LRMAX, StatKind.RLMAX
LN, RN = StatKind.LRMIN, StatKind.RLMIN

#: equidistributed (class, p-statistic, q-statistic) representatives
MAXMIN_FAMILIES: Dict[int, List[Tuple[AltClass, StatKind, StatKind]]] = {
    1: [(UD, L, R), (DU, R, L), (DU, LN, RN), (UD, RN, LN)],
    2: [(UD, L, R), (UD, R, L), (DU, LN, RN), (DU, RN, LN)],
    3: [(DU, L, R), (UD, R, L), (UD, LN, RN), (DU, RN, LN)],
    4: [(DU, L, R), (DU, R, L), (UD, LN, RN), (UD, RN, LN)],
}


def maxmin_variant(n: int, cls) -> int:
    cls = AltClass.parse(cls)
    for variant, (c, parity) in MAXMIN_VARIANTS.items():
        if c is cls and parity == n % 2:
            return variant
    raise AssertionError("unreachable")


def _check_maxmin_variant(variant) -> int:
    if isinstance(variant, str):
        variant = variant.upper().lstrip("G")
    variant = int(variant)
    if variant not in MAXMIN_VARIANTS:
        raise ValueError(f"max/min variant must be G1..G4, got {variant}")
    return variant


def brute_stat_pair(n: int, cls, p_kind, q_kind) -> LaurentPolynomial:
    _require_length(n)
    arr = sweep.alternating_array(n, AltClass.parse(cls))
    return from_counts(sweep.tally(sweep.stat_column(arr, p_kind), sweep.stat_column(arr, q_kind)))


def brute_joint_maxmin(n: int, cls) -> LaurentPolynomial:
    """``sum p^lrmax q^rlmax`` over the class at length ``n``."""
    return brute_stat_pair(n, cls, L, R)


@lru_cache(maxsize=None)
def _maxmin_ingredients(order: int):
    pq = P * Q
    weight = sec(order).scale((pq).inverse()).pow(P + Q)  # sec(s/pq)^(p+q)
    int_p = sec(order).scale(P.inverse()).pow(-P).integrate()  # x -> int_0^x sec(z/p)^(-p) dz
    int_q = sec(order).scale(Q.inverse()).pow(-Q).integrate()
    return weight, int_p.scale(Q.inverse()), int_q.scale(P.inverse())


@lru_cache(maxsize=None)
def gf_joint_maxmin(variant, order: int) -> TruncatedSeries:
    """Closed-form EGF of ``p^lrmax q^rlmax`` for G1..G4."""
    variant = _check_maxmin_variant(variant)
    if order < 1:
        raise ValueError("order must be at least 1")
    weight, int_p_sq, int_q_sp = _maxmin_ingredients(order)
    pq = P * Q
    if variant == 1:
        series = 1 + (weight * int_p_sq).integrate().scale(pq)
    elif variant == 2:
        series = (TruncatedSeries.variable(order + 1) + (weight * int_p_sq * int_q_sp).integrate()).scale(pq)
    elif variant == 3:
        series = 1 + (weight * int_q_sp).integrate().scale(pq)
    else:
        series = weight.integrate().scale(pq)
    return series.truncate(order)


@lru_cache(maxsize=None)
def gf_joint_maxmin_via_subst(variant, order: int) -> TruncatedSeries:
    """``X(pq t, 1/p, 1/q)`` for the matching mmp series X in A..D."""
    variant = _check_maxmin_variant(variant)
    return gf_joint_mmp(MAXMIN_TO_MMP[variant], order).invert_vars().scale(P * Q)


def gf_joint_maxmin_coefficient(variant, n: int, via_subst: bool = False) -> LaurentPolynomial:
    variant = _check_maxmin_variant(variant)
    series = (gf_joint_maxmin_via_subst if via_subst else gf_joint_maxmin)(variant, max(n, 1))
    return as_distribution(egf_coefficient(series, n), f"G{variant} at length {n}")


def rec_joint_maxmin(variant, n: int) -> LaurentPolynomial:
    """``G_n(p, q) = (pq)^n X_n(1/p, 1/q)`` with ``X_n`` from :func:`rec_joint_mmp`."""
    variant = _check_maxmin_variant(variant)
    x = rec_joint_mmp(MAXMIN_TO_MMP[variant], n)
    return as_distribution(x.invert_vars().shift(n, n), f"G{variant} at length {n}")


# -- equidistribution report --


@dataclass
class IdentityCheck:
    name: str
    length: int
    passed: bool
    values: List[LaurentPolynomial] = field(default_factory=list)


def check_equidistribution(n: int) -> List[IdentityCheck]:
    """Brute-force every equidistribution identity that applies at length ``n``."""
    _require_length(n)
    parity = n % 2
    report: List[IdentityCheck] = []
    for variant, family in SINGLE_FAMILIES.items():
        if SINGLE_VARIANTS[variant][1] != parity:
            continue
        vals = [brute_single(n, cls, kind) for cls, kind in family]
        report.append(IdentityCheck(f"F{variant} family", n, all(v == vals[0] for v in vals), vals))
    for variant, family in JOINT_MMP_FAMILIES.items():
        if JOINT_VARIANTS[variant][1] != parity:
            continue
        vals = [brute_mmp_pair(n, cls, ps, qs) for cls, ps, qs in family]
        report.append(IdentityCheck(f"{variant} family", n, all(v == vals[0] for v in vals), vals))
    for variant, family in MAXMIN_FAMILIES.items():
        if MAXMIN_VARIANTS[variant][1] != parity:
            continue
        vals = [brute_stat_pair(n, cls, pk, qk) for cls, pk, qk in family]
        report.append(IdentityCheck(f"G{variant} family", n, all(v == vals[0] for v in vals), vals))
        if parity == 1:
            g = vals[0]
            report.append(IdentityCheck(f"G{variant} p<->q symmetry", n, g == g.swap(), [g, g.swap()]))
    return report
