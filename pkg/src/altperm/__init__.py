"""Exact enumeration of maxima/minima statistics, Springer numbers and flat
POP avoidance on alternating permutations."""

from .laurent import P, Q, LaurentPolynomial, PolynomialityError
from .series import (
    SeriesDomainError,
    TruncatedSeries,
    UnsupportedScaling,
    cos,
    egf_coefficient,
    reciprocal,
    sec,
    series_arith,
    sin,
    substitute_scaled_var,
    tan,
)
from .perms import (
    AltClass,
    MmpSpec,
    Permutation,
    Pop,
    StatKind,
    enumerate_alternating,
    enumerate_rc_fixed,
    extreme_stats,
    mmp_count,
    pop_occurrences,
    stat,
)
from .distributions import VerificationError, verify
from .springer import euler_numbers, springer_numbers, rc_count_recurrence, verified_springer
from .pops import FlatPopVariant, brute_pop_avoiding, flat_pop, flat_pop_count_rec, flat_pop_distribution, pop_table_lookup

__version__ = "0.1.0"

__all__ = [
    "P",
    "Q",
    "LaurentPolynomial",
    "PolynomialityError",
    "SeriesDomainError",
    "TruncatedSeries",
    "UnsupportedScaling",
    "cos",
    "egf_coefficient",
    "reciprocal",
    "sec",
    "series_arith",
    "sin",
    "substitute_scaled_var",
    "tan",
    "AltClass",
    "MmpSpec",
    "Permutation",
    "Pop",
    "StatKind",
    "enumerate_alternating",
    "enumerate_rc_fixed",
    "extreme_stats",
    "mmp_count",
    "pop_occurrences",
    "stat",
    "VerificationError",
    "verify",
    "euler_numbers",
    "springer_numbers",
    "rc_count_recurrence",
    "verified_springer",
    "FlatPopVariant",
    "brute_pop_avoiding",
    "flat_pop",
    "flat_pop_count_rec",
    "flat_pop_distribution",
    "pop_table_lookup",
]
