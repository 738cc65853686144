"""Flat partially ordered patterns on alternating permutations."""

from __future__ import annotations

import enum
from functools import lru_cache
from math import comb
from typing import Dict, List

import numpy as np

from .perms import AltClass, Pop, symmetry_image_class
from .springer import euler_recurrence
from . import sweep


class FlatPopVariant(enum.Enum):
    """The four flat posets: one extreme label against an antichain of ``k-1`` labels."""

    LAMBDA = "lambda"  # bottoms 1..k-1 under top k
    TOP_FIRST = "top_first"  # bottoms 2..k under top 1
    BOTTOM_FIRST = "bottom_first"  # tops 2..k over bottom 1
    VEE = "vee"  # tops 1..k-1 over bottom k

    @classmethod
    def parse(cls, s) -> "FlatPopVariant":
        if isinstance(s, FlatPopVariant):
            return s
        try:
            return cls(str(s).lower().replace("-", "_"))
        except ValueError:
            raise ValueError(f"unknown flat POP variant {s!r}") from None


#: symmetry carrying an occurrence of the lambda pattern to one of the variant
VARIANT_SYMMETRY = {
    FlatPopVariant.LAMBDA: None,
    FlatPopVariant.TOP_FIRST: "reverse",
    FlatPopVariant.VEE: "complement",
    FlatPopVariant.BOTTOM_FIRST: "reverse_complement",
}


def flat_pop(variant, k: int) -> Pop:
    variant = FlatPopVariant.parse(variant)
    if k < 2:
        raise ValueError("a flat POP needs k >= 2")
    if variant is FlatPopVariant.LAMBDA:
        pairs = [(i, k) for i in range(1, k)]
    elif variant is FlatPopVariant.TOP_FIRST:
        pairs = [(i, 1) for i in range(2, k + 1)]
    elif variant is FlatPopVariant.BOTTOM_FIRST:
        pairs = [(1, i) for i in range(2, k + 1)]
    else:
        pairs = [(k, i) for i in range(1, k)]
    return Pop(k, pairs)


def lambda_pop(k: int) -> Pop:
    return flat_pop(FlatPopVariant.LAMBDA, k)


def _check_k(k: int):
    if k < 3:
        raise ValueError(f"the avoidance recurrences need k >= 3, got {k}")


@lru_cache(maxsize=None)
def _count(k: int, n: int, shape: str) -> int:
    if n < 0:
        return 0
    if n < k:
        return euler_recurrence(max(n, 1))[n]
    f = lambda m: _count(k, m, shape)  # noqa: E731
    even = n % 2 == 0
    m = n // 2
    # alternating-sign inclusion-exclusion over the increasing run of small
    # values forced at the end of the permutation
    if (shape == "a") == even:
        offset = 0 if even else 1
        return sum(
            (-1) ** (i + 1) * comb(k - 1, 2 * i) * f(2 * m - 2 * i + offset) for i in range(1, (k - 1) // 2 + 1)
        )
    offset = 0 if shape == "a" else -1
    return sum((-1) ** i * comb(k - 1, 2 * i + 1) * f(2 * m - 2 * i + offset) for i in range(0, (k - 2) // 2 + 1))


def flat_pop_count_rec(k: int, n: int, shape: str) -> int:
    """Lambda_k-avoiding up-down (``shape="a"``) or down-up (``"b"``) permutations of length ``n``."""
    _check_k(k)
    if shape not in ("a", "b"):
        raise ValueError("shape must be 'a' (up-down) or 'b' (down-up)")
    if n < 0:
        raise ValueError("length must be non-negative")
    return _count(k, n, shape)


def table_shape(variant, cls, n: int) -> str:
    """``"a"`` or ``"b"``: which recurrence counts ``variant``-avoiders of ``cls`` at length ``n``."""
    variant, cls = FlatPopVariant.parse(variant), AltClass.parse(cls)
    op = VARIANT_SYMMETRY[variant]
    image = cls if op is None else symmetry_image_class(cls, n, op)
    return "a" if image is AltClass.UP_DOWN else "b"


def pop_table_lookup(variant, cls, n: int, k: int) -> int:
    return flat_pop_count_rec(k, n, table_shape(variant, cls, n))


def brute_pop_avoiding(n: int, cls, pop: Pop) -> int:
    arr = sweep.alternating_array(n, AltClass.parse(cls))
    return int(sweep.pop_avoidance_mask(arr, pop).sum())


def flat_pop_distribution(n: int, k: int) -> Dict[int, int]:
    """``{l: P(n, l)}``: permutations of length ``n`` with ``l`` occurrences of Lambda_k.

    Inserting ``n+1`` at position ``j`` of an ``n``-permutation adds exactly
    ``C(j-1, k-1)`` new occurrences, all ending at the new maximum.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 0:
        raise ValueError("length must be non-negative")
    row: List[int] = [1]
    for m in range(n):
        width = len(row) + comb(m, k - 1)
        nxt = [0] * width
        for j in range(1, m + 2):
            shift = comb(j - 1, k - 1)
            for ell, c in enumerate(row):
                if c:
                    nxt[ell + shift] += c
        row = nxt
    while len(row) > 1 and row[-1] == 0:
        row.pop()
    return {ell: c for ell, c in enumerate(row) if c}


def brute_pop_distribution(n: int, k: int) -> Dict[int, int]:
    """Occurrence distribution of Lambda_k over all of ``S_n`` by direct scan."""
    arr = sweep.permutation_array(n)
    counts = sweep.pop_occurrence_column(arr, lambda_pop(k))
    values, freq = np.unique(counts, return_counts=True)
    return {int(v): int(c) for v, c in zip(values, freq)}


def brute_avoiders_all(n: int, k: int) -> int:
    arr = sweep.permutation_array(n)
    return int(sweep.pop_avoidance_mask(arr, lambda_pop(k)).sum())
