"""Vectorised enumeration kernels.

Alternating permutations are grown breadth-first: every surviving prefix is
extended by each admissible next value, so the alternation constraint is
applied incrementally and no non-alternating prefix is ever materialised.
Rows come out in lexicographic order. At length 12 this is ~2.7 million rows
of 12 bytes; statistics are then column operations over the whole block.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Dict, Sequence, Tuple

import numpy as np

from .perms import AltClass, MmpSpec, Pop, StatKind

DTYPE = np.int8


def _grow(n: int, cls: AltClass | None, prefix: Sequence[int] = ()) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=DTYPE)
    prefix = list(prefix)
    rows = np.array([prefix], dtype=DTYPE).reshape(1, len(prefix))
    used = np.zeros((1, n + 1), dtype=bool)
    used[0, prefix] = True
    used[:, 0] = True
    values = np.arange(n + 1, dtype=DTYPE)
    first_up = cls is AltClass.UP_DOWN
    for pos in range(len(prefix), n):
        ok = ~used
        if pos > 0 and cls is not None:
            prev = rows[:, pos - 1 : pos]
            ascent = ((pos - 1) % 2 == 0) == first_up
            ok &= (values[None, :] > prev) if ascent else (values[None, :] < prev)
        r, v = np.nonzero(ok)
        rows = np.concatenate([rows[r], v.astype(DTYPE)[:, None]], axis=1)
        used = used[r]
        used[np.arange(len(r)), v] = True
    return rows


@lru_cache(maxsize=8)
def alternating_array(n: int, cls) -> np.ndarray:
    """All alternating permutations of ``1..n`` of ``cls``, one per row (read-only)."""
    if n < 0:
        raise ValueError("length must be non-negative")
    arr = _grow(n, AltClass.parse(cls))
    arr.flags.writeable = False
    return arr


def alternating_array_with_prefix(n: int, cls, prefix: Sequence[int]) -> np.ndarray:
    """One partition of :func:`alternating_array`: rows starting with ``prefix``."""
    cls = AltClass.parse(cls)
    from .perms import is_alternating

    if len(set(prefix)) != len(prefix) or any(not 1 <= v <= n for v in prefix) or not is_alternating(prefix, cls):
        return np.zeros((0, n), dtype=DTYPE)
    return _grow(n, cls, prefix)


@lru_cache(maxsize=4)
def permutation_array(n: int) -> np.ndarray:
    """All of ``S_n`` in lexicographic order."""
    arr = _grow(n, None)
    arr.flags.writeable = False
    return arr


# -- statistics --


def _left_records(arr: np.ndarray, maxima: bool) -> np.ndarray:
    if arr.shape[1] == 0:
        return np.zeros(arr.shape[0], dtype=np.int64)
    acc = np.maximum.accumulate(arr, axis=1) if maxima else np.minimum.accumulate(arr, axis=1)
    return (arr == acc).sum(axis=1)


def stat_column(arr: np.ndarray, kind) -> np.ndarray:
    kind = StatKind(kind)
    if kind is StatKind.LRMAX:
        return _left_records(arr, True)
    if kind is StatKind.LRMIN:
        return _left_records(arr, False)
    rev = arr[:, ::-1]
    return _left_records(rev, kind is StatKind.RLMAX)


def quadrant_columns(arr: np.ndarray) -> Tuple[np.ndarray, ...]:
    """Per-point quadrant counts, each of shape ``(rows, n)``."""
    rows, n = arr.shape
    q1 = np.zeros((rows, n), dtype=np.int8)
    q2 = np.zeros((rows, n), dtype=np.int8)
    for i in range(n):
        v = arr[:, i : i + 1]
        if i + 1 < n:
            q1[:, i] = (arr[:, i + 1 :] > v).sum(axis=1)
        if i:
            q2[:, i] = (arr[:, :i] > v).sum(axis=1)
    idx = np.arange(n, dtype=np.int8)[None, :]
    q3 = idx - q2
    q4 = (n - 1 - idx) - q1
    return q1, q2, q3, q4


def mmp_column(arr: np.ndarray, spec, quadrants: Tuple[np.ndarray, ...] | None = None) -> np.ndarray:
    spec = spec if isinstance(spec, MmpSpec) else MmpSpec(*spec)
    if quadrants is None:
        quadrants = quadrant_columns(arr)
    hit = np.ones(arr.shape, dtype=bool)
    for quad, need in zip(quadrants, spec.as_tuple()):
        if need:
            hit &= quad >= need
    return hit.sum(axis=1)


def rc_fixed_mask(arr: np.ndarray) -> np.ndarray:
    n = arr.shape[1]
    return np.all(arr == (n + 1 - arr[:, ::-1]), axis=1)


def extreme_columns(arr: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """``(lle, be)`` for rows that are rc-fixed up-down permutations of even length."""
    n = arr.shape[1]
    pos_min = np.argmax(arr == 1, axis=1)
    pos_max = np.argmax(arr == n, axis=1)
    lo = np.minimum(pos_min, pos_max)
    gap = np.abs(pos_min - pos_max) - 1
    if np.any(gap % 2):
        raise AssertionError("odd gap between extreme elements")
    return lo, gap // 2


def pop_occurrence_column(arr: np.ndarray, pop: Pop) -> np.ndarray:
    """Occurrence counts of ``pop`` per row, by scanning every index tuple."""
    rows, n = arr.shape
    counts = np.zeros(rows, dtype=np.int64)
    if pop.k > n:
        return counts
    pairs = sorted(pop.less_than)
    buf = np.empty(rows, dtype=bool)
    for idx in itertools.combinations(range(n), pop.k):
        buf[:] = True
        for a, b in pairs:
            buf &= arr[:, idx[a - 1]] < arr[:, idx[b - 1]]
        counts += buf
    return counts


def pop_avoidance_mask(arr: np.ndarray, pop: Pop) -> np.ndarray:
    """Rows containing no occurrence of ``pop``.

    Same index-tuple scan as :func:`pop_occurrence_column`, but rows are
    dropped as soon as an occurrence turns up, and the working block is
    compacted whenever it has halved.
    """
    rows, n = arr.shape
    mask = np.ones(rows, dtype=bool)
    if pop.k > n or rows == 0:
        return mask
    pairs = sorted(pop.less_than)
    alive = np.arange(rows)
    block = np.ascontiguousarray(arr)
    keep = np.ones(rows, dtype=bool)
    for idx in itertools.combinations(range(n), pop.k):
        hit = np.ones(len(block), dtype=bool)
        for a, b in pairs:
            hit &= block[:, idx[a - 1]] < block[:, idx[b - 1]]
        keep &= ~hit
        if 2 * int(keep.sum()) <= len(keep):
            alive = alive[keep]
            block = block[keep]
            keep = np.ones(len(block), dtype=bool)
            if len(block) == 0:
                break
    mask[:] = False
    mask[alive[keep]] = True
    return mask


def lambda_occurrence_column(arr: np.ndarray, k: int) -> np.ndarray:
    """Occurrences of the flat POP with ``k-1`` bottoms under a final top.

    Each position contributes ``C(s, k-1)`` where ``s`` counts smaller entries
    to its left.
    """
    rows, n = arr.shape
    counts = np.zeros(rows, dtype=np.int64)
    table = np.array([comb(s, k - 1) for s in range(n + 1)], dtype=np.int64)
    for j in range(n):
        smaller = (arr[:, :j] < arr[:, j : j + 1]).sum(axis=1)
        counts += table[smaller]
    return counts


def tally(*columns: np.ndarray) -> Dict[Tuple[int, ...], int]:
    """Count each distinct tuple of non-negative column values."""
    if not columns or len(columns[0]) == 0:
        return {}
    cols = [np.asarray(c, dtype=np.int64) for c in columns]
    if any(int(c.min()) < 0 for c in cols):
        raise ValueError("tally expects non-negative values")
    bases = [int(c.max()) + 1 for c in cols]
    key = np.zeros(len(cols[0]), dtype=np.int64)
    for c, base in zip(cols, bases):
        key = key * base + c
    uniq, counts = np.unique(key, return_counts=True)
    out = {}
    for k, cnt in zip(uniq.tolist(), counts.tolist()):
        parts = []
        for base in reversed(bases):
            k, r = divmod(k, base)
            parts.append(r)
        out[tuple(reversed(parts))] = cnt
    return out
