"""The vectorised kernels against the one-permutation-at-a-time reference code."""

import itertools
from collections import Counter

import numpy as np
import pytest

from altperm import sweep
from altperm.perms import (
    AltClass,
    MmpSpec,
    Pop,
    enumerate_alternating,
    extreme_stats,
    is_alternating,
    is_rc_fixed,
    mmp_count,
    pop_occurrences,
    stat,
)

EULER = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]


def _all_perms_array(n):
    flat = np.fromiter(itertools.chain.from_iterable(itertools.permutations(range(1, n + 1))), dtype=np.int8)
    return flat.reshape(-1, n)


def _alternating_mask(arr, cls):
    diffs = np.diff(arr.astype(np.int16), axis=1) > 0
    want = np.arange(arr.shape[1] - 1) % 2 == 0
    if cls is AltClass.DOWN_UP:
        want = ~want
    return np.all(diffs == want[None, :], axis=1)


@pytest.mark.parametrize("n", [9, 10])
@pytest.mark.parametrize("cls", list(AltClass))
def test_generator_matches_filtered_symmetric_group(n, cls):
    full = _all_perms_array(n)
    expected = full[_alternating_mask(full, cls)]
    got = sweep.alternating_array(n, cls)
    assert len(got) == EULER[n]
    assert np.array_equal(got, expected)


def test_filter_mask_agrees_with_scalar_check():
    full = _all_perms_array(6)
    for cls in AltClass:
        mask = _alternating_mask(full, cls)
        assert mask.tolist() == [is_alternating(tuple(r), cls) for r in full.tolist()]


@pytest.mark.parametrize("n", range(0, 9))
def test_array_matches_backtracking(n):
    for cls in AltClass:
        assert [tuple(r) for r in sweep.alternating_array(n, cls).tolist()] == list(enumerate_alternating(n, cls))


def test_permutation_array_is_lexicographic_symmetric_group():
    assert np.array_equal(sweep.permutation_array(6), _all_perms_array(6))


def test_prefix_blocks_partition_the_array():
    whole = sweep.alternating_array(8, "du")
    blocks = [sweep.alternating_array_with_prefix(8, "du", (a,)) for a in range(1, 9)]
    assert np.array_equal(np.concatenate(blocks), whole)
    assert len(sweep.alternating_array_with_prefix(8, "du", (1,))) == 0
    assert len(sweep.alternating_array_with_prefix(8, "ud", (3, 2))) == 0


def test_arrays_are_read_only():
    arr = sweep.alternating_array(5, "ud")
    with pytest.raises(ValueError):
        arr[0, 0] = 1


@pytest.fixture(scope="module")
def sample():
    return _all_perms_array(7)


def test_stat_columns(sample):
    rows = sample.tolist()
    for kind in ("lrmax", "rlmax", "lrmin", "rlmin"):
        assert sweep.stat_column(sample, kind).tolist() == [stat(r, kind) for r in rows]


def test_mmp_columns(sample):
    rows = sample.tolist()
    quads = sweep.quadrant_columns(sample)
    for spec in [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (2, 1, 2, 1), (0, 0, 0, 0), (1, 1, 1, 1)]:
        assert sweep.mmp_column(sample, MmpSpec(*spec), quads).tolist() == [mmp_count(r, spec) for r in rows]


def test_rc_mask_and_extremes():
    arr = sweep.alternating_array(8, "ud")
    mask = sweep.rc_fixed_mask(arr)
    assert mask.tolist() == [is_rc_fixed(tuple(r)) for r in arr.tolist()]
    fixed = arr[mask]
    lle, be = sweep.extreme_columns(fixed)
    assert list(zip(lle.tolist(), be.tolist())) == [extreme_stats(tuple(r)) for r in fixed.tolist()]


POPS = [
    Pop(3, [(3, 1)]),
    Pop(3, [(1, 3), (2, 3)]),
    Pop(4, [(1, 4), (2, 4), (3, 4)]),
    Pop(4, [(1, 2), (3, 4)]),
    Pop(4, [(2, 1), (2, 3), (2, 4)]),
]


@pytest.mark.parametrize("pop", POPS)
def test_pop_columns(sample, pop):
    rows = sample.tolist()
    ref = [pop_occurrences(r, pop) for r in rows]
    assert sweep.pop_occurrence_column(sample, pop).tolist() == ref
    assert sweep.pop_avoidance_mask(sample, pop).tolist() == [c == 0 for c in ref]


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_lambda_column_matches_generic_scan(sample, k):
    lam = Pop(k, [(i, k) for i in range(1, k)])
    assert np.array_equal(sweep.lambda_occurrence_column(sample, k), sweep.pop_occurrence_column(sample, lam))


def test_tally_matches_counter():
    rng = np.random.default_rng(0)
    a = rng.integers(0, 5, size=1000)
    b = rng.integers(0, 9, size=1000)
    assert sweep.tally(a, b) == dict(Counter(zip(a.tolist(), b.tolist())))
    assert sweep.tally(np.zeros(0, dtype=int)) == {}
    with pytest.raises(ValueError):
        sweep.tally(np.array([-1, 2]))
