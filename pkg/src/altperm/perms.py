"""Permutations in one-line notation, alternating classes and statistics.

Everything here works one permutation at a time and is written for clarity;
:mod:`altperm.sweep` holds the vectorised counterparts used for exhaustive
sweeps, and the test-suite checks the two against each other.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Sequence, Tuple


class Permutation(tuple):
    """A rearrangement of ``1..n``; equality, hashing and ordering are by value."""

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        if isinstance(values, str):
            values = [int(ch) for ch in values]
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: Sequence[int]) -> "Permutation":
        return tuple.__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def reverse(self) -> "Permutation":
        return Permutation._trusted(self[::-1])

    def complement(self) -> "Permutation":
        m = len(self) + 1
        return Permutation._trusted(tuple(m - v for v in self))

    def reverse_complement(self) -> "Permutation":
        m = len(self) + 1
        return Permutation._trusted(tuple(m - v for v in reversed(self)))

    def positions(self) -> Tuple[int, ...]:
        """``positions()[v]`` is the 1-based position of value ``v`` (index 0 unused)."""
        pos = [0] * (len(self) + 1)
        for i, v in enumerate(self, start=1):
            pos[v] = i
        return tuple(pos)

    def __str__(self) -> str:
        if len(self) < 10:
            return "".join(map(str, self))
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})" if len(self) < 10 else f"Permutation({list(self)!r})"


def as_permutation(x) -> Permutation:
    return x if isinstance(x, Permutation) else Permutation(x)


def _values(pi) -> Sequence[int]:
    # one-line strings such as "34152" are accepted wherever a sequence is
    return Permutation(pi) if isinstance(pi, str) else pi


class AltClass(enum.Enum):
    UP_DOWN = "ud"
    DOWN_UP = "du"

    @classmethod
    def parse(cls, s) -> "AltClass":
        if isinstance(s, AltClass):
            return s
        key = str(s).lower().replace("-", "").replace("_", "")
        aliases = {"ud": cls.UP_DOWN, "updown": cls.UP_DOWN, "du": cls.DOWN_UP, "downup": cls.DOWN_UP}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown alternating class {s!r}") from None

    @property
    def opposite(self) -> "AltClass":
        return AltClass.DOWN_UP if self is AltClass.UP_DOWN else AltClass.UP_DOWN


class StatKind(enum.Enum):
    LRMAX = "lrmax"
    RLMAX = "rlmax"
    LRMIN = "lrmin"
    RLMIN = "rlmin"


SYMMETRIES = ("reverse", "complement", "reverse_complement")


def symmetry(pi, op: str) -> Permutation:
    pi = as_permutation(pi)
    if op == "reverse":
        return pi.reverse()
    if op == "complement":
        return pi.complement()
    if op == "reverse_complement":
        return pi.reverse_complement()
    raise ValueError(f"unknown symmetry {op!r}")


def symmetry_image_class(cls: AltClass, n: int, op: str) -> AltClass:
    """Class that ``op`` maps the alternating permutations of length ``n`` in ``cls`` onto."""
    cls = AltClass.parse(cls)
    flips = {"reverse": n % 2 == 0, "complement": True, "reverse_complement": n % 2 == 1}[op]
    return cls.opposite if flips else cls


def is_alternating(pi: Sequence[int], cls) -> bool:
    cls = AltClass.parse(cls)
    pi = _values(pi)
    up = cls is AltClass.UP_DOWN
    for i in range(len(pi) - 1):
        if (pi[i] < pi[i + 1]) != up:
            return False
        up = not up
    return True


def enumerate_alternating(n: int, cls, prefix: Sequence[int] = ()) -> Iterator[Permutation]:
    """Alternating permutations of ``1..n`` in lexicographic order.

    Backtracking checks the alternation at every extension. A non-empty
    ``prefix`` restricts the stream to permutations starting with it, which is
    how sweeps are partitioned.
    """
    if n < 0:
        raise ValueError("length must be non-negative")
    cls = AltClass.parse(cls)
    first_up = cls is AltClass.UP_DOWN
    prefix = list(prefix)
    if len(prefix) > n or len(set(prefix)) != len(prefix) or any(not 1 <= v <= n for v in prefix):
        return
    if not is_alternating(prefix, cls):
        return
    if n == 0:
        yield Permutation._trusted(())
        return

    used = [False] * (n + 1)
    for v in prefix:
        used[v] = True
    perm = prefix + [0] * (n - len(prefix))

    def extend(pos: int) -> Iterator[Permutation]:
        if pos == n:
            yield Permutation._trusted(tuple(perm))
            return
        if pos == 0:
            candidates = range(1, n + 1)
        else:
            prev = perm[pos - 1]
            # position pos-1 -> pos is an ascent iff (pos-1) has the class's first parity
            ascent = ((pos - 1) % 2 == 0) == first_up
            candidates = range(prev + 1, n + 1) if ascent else range(1, prev)
        for v in candidates:
            if not used[v]:
                used[v] = True
                perm[pos] = v
                yield from extend(pos + 1)
                used[v] = False

    yield from extend(len(prefix))


def all_permutations(n: int) -> Iterator[Permutation]:
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(values)


# -- statistics --


def lrmax(pi: Sequence[int]) -> int:
    count, best = 0, 0
    for v in pi:
        if v > best:
            best = v
            count += 1
    return count


def rlmax(pi: Sequence[int]) -> int:
    return lrmax(pi[::-1])


def lrmin(pi: Sequence[int]) -> int:
    count, best = 0, None
    for v in pi:
        if best is None or v < best:
            best = v
            count += 1
    return count


def rlmin(pi: Sequence[int]) -> int:
    return lrmin(pi[::-1])


_STATS = {StatKind.LRMAX: lrmax, StatKind.RLMAX: rlmax, StatKind.LRMIN: lrmin, StatKind.RLMIN: rlmin}


def stat(pi: Sequence[int], kind) -> int:
    pi = _values(pi)
    if len(pi) == 0:
        raise ValueError("statistics are undefined on the empty permutation")
    return _STATS[StatKind(kind)](pi)


@dataclass(frozen=True)
class MmpSpec:
    """Quadrant thresholds ``(a, b, c, d)`` for quadrants I..IV."""

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("MMP thresholds must be non-negative")

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def quadrant_counts(pi: Sequence[int], i: int) -> Tuple[int, int, int, int]:
    """Points of the graph in quadrants I..IV around the point at 0-based index ``i``."""
    pi = _values(pi)
    v = pi[i]
    q1 = sum(1 for w in pi[i + 1 :] if w > v)
    q4 = len(pi) - 1 - i - q1
    q2 = sum(1 for w in pi[:i] if w > v)
    q3 = i - q2
    return (q1, q2, q3, q4)


def matches_mmp(pi: Sequence[int], i: int, spec) -> bool:
    spec = spec if isinstance(spec, MmpSpec) else MmpSpec(*spec)
    return all(have >= need for have, need in zip(quadrant_counts(pi, i), spec.as_tuple()))


def mmp_count(pi: Sequence[int], spec) -> int:
    spec = spec if isinstance(spec, MmpSpec) else MmpSpec(*spec)
    pi = _values(pi)
    return sum(1 for i in range(len(pi)) if matches_mmp(pi, i, spec))


def is_rc_fixed(pi) -> bool:
    pi = as_permutation(pi)
    return pi.reverse_complement() == pi


def enumerate_rc_fixed(n: int) -> Iterator[Permutation]:
    """Up-down permutations of even length ``n`` fixed by reverse-complement."""
    if n < 0 or n % 2:
        raise ValueError(f"rc-fixed up-down permutations need an even length, got {n}")
    for pi in enumerate_alternating(n, AltClass.UP_DOWN):
        if pi.reverse_complement() == pi:
            yield pi


def extreme_stats(pi) -> Tuple[int, int]:
    """``(lle, be)`` of an rc-fixed up-down permutation of even length.

    lle counts entries strictly left of the leftmost extreme value (1 or n);
    be is half the number of entries strictly between the two extremes.
    """
    pi = as_permutation(pi)
    n = len(pi)
    if n == 0 or n % 2 or not is_alternating(pi, AltClass.UP_DOWN) or not is_rc_fixed(pi):
        raise ValueError(f"{pi} is not an rc-fixed up-down permutation of even length")
    pos = pi.positions()
    lo, hi = sorted((pos[1], pos[n]))
    gap = hi - lo - 1
    if gap % 2:
        raise AssertionError(f"odd gap between extremes of {pi}")
    return lo - 1, gap // 2


# -- partially ordered patterns --


def _transitive_closure(k: int, pairs: Iterable[Tuple[int, int]]) -> FrozenSet[Tuple[int, int]]:
    rel = set(pairs)
    for m in range(1, k + 1):
        for a in range(1, k + 1):
            if (a, m) in rel:
                for b in range(1, k + 1):
                    if (m, b) in rel:
                        rel.add((a, b))
    return frozenset(rel)


@dataclass(frozen=True)
class Pop:
    """Partially ordered pattern on labels ``1..k``; ``(a, b)`` means ``a <_P b``."""

    k: int
    less_than: FrozenSet[Tuple[int, int]]

    def __init__(self, k: int, less_than: Iterable[Tuple[int, int]] = ()):
        if k < 0:
            raise ValueError("POP size must be non-negative")
        pairs = [(int(a), int(b)) for a, b in less_than]
        for a, b in pairs:
            if not (1 <= a <= k and 1 <= b <= k):
                raise ValueError(f"label pair {(a, b)} outside 1..{k}")
        closed = _transitive_closure(k, pairs)
        if any(a == b for a, b in closed):
            raise ValueError("relation is not a strict partial order (it has a cycle)")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "less_than", closed)

    def matches(self, values: Sequence[int]) -> bool:
        return all(values[a - 1] < values[b - 1] for a, b in self.less_than)


def pop_occurrences(pi: Sequence[int], pop: Pop) -> int:
    """Index tuples ``i_1 < ... < i_k`` whose values respect every relation of ``pop``.

    Incomparable labels impose nothing.
    """
    pi = _values(pi)
    if pop.k > len(pi):
        return 0
    pairs = sorted(pop.less_than)
    count = 0
    for idx in itertools.combinations(range(len(pi)), pop.k):
        if all(pi[idx[a - 1]] < pi[idx[b - 1]] for a, b in pairs):
            count += 1
    return count


def avoids(pi: Sequence[int], pop: Pop) -> bool:
    return pop_occurrences(pi, pop) == 0
