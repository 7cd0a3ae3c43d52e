"""Exact combinatorics kernel: binomials and colex-ordered subset streams.

Everything here is arbitrary-precision integer arithmetic. The revolving-door
subset streams are deterministic: replaying them or splitting them by rank
ranges gives identical results, which the colex unranking can cross-check.
"""

from __future__ import annotations

import logging
from bisect import insort
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

__all__ = [
    "BinomialTable",
    "KSubset",
    "binomial",
    "door_deltas",
    "iterate_ksubsets",
    "rank_colex",
    "split_rank_ranges",
    "unrank_colex",
]

logger = logging.getLogger(__name__)


def binomial(a: int, b: int) -> int:
    """C(a, b), extended to 0 whenever a < 0, b < 0, or b > a."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


class BinomialTable:
    """Pascal-rule table of C(a, b) for 0 <= b <= a <= n_max.

    Built by integer additions only, which makes it an independent
    cross-check for binomial() (math.comb under the hood).
    """

    def __init__(self, n_max: int):
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        self.n_max = n_max
        rows = [[1]]
        for a in range(1, n_max + 1):
            prev = rows[-1]
            rows.append([1] + [prev[b - 1] + prev[b] for b in range(1, a)] + [1])
        self._rows = rows

    def get(self, a: int, b: int) -> int:
        """Table lookup with the same zero extension as binomial()."""
        if a < 0 or b < 0 or b > a:
            return 0
        if a > self.n_max:
            raise ValueError(f"a={a} exceeds table bound n_max={self.n_max}")
        return self._rows[a][b]

    def row(self, a: int) -> tuple[int, ...]:
        if not 0 <= a <= self.n_max:
            raise ValueError(f"row {a} outside [0, {self.n_max}]")
        return tuple(self._rows[a])


@dataclass(frozen=True)
class KSubset:
    """A k-element subset of {0, ..., n-1}, indices strictly increasing."""

    indices: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("ambient size n must be >= 1")
        k = len(self.indices)
        if not 1 <= k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={self.n}")
        prev = -1
        for i in self.indices:
            if not isinstance(i, int) or isinstance(i, bool) or i <= prev:
                raise ValueError("indices must be strictly increasing integers")
            prev = i
        if prev >= self.n:
            raise ValueError(f"index {prev} out of range for n={self.n}")

    @property
    def k(self) -> int:
        return len(self.indices)

    def bitmask(self) -> int:
        m = 0
        for i in self.indices:
            m |= 1 << i
        return m

    @classmethod
    def of(cls, indices: Sequence[int], n: int) -> "KSubset":
        return cls(tuple(sorted(indices)), n)


def rank_colex(subset: KSubset | Sequence[int]) -> int:
    """Colex rank of a k-subset: sum over positions i of C(s_i, i+1).

    The rank does not depend on the ambient n, so streams over different
    ground sets agree on shared prefixes.
    """
    indices = subset.indices if isinstance(subset, KSubset) else tuple(subset)
    prev = -1
    r = 0
    for pos, s in enumerate(indices):
        if s <= prev:
            raise ValueError("indices must be strictly increasing")
        prev = s
        r += binomial(s, pos + 1)
    return r


def unrank_colex(r: int, k: int, n: int) -> KSubset:
    """Inverse of rank_colex over k-subsets of {0..n-1}."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    total = binomial(n, k)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} outside [0, {total}) for (n={n}, k={k})")
    out = [0] * k
    rem = r
    c = n
    for pos in range(k, 0, -1):
        c -= 1
        while binomial(c, pos) > rem:
            c -= 1
        rem -= binomial(c, pos)
        out[pos - 1] = c
    return KSubset(tuple(out), n)


def _door_deltas(n: int, k: int) -> Iterator[tuple[int, int]]:
    # Transitions of the revolving-door list R(n, k), defined by
    #   R(n, k) = R(n-1, k) ++ [S + {n-1} for S in reversed(R(n-1, k-1))]
    # with singleton base lists at k == 0 and k == n. Consecutive subsets
    # differ by removing one element and adding another.
    if k <= 0 or k >= n:
        return
    yield from _door_deltas(n - 1, k)
    # seam: last(R(n-1,k)) -> last(R(n-1,k-1)) + {n-1}
    yield (n - 2, n - 1) if k == 1 else (k - 2, n - 1)
    yield from _door_deltas_rev(n - 1, k - 1)


def _door_deltas_rev(n: int, k: int) -> Iterator[tuple[int, int]]:
    # Transitions of reversed(R(n, k)).
    if k <= 0 or k >= n:
        return
    yield from _door_deltas(n - 1, k - 1)
    # seam: last(R(n-1,k-1)) + {n-1} -> last(R(n-1,k))
    yield (n - 1, n - 2) if k == 1 else (n - 1, k - 2)
    yield from _door_deltas_rev(n - 1, k)


_TABLE_CAP = 5_000_000  # cache delta tables only below this many subsets


@lru_cache(maxsize=64)
def _door_delta_table(n: int, k: int) -> tuple[tuple[int, int], ...]:
    return tuple(_door_deltas(n, k))


def door_deltas(n: int, k: int) -> Iterator[tuple[int, int]] | tuple[tuple[int, int], ...]:
    """(removed, added) transitions of the revolving-door k-subset stream.

    The stream starts at {0..k-1}; applying the deltas in order visits every
    k-subset of {0..n-1} exactly once. Small tables are cached since counting
    sweeps replay the same (n, k) many times.
    """
    if binomial(n, k) <= _TABLE_CAP:
        return _door_delta_table(n, k)
    return _door_deltas(n, k)


def iterate_ksubsets(n: int, k: int) -> Iterator[tuple[KSubset, tuple[int, int] | None]]:
    """Stream all k-subsets of {0..n-1} in revolving-door order.

    Yields (subset, delta) where delta is None for the first subset and
    (removed, added) afterwards, so a caller can maintain a running subset
    sum with one subtraction and one addition per step.
    """
    if k <= 0 or k > n:
        logger.warning("iterate_ksubsets(n=%d, k=%d): empty stream (need 1 <= k <= n)", n, k)
        return
    cur = list(range(k))
    yield KSubset(tuple(cur), n), None
    for rem, add in door_deltas(n, k):
        cur.remove(rem)
        insort(cur, add)
        yield KSubset(tuple(cur), n), (rem, add)


def split_rank_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Contiguous (start, length) chunks covering [0, total), near-equal sizes."""
    if total < 0 or parts < 1:
        raise ValueError("need total >= 0 and parts >= 1")
    parts = min(parts, total) or 1
    base, extra = divmod(total, parts)
    out = []
    start = 0
    for i in range(parts):
        length = base + (1 if i < extra else 0)
        out.append((start, length))
        start += length
    return out


def colex_successor_inplace(s: list[int], n: int) -> int:
    """Advance a sorted index list to its colex successor; returns the pivot.

    Positions 0..pivot-1 reset to 0..pivot-1 and position pivot increments.
    Raises ValueError on the colex-maximal subset.
    """
    k = len(s)
    for i in range(k):
        nxt = s[i + 1] if i + 1 < k else n
        if s[i] + 1 < nxt:
            s[i] += 1
            for j in range(i):
                s[j] = j
            return i
    raise ValueError("no colex successor: subset is maximal")
