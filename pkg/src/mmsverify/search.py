"""Exhaustive grid search for patterns with few nonnegative k-subset sums.

The objective is piecewise constant in the weight values (only the sign
pattern of composition sums matters), so an integer grid on all but the last
value, with the last solved exactly for zero sum, covers every sign pattern
reachable at a given number of distinct values. Exhaustiveness makes negative
results reproducible rather than anecdotal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .combinat import binomial
from .counting import (
    MultiplicityPattern,
    _dp_count_scaled,
    count_nonnegative,
    count_nonnegative_dp,
    star_family_size,
)
from .report import VERDICT_VERIFIED, VERDICT_VIOLATED, exact_str

__all__ = ["SearchReport", "SearchSpace", "find_counterexample", "sweep_patterns"]

DEFAULT_CANDIDATE_BUDGET = 10_000_000
ENUM_RECHECK_LIMIT = 16
MAX_DISTINCT_CAP = 4


def _positive_compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive ints summing to total, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _positive_compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class SearchSpace:
    """Grid of candidate multiplicity patterns for one (n, k).

    Candidates range over d = 1..max_distinct distinct values. The
    multiplicities run over all ordered positive compositions of n, the first
    d-1 values over strictly decreasing integers in [-value_range,
    value_range], and the last value is solved exactly from the zero-sum
    constraint (the candidate is dropped if the solved value does not stay
    strictly below its predecessor). Scaling by the last multiplicity keeps
    every candidate in plain integers.
    """

    n: int
    k: int
    max_distinct: int = 2
    value_range: int = 6
    candidate_budget: int = DEFAULT_CANDIDATE_BUDGET

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise ValueError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        if not 1 <= self.max_distinct <= MAX_DISTINCT_CAP:
            raise ValueError(
                f"max_distinct must be in 1..{MAX_DISTINCT_CAP}, got {self.max_distinct}"
            )
        if self.value_range < 1:
            raise ValueError(f"value_range must be >= 1, got {self.value_range}")
        if self.candidate_budget < 1:
            raise ValueError("candidate_budget must be >= 1")

    def size(self) -> int:
        """Upper bound on candidates: head grids before the zero-sum filter."""
        total = 0
        width = 2 * self.value_range + 1
        for d in range(1, self.max_distinct + 1):
            heads = 1 if d == 1 else binomial(width, d - 1)
            total += binomial(self.n - 1, d - 1) * heads
        return total

    def candidates(self) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """Yield (multiplicities, scaled integer values, denominator).

        The true values are scaled[i] / denominator; they are strictly
        decreasing with exact weighted sum zero.
        """
        yield (self.n,), (0,), 1
        grid = range(self.value_range, -self.value_range - 1, -1)
        for d in range(2, self.max_distinct + 1):
            for mults in _positive_compositions(self.n, d):
                den = mults[-1]
                for heads in itertools.combinations(grid, d - 1):
                    num = 0
                    for m, v in zip(mults, heads):
                        num -= m * v
                    if num < heads[-1] * den:
                        yield mults, tuple(v * den for v in heads) + (num,), den


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a sweep: the minimizing pattern and its cross-checks."""

    n: int
    k: int
    best_pattern: MultiplicityPattern
    best_count: int
    bound: int
    violation: bool
    candidates_examined: int
    provenance: Mapping[str, int]
    reverified_dp: bool
    reverified_enum: bool | None

    @property
    def verdict(self) -> str:
        return VERDICT_VIOLATED if self.violation else VERDICT_VERIFIED

    def to_dict(self) -> dict:
        return {
            "type": "search",
            "n": self.n,
            "k": self.k,
            "best_pattern": {
                "values": [exact_str(v) for v, _ in self.best_pattern.pairs],
                "multiplicities": [m for _, m in self.best_pattern.pairs],
            },
            "best_count": str(self.best_count),
            "bound": str(self.bound),
            "violation": self.violation,
            "candidates_examined": self.candidates_examined,
            "reverified": {
                "dp_both_orders": self.reverified_dp,
                "enumeration": self.reverified_enum,
            },
            "provenance": dict(self.provenance),
            "verdict": self.verdict,
        }


def _count_scaled_fast(
    mults: tuple[int, ...],
    scaled: tuple[int, ...],
    k: int,
    rows: tuple[tuple[int, ...], ...],
) -> int:
    """Composition-sum count specialized for d <= 3; integer-only hot path."""
    d = len(mults)
    if d == 1:
        return rows[0][k] if k * scaled[0] >= 0 else 0
    if d == 2:
        m1, m2 = mults
        w1, w2 = scaled
        r1, r2 = rows
        total = 0
        for c1 in range(max(0, k - m2), min(m1, k) + 1):
            if c1 * w1 + (k - c1) * w2 >= 0:
                total += r1[c1] * r2[k - c1]
        return total
    if d == 3:
        m1, m2, m3 = mults
        w1, w2, w3 = scaled
        r1, r2, r3 = rows
        dw = w2 - w3
        total = 0
        for c1 in range(max(0, k - m2 - m3), min(m1, k) + 1):
            rem = k - c1
            base = c1 * w1 + rem * w3
            b1 = r1[c1]
            for c2 in range(max(0, rem - m3), min(m2, rem) + 1):
                if base + c2 * dw >= 0:
                    total += b1 * r2[c2] * r3[rem - c2]
        return total
    return _dp_count_scaled(mults, scaled, k, rows)


def sweep_patterns(space: SearchSpace) -> SearchReport:
    """Minimize the nonnegative k-subset count over the whole grid.

    Ties break toward the lexicographically smallest (multiplicities,
    values). The winner is re-verified through the shared DP in both
    composition orders, and additionally by direct enumeration when
    n <= 16, before the report is emitted.
    """
    total = space.size()
    if total > space.candidate_budget:
        raise ValueError(
            f"grid holds about {total} candidates, over the budget of "
            f"{space.candidate_budget}; reduce value_range or max_distinct"
        )
    n, k = space.n, space.k
    bound = star_family_size(n, k)
    rows_cache: dict[tuple[int, ...], tuple[tuple[int, ...], ...]] = {}
    best: tuple[int, tuple[int, ...], tuple[int, ...], int] | None = None
    examined = 0
    for mults, scaled, den in space.candidates():
        rows = rows_cache.get(mults)
        if rows is None:
            rows = tuple(
                tuple(binomial(m, c) for c in range(min(m, k) + 1)) for m in mults
            )
            rows_cache[mults] = rows
        count = _count_scaled_fast(mults, scaled, k, rows)
        examined += 1
        if best is None:
            best = (count, mults, scaled, den)
            continue
        b_count, b_mults, b_scaled, b_den = best
        if count != b_count:
            if count < b_count:
                best = (count, mults, scaled, den)
            continue
        if mults != b_mults:
            if mults < b_mults:
                best = (count, mults, scaled, den)
            continue
        values = tuple(Fraction(s, den) for s in scaled)
        b_values = tuple(Fraction(s, b_den) for s in b_scaled)
        if values < b_values:
            best = (count, mults, scaled, den)

    assert best is not None  # space always contains the d=1 candidate
    b_count, b_mults, b_scaled, b_den = best
    pattern = MultiplicityPattern(
        tuple((Fraction(s, b_den), m) for s, m in zip(b_scaled, b_mults))
    )
    forward = count_nonnegative_dp(pattern, k)
    backward = count_nonnegative_dp(pattern, k, reverse=True)
    if forward != b_count or backward != b_count:
        raise RuntimeError(
            f"count disagreement on the best pattern: sweep {b_count}, "
            f"dp forward {forward}, dp reverse {backward}"
        )
    reverified_enum = None
    if n <= ENUM_RECHECK_LIMIT:
        enum_count = count_nonnegative(pattern.expand(), k).nonnegative_count
        if enum_count != b_count:
            raise RuntimeError(
                f"count disagreement on the best pattern: sweep {b_count}, "
                f"enumeration {enum_count}"
            )
        reverified_enum = True
    return SearchReport(
        n=n,
        k=k,
        best_pattern=pattern,
        best_count=b_count,
        bound=bound,
        violation=b_count < bound,
        candidates_examined=examined,
        provenance={
            "n": n,
            "k": k,
            "max_distinct": space.max_distinct,
            "value_range": space.value_range,
            "candidate_budget": space.candidate_budget,
        },
        reverified_dp=True,
        reverified_enum=reverified_enum,
    )


def find_counterexample(k: int, r: int, value_range: int = 40) -> SearchReport:
    """Sweep n = 3k + r for a pattern beating the C(n-1,k-1) bound.

    Requires k >= 7 and 1 <= r <= k/7. A report with violation=False is an
    inconclusive negative at this grid, not a proof that none exists.
    """
    if k < 7:
        raise ValueError(f"need k >= 7, got k={k}")
    if r < 1 or 7 * r > k:
        raise ValueError(f"need 1 <= r <= k/7, got r={r}, k={k}")
    n = 3 * k + r
    space = SearchSpace(n=n, k=k, max_distinct=3, value_range=value_range)
    return sweep_patterns(space)
