#!/usr/bin/env python3
"""Walk-through: the exact counting lemmas behind the main bound.

Runs the intersecting-family bound, the second-block refinement, the
top-block variant, and the disjoint-count bound on a sample vector and
prints every claim with its exact left and right sides.
"""

from mmsverify import (
    KSubset,
    gen_random_zero_sum,
    single_overlap_coefficient,
    verify_contains_top_bound,
    verify_disjoint_bound,
    verify_intersecting_bound,
    verify_mms_bound,
    verify_second_block_bound,
)


def show(report):
    print(f"[{report.name}] verdict: {report.verdict}")
    for p in report.preconditions:
        mark = "ok" if p.satisfied else "FAILED"
        print(f"  requires {p.name} (got {p.value}): {mark}")
    for c in report.claims:
        if c.lhs is None:
            print(f"  {c.description}: {c.note}")
        else:
            print(f"  {c.description}: {c.lhs} {c.relation} {c.rhs} -> {c.satisfied}")
    print()


def main():
    # big n relative to k so every hypothesis is live
    X = gen_random_zero_sum(20, magnitude=30, seed=11)
    k = 2
    print(f"sample vector (n={X.n}, k={k}):")
    print(f"  {[str(v) for v in X.values]}")
    print()

    show(verify_intersecting_bound(X, k))
    show(verify_second_block_bound(X, k))
    show(verify_contains_top_bound(X, k))

    # the disjoint-count bound needs a k-set with negative sum; the bottom
    # block always works for a nonzero vector
    T = KSubset(tuple(range(X.n - k, X.n)), X.n)
    show(verify_disjoint_bound(X, k, T))

    # at n = k^2 the single-overlap coefficient vanishes exactly
    for kk in (3, 4, 5):
        vals = [single_overlap_coefficient(kk * kk + d, kk) for d in (-1, 0, 1)]
        print(f"single-overlap coefficient near n=k^2, k={kk}: {vals}")
    print()

    show(verify_mms_bound(gen_random_zero_sum(32, magnitude=50, seed=2), 2))


if __name__ == "__main__":
    main()
