"""Johnson-scheme structure matrices and exact operator identities.

The inclusion matrix W has a 1 at (Y, S) when the j-subset Y lies inside the
k-subset S; the Kneser variant Wbar marks Y disjoint from S. Their exact
integer product Wbar^T W depends only on intersection sizes, and the vector
of k-subset sums of a zero-sum weight vector is an eigenvector of it. All
products here are exact; dense materialization is capped by an entry budget,
beyond which the closed-form entry accessor still works.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .combinat import KSubset, binomial
from .report import Claim, LemmaReport, Precondition, claim
from .weights import WeightVector

__all__ = [
    "BoseMesnerOperator",
    "DEFAULT_DENSE_BUDGET",
    "DenseBudgetError",
    "StructureMatrix",
    "bose_mesner_entry",
    "bose_mesner_eigenvalue",
    "build_structure_matrix",
    "verify_eigenvector",
    "verify_eigenvector_all",
    "verify_factorization",
    "verify_wilson_identities",
]

DEFAULT_DENSE_BUDGET = 10_000_000


class DenseBudgetError(ValueError):
    """Raised when a dense matrix would exceed the entry budget."""


@lru_cache(maxsize=128)
def subsets_colex(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """All m-subsets of {0..n-1} in colex order (m = 0 gives the empty set)."""
    if m == 0:
        return ((),)
    return tuple(sorted(combinations(range(n), m), key=lambda t: t[::-1]))


@lru_cache(maxsize=128)
def masks_colex(n: int, m: int) -> tuple[int, ...]:
    out = []
    for t in subsets_colex(n, m):
        mask = 0
        for i in t:
            mask |= 1 << i
        out.append(mask)
    return tuple(out)


@dataclass(frozen=True)
class StructureMatrix:
    """Dense 0/1 matrix over (j-subsets) x (k-subsets), colex indexed."""

    kind: str  # inclusion | kneser
    n: int
    j: int
    k: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        expected = binomial(self.n, self.j)
        if len(self.rows) != expected:
            raise ValueError("row count must be C(n, j)")
        row_sum = (
            binomial(self.n - self.j, self.k - self.j)
            if self.kind == "inclusion"
            else binomial(self.n - self.j, self.k)
        )
        for r in self.rows:
            if len(r) != binomial(self.n, self.k):
                raise ValueError("column count must be C(n, k)")
            if sum(r) != row_sum:
                raise ValueError(f"{self.kind} row sum must be {row_sum}")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), binomial(self.n, self.k)

    def to_dict(self) -> dict:
        return {
            "type": "structure-matrix",
            "kind": self.kind,
            "n": self.n,
            "j": self.j,
            "k": self.k,
            "shape": list(self.shape),
            "row_index": [list(s) for s in subsets_colex(self.n, self.j)],
            "col_index": [list(s) for s in subsets_colex(self.n, self.k)],
            "rows": [list(r) for r in self.rows],
        }


def _check_budget(n: int, j: int, k: int, budget: int) -> None:
    entries = binomial(n, j) * binomial(n, k)
    if entries > budget:
        raise DenseBudgetError(
            f"dense C({n},{j}) x C({n},{k}) matrix has {entries} entries, over the "
            f"budget of {budget}; use bose_mesner_entry / BoseMesnerOperator instead"
        )


def build_structure_matrix(
    kind: str, n: int, j: int, k: int, budget: int = DEFAULT_DENSE_BUDGET
) -> StructureMatrix:
    """Materialize the inclusion or Kneser matrix densely."""
    if kind not in ("inclusion", "kneser"):
        raise ValueError(f"unknown kind {kind!r}")
    if not (0 <= j <= k <= n):
        raise ValueError(f"need 0 <= j <= k <= n, got j={j}, k={k}, n={n}")
    _check_budget(n, j, k, budget)
    jm = masks_colex(n, j)
    km = masks_colex(n, k)
    if kind == "inclusion":
        rows = tuple(tuple(1 if ym & sm == ym else 0 for sm in km) for ym in jm)
    else:
        rows = tuple(tuple(1 if ym & sm == 0 else 0 for sm in km) for ym in jm)
    return StructureMatrix(kind, n, j, k, rows)


def bose_mesner_entry(S: KSubset, T: KSubset, j: int) -> int:
    """Closed-form entry C(k - |S intersect T|, j) of the j-th product matrix."""
    if S.n != T.n or S.k != T.k:
        raise ValueError("S and T must be k-subsets of the same ground set")
    overlap = (S.bitmask() & T.bitmask()).bit_count()
    return binomial(S.k - overlap, j)


def bose_mesner_eigenvalue(n: int, k: int, j: int) -> int:
    """Eigenvalue of the subset-sum eigenvector: -C(k-1, j-1) * C(n-j-1, k-1)."""
    return -binomial(k - 1, j - 1) * binomial(n - j - 1, k - 1)


@dataclass(frozen=True)
class BoseMesnerOperator:
    """The product Wbar^T W as an entry accessor, densified on request."""

    n: int
    k: int
    j: int

    def entry(self, S: KSubset, T: KSubset) -> int:
        return bose_mesner_entry(S, T, self.j)

    def dense(self, budget: int = DEFAULT_DENSE_BUDGET) -> list[list[int]]:
        entries = binomial(self.n, self.k) ** 2
        if entries > budget:
            raise DenseBudgetError(
                f"dense operator has {entries} entries, over the budget of {budget}"
            )
        km = masks_colex(self.n, self.k)
        return [
            [binomial(self.k - (sm & tm).bit_count(), self.j) for tm in km] for sm in km
        ]


def _param_echo(**kwargs: int) -> list[Precondition]:
    return [Precondition(name, value, True) for name, value in kwargs.items()]


def verify_factorization(
    n: int, j: int, k: int, budget: int = DEFAULT_DENSE_BUDGET
) -> LemmaReport:
    """Multiply Kneser^T by inclusion and compare with the closed form.

    The product is computed from the materialized 0/1 matrices (columns
    packed into bitmasks; popcount of AND is the exact inner product).
    """
    incl = build_structure_matrix("inclusion", n, j, k, budget)
    knes = build_structure_matrix("kneser", n, j, k, budget)
    ck = binomial(n, k)
    cj = binomial(n, j)
    # column c of each matrix, packed over the j-subset axis
    incl_cols = [0] * ck
    knes_cols = [0] * ck
    for y in range(cj):
        irow = incl.rows[y]
        krow = knes.rows[y]
        bit = 1 << y
        for c in range(ck):
            if irow[c]:
                incl_cols[c] |= bit
            if krow[c]:
                knes_cols[c] |= bit
    km = masks_colex(n, k)
    mismatches = 0
    witness = None
    for s in range(ck):
        scol = knes_cols[s]
        smask = km[s]
        for t in range(ck):
            got = (scol & incl_cols[t]).bit_count()
            want = binomial(k - (smask & km[t]).bit_count(), j)
            if got != want:
                mismatches += 1
                if witness is None:
                    witness = {
                        "S": list(subsets_colex(n, k)[s]),
                        "T": list(subsets_colex(n, k)[t]),
                        "product": got,
                        "closed_form": want,
                    }
    return LemmaReport(
        name="bose-mesner-factorization",
        preconditions=tuple(_param_echo(n=n, j=j, k=k)),
        claims=(
            claim(
                f"Kneser^T * inclusion equals C(k-|S&T|,{j}) on all {ck * ck} pairs",
                mismatches,
                "==",
                0,
            ),
        ),
        witness=witness,
    )


def _scaled_sums(y: Sequence[int], n: int, m: int) -> list[int]:
    """Integer m-subset sums in colex order (m = 0 gives the single 0)."""
    return [sum(y[i] for i in t) for t in subsets_colex(n, m)]


def _eigen_claims(X: WeightVector, k: int, js: Sequence[int]) -> tuple[list[Claim], dict]:
    n = X.n
    y, _ = X.scaled_ints()
    km = masks_colex(n, k)
    b = _scaled_sums(y, n, k)
    coeffs = {j: [binomial(k - m, j) for m in range(k + 1)] for j in js}
    eigs = {j: bose_mesner_eigenvalue(n, k, j) for j in js}
    mism = {j: 0 for j in js}
    witness: dict = {}
    for s, smask in enumerate(km):
        prof = [0] * (k + 1)
        for tmask, bt in zip(km, b):
            prof[(smask & tmask).bit_count()] += bt
        for j in js:
            cj = coeffs[j]
            lhs = 0
            for m in range(k + 1):
                lhs += cj[m] * prof[m]
            if lhs != eigs[j] * b[s]:
                mism[j] += 1
                if j not in witness:
                    witness[j] = {
                        "S": list(subsets_colex(n, k)[s]),
                        "lhs": lhs,
                        "rhs": eigs[j] * b[s],
                    }
    claims = [
        claim(
            f"(Wbar^T W) b == {eigs[j]} * b componentwise at j={j}",
            mism[j],
            "==",
            0,
            note=f"eigenvalue -C(k-1,{j}-1)*C(n-{j}-1,k-1) = {eigs[j]}",
        )
        for j in js
    ]
    nonzero = claim("b is not the zero vector", sum(1 for v in b if v != 0), ">", 0)
    return [nonzero] + claims, witness


def verify_eigenvector(X: WeightVector, j: int, k: int) -> LemmaReport:
    """Check the j-th product matrix maps b to eigenvalue * b, exactly.

    Matrix-free: for each row the intersection-size profile of b is
    accumulated once and contracted against the closed-form coefficients.
    """
    n = X.n
    if not (1 <= k <= n and 0 <= j <= k):
        raise ValueError(f"need 1 <= k <= n and 0 <= j <= k, got n={n}, k={k}, j={j}")
    if X.is_zero():
        raise ValueError("eigenvector check needs a nonzero weight vector")
    claims, witness = _eigen_claims(X, k, [j])
    return LemmaReport(
        name="subset-sum-eigenvector",
        preconditions=tuple(_param_echo(n=n, j=j, k=k)),
        claims=tuple(claims),
        witness=witness.get(j),
    )


def verify_eigenvector_all(X: WeightVector, k: int) -> LemmaReport:
    """Eigenvector check for every j in [0, k] with one profile pass."""
    n = X.n
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if X.is_zero():
        raise ValueError("eigenvector check needs a nonzero weight vector")
    js = list(range(k + 1))
    claims, witness = _eigen_claims(X, k, js)
    return LemmaReport(
        name="subset-sum-eigenvector",
        preconditions=tuple(_param_echo(n=n, k=k)),
        claims=tuple(claims),
        witness=witness or None,
    )


def verify_wilson_identities(
    X: WeightVector, j: int, k: int, budget: int = DEFAULT_DENSE_BUDGET
) -> LemmaReport:
    """Exact checks of the three inclusion/Kneser product identities.

    (a) W_jk W_1k^T is two-valued: C(n-j, k-j) where the singleton lies in
        the j-subset, C(n-j-1, k-j-1) elsewhere.
    (b) W_jk W_1k^T x = C(n-j-1, k-j) W_1j^T x.
    (c) Wbar_jk^T W_1j^T x = -C(n-k-1, j-1) W_1k^T x.
    """
    n = X.n
    if not (1 <= k <= n and 0 <= j <= k):
        raise ValueError(f"need 1 <= k <= n and 0 <= j <= k, got n={n}, k={k}, j={j}")
    _check_budget(n, j, k, budget)
    y, _ = X.scaled_ints()
    jm = masks_colex(n, j)
    km = masks_colex(n, k)
    b = _scaled_sums(y, n, k)
    bj = _scaled_sums(y, n, j)

    # (a) entries of W_jk W_1k^T: count k-supersets of (j-subset union singleton)
    in_val = binomial(n - j, k - j)
    out_val = binomial(n - j - 1, k - j - 1)
    mism_a = 0
    witness_a = None
    for s, smask in enumerate(jm):
        for t in range(n):
            tbit = 1 << t
            got = sum(1 for kmask in km if smask & kmask == smask and kmask & tbit)
            want = in_val if smask & tbit else out_val
            if got != want:
                mism_a += 1
                if witness_a is None:
                    witness_a = {"S": list(subsets_colex(n, j)[s]), "t": t, "got": got, "want": want}

    # (b) W_jk (W_1k^T x) against C(n-j-1, k-j) * (j-subset sums)
    coef_b = binomial(n - j - 1, k - j)
    mism_b = 0
    for s, smask in enumerate(jm):
        lhs = sum(bv for kmask, bv in zip(km, b) if smask & kmask == smask)
        if lhs != coef_b * bj[s]:
            mism_b += 1

    # (c) Wbar_jk^T (W_1j^T x) against -C(n-k-1, j-1) * (k-subset sums)
    coef_c = -binomial(n - k - 1, j - 1)
    mism_c = 0
    for s, smask in enumerate(km):
        lhs = sum(bv for jmask, bv in zip(jm, bj) if jmask & smask == 0)
        if lhs != coef_c * b[s]:
            mism_c += 1

    cj = binomial(n, j)
    return LemmaReport(
        name="inclusion-product-identities",
        preconditions=tuple(_param_echo(n=n, j=j, k=k)),
        claims=(
            claim(
                f"W_jk W_1k^T two-valued ({in_val} inside, {out_val} outside) on {cj * n} entries",
                mism_a,
                "==",
                0,
            ),
            claim(f"W_jk W_1k^T x == {coef_b} * W_1j^T x on {cj} entries", mism_b, "==", 0),
            claim(
                f"Wbar_jk^T W_1j^T x == {coef_c} * W_1k^T x on {binomial(n, k)} entries",
                mism_c,
                "==",
                0,
            ),
        ),
        witness=witness_a,
    )
