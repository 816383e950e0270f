"""Degree-sequence conditions.  All indices are 1-based: d[1] <= ... <= d[n].

Every bound is compared with integer arithmetic (2i <= n-1 rather than
i <= (n-1)/2), and the least qualifying index is reported.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ConditionHit:
    i: int
    ell: int
    clause: str


def _one_based(degseq: Sequence[int]) -> list[int]:
    seq = list(degseq)
    if any(a > b for a, b in zip(seq, seq[1:])):
        raise ValueError("degree sequence must be nondecreasing")
    return [0] + seq


def chvatal_violation(degseq: Sequence[int], variant: str = "hamiltonian",
                      k: int = 0) -> ConditionHit | None:
    """Least index where the Chvátal-type clause for ``variant`` fires.

    variant is "traceable", "hamiltonian" or "k_hamiltonian".  For the last
    one the offset ell runs over 0..k and the hit with the least ell (then
    least i) is returned.
    """
    d = _one_based(degseq)
    n = len(d) - 1
    if variant == "traceable":
        for i in range(1, n // 2 + 1):
            if d[i] <= i - 1 and d[n - i + 1] <= n - i - 1:
                return ConditionHit(i, -1, "d_i <= i-1 and d_{n-i+1} <= n-i-1")
        return None
    if variant == "hamiltonian":
        return _ham_clause(d, n, 0)
    if variant == "k_hamiltonian":
        if not 0 <= k <= n - 3:
            raise ValueError(f"k={k} outside 0..n-3")
        for ell in range(k + 1):
            hit = _ham_clause(d, n, ell)
            if hit:
                return hit
        return None
    raise ValueError(f"unknown variant {variant!r}")


def _ham_clause(d: list[int], n: int, ell: int) -> ConditionHit | None:
    i = 1
    while 2 * i <= n - 1 - ell:
        if d[i] <= i + ell and d[n - i - ell] <= n - i - 1:
            return ConditionHit(i, ell, "d_i <= i+ell and d_{n-i-ell} <= n-i-1")
        i += 1
    return None


def berge_violation(degseq: Sequence[int]) -> ConditionHit | None:
    d = _one_based(degseq)
    n = len(d) - 1
    i = 1
    while 2 * i <= n - 2:
        if d[i] <= i + 1 and d[n - i - 1] <= n - i - 1:
            return ConditionHit(i, 1, "d_i <= i+1 and d_{n-i-1} <= n-i-1")
        i += 1
    return None


def kronk_violation(degseq: Sequence[int], k: int) -> ConditionHit | None:
    d = _one_based(degseq)
    n = len(d) - 1
    if not 0 <= k <= n - 3:
        raise ValueError(f"k={k} outside 0..n-3")
    i = 1
    while 2 * i <= n - 1 - k:
        if d[i] <= i + k:
            return ConditionHit(i, k, "d_i <= i+k")
        i += 1
    return None


def kronk_strong_holds(degseq: Sequence[int], k: int) -> bool:
    """Sufficient condition for k-path Hamiltonicity.

    Needs d_i > i+k for every i with 2i < n-1-k, and d_m > (n-1+k)/2 at
    m = floor((n+1-k)/2).  When n+1-k is odd the middle clause is not
    dropped: treating it as vacuous accepts the empty graph on 3 vertices
    for k=1.
    """
    d = _one_based(degseq)
    n = len(d) - 1
    if not 0 <= k <= n - 2:
        raise ValueError(f"k={k} outside 0..n-2")
    i = 1
    while 2 * i < n - 1 - k:
        if d[i] <= i + k:
            return False
        i += 1
    mid = (n + 1 - k) // 2
    if 1 <= mid <= n and 2 * d[mid] <= n - 1 + k:
        return False
    return True


def degree_hypothesis(degseq: Sequence[int], ell: int) -> int | None:
    """Least j with 1 <= j <= (n-1-ell)/2 and d_j <= j+ell, else None."""
    if ell < -1:
        raise ValueError("ell must be at least -1")
    d = _one_based(degseq)
    n = len(d) - 1
    j = 1
    while 2 * j <= n - 1 - ell:
        if d[j] <= j + ell:
            return j
        j += 1
    return None
