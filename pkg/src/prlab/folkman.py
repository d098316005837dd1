"""Finite-sums machinery: subset-sum sets, the weak-monochromaticity
predicate (each sum carries the color of its largest summand), and the block
matrix whose kernel solutions realize monochromatic finite-sums sets."""

from __future__ import annotations

from itertools import combinations

from .core import Coloring, FiniteSet, IntMatrix

MAX_FS_ELEMENTS = 24
MAX_MATRIX_N = 10


def fs(S: FiniteSet) -> FiniteSet:
    """All sums over nonempty subsets of S, duplicates collapsed."""
    if len(S) > MAX_FS_ELEMENTS:
        raise ValueError(f"set too large for subset-sum enumeration (max {MAX_FS_ELEMENTS})")
    sums: set[int] = set()
    for s in S:
        sums |= {s} | {t + s for t in sums}
    return FiniteSet(sums)


def weakly_monochromatic(c: Coloring, S: FiniteSet) -> bool:
    """True iff every nonempty subset sum of S has the color of the largest
    element participating in it."""
    if not S:
        raise ValueError("empty set")
    if S.min() < c.lo or S.total() > c.hi:
        raise ValueError("coloring domain too small")
    elems = S.elements
    # prefix[i] holds all sums over subsets of the first i elements (and 0)
    prefix = {0}
    for s in elems:
        for p in sorted(prefix):
            if c.color(p + s) != c.color(s):
                return False
        prefix |= {p + s for p in prefix}
    return True


def _subsets_in_order(n: int):
    for size in range(1, n + 1):
        for sub in combinations(range(1, n + 1), size):
            yield sub


def folkman_matrix(n: int) -> IntMatrix:
    """The (2^n - 1) x (n + 2^n - 1) matrix with one row per nonempty subset
    of {1..n} (ordered by size, then lexicographically): +1 under the first n
    columns at the subset's members, -1 in the row's own tail column."""
    if not 1 <= n <= MAX_MATRIX_N:
        raise ValueError(f"n must be between 1 and {MAX_MATRIX_N}")
    m = 2**n - 1
    rows = []
    for i, sub in enumerate(_subsets_in_order(n), start=1):
        members = set(sub)
        row = [1 if j in members else 0 for j in range(1, n + 1)]
        row += [-1 if j == i else 0 for j in range(1, m + 1)]
        rows.append(row)
    return IntMatrix(rows)
