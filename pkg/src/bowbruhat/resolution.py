"""
Column resolutions of BCTs and the merge map between them.

Resolving column ``k`` with split ``(a, b)`` replaces the column sum
``c_k = a + b`` by two adjacent entries ``a, b`` and the column itself by
two adjacent columns that never both hold a 1 in the same row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb, factorial, prod
from typing import Sequence

import numpy as np

from .enumeration import BctFamily, enumerate_bcts
from .matrix import BinaryMatrix, CornerSelection, MarginPair, interchange
from .orders import FiniteRelation, _pack_bool, secondary_relation

__all__ = [
    "ChargeResolution", "ResolvedMatrix", "resolve_charges", "merge_columns",
    "column_resolutions", "maximal_resolutions", "merge_to", "all_resolutions",
    "check_resolution_compatibility", "compatibility_relation", "two_column_z", "two_column_leq",
    "two_column_chain",
]


@dataclass(frozen=True)
class ChargeResolution:
    """Split column ``k`` (1-based) into adjacent parts ``first + second``."""
    column: int
    first: int
    second: int

    def __post_init__(self):
        if self.first <= 0 or self.second <= 0:
            raise ValueError(f"split parts must be positive, got ({self.first},{self.second})")
        if self.column < 1:
            raise ValueError("column index is 1-based")

    @property
    def total(self) -> int:
        return self.first + self.second


@dataclass(frozen=True)
class ResolvedMatrix:
    matrix: BinaryMatrix
    column: int  # the original column k; it now occupies columns k and k+1

    def __post_init__(self):
        M, k = self.matrix, self.column
        if not 1 <= k < M.n:
            raise ValueError(f"column {k} has no right neighbour in a {M.n}-column matrix")
        for i in range(1, M.m + 1):
            if M.entry(i, k) + M.entry(i, k + 1) > 1:
                raise ValueError(f"row {i} has 1s in both resolved columns {k} and {k + 1}")


def resolve_charges(c: Sequence[int], res: ChargeResolution) -> tuple[int, ...]:
    c = tuple(c)
    k = res.column
    if not 1 <= k <= len(c):
        raise ValueError(f"no column {k} in a charge vector of length {len(c)}")
    if c[k - 1] < 2:
        raise ValueError(f"c_{k} = {c[k - 1]} cannot be resolved")
    if res.total != c[k - 1]:
        raise ValueError(f"split {res.first}+{res.second} does not sum to c_{k} = {c[k - 1]}")
    return c[:k - 1] + (res.first, res.second) + c[k:]


def merge_columns(resolved: ResolvedMatrix) -> BinaryMatrix:
    """The merge map q: columns k and k+1 become one column."""
    M, k = resolved.matrix, resolved.column
    rows = []
    for row in M.to_list():
        rows.append(row[:k - 1] + [row[k - 1] + row[k]] + row[k + 1:])
    return BinaryMatrix.from_rows(rows)


def column_resolutions(M: BinaryMatrix, res: ChargeResolution) -> list[ResolvedMatrix]:
    """The fiber of q over M, ordered by which 1s of column k go left."""
    resolve_charges(M.col_sums, res)
    k = res.column
    ones = [i for i in range(1, M.m + 1) if M.entry(i, k)]
    base = M.to_list()
    out = []
    for left in combinations(ones, res.first):
        left = set(left)
        rows = []
        for i, row in enumerate(base, 1):
            bit = row[k - 1]
            pair = [bit, 0] if i in left else [0, bit]
            rows.append(row[:k - 1] + pair + row[k:])
        out.append(ResolvedMatrix(BinaryMatrix.from_rows(rows), k))
    return out


def maximal_resolutions(M: BinaryMatrix) -> list[BinaryMatrix]:
    """All ways to spread each column q over ``c_q`` single-1 columns."""
    per_column = []
    for q in range(1, M.n + 1):
        ones = [i for i in range(1, M.m + 1) if M.entry(i, q)]
        per_column.append(list(permutations(ones)))
    out = []
    for choice in product(*per_column):
        rows = [[] for _ in range(M.m)]
        for order in choice:
            for one_row in order:
                for i in range(M.m):
                    rows[i].append(1 if i + 1 == one_row else 0)
        out.append(BinaryMatrix.from_rows(rows) if rows[0] else M)
    return out


def merge_to(R: BinaryMatrix, sizes: Sequence[int]) -> BinaryMatrix:
    """Merge consecutive column groups of the given sizes (iterated q)."""
    if sum(sizes) != R.n:
        raise ValueError("group sizes do not cover the columns")
    rows = []
    for row in R.to_list():
        merged, start = [], 0
        for size in sizes:
            merged.append(sum(row[start:start + size]))
            start += size
        if any(x > 1 for x in merged):
            raise ValueError("merged columns overlap in some row")
        rows.append(merged)
    return BinaryMatrix.from_rows(rows)


def all_resolutions(c: Sequence[int]) -> list[ChargeResolution]:
    """Every single-column resolution of the charge vector c."""
    return [ChargeResolution(k, a, ck - a)
            for k, ck in enumerate(c, 1) if ck >= 2 for a in range(1, ck)]


@lru_cache(maxsize=256)
def _secondary_on(margins: MarginPair) -> tuple[BctFamily, FiniteRelation]:
    family = enumerate_bcts(margins)
    return family, secondary_relation(family)


def check_resolution_compatibility(M1: BinaryMatrix, M2: BinaryMatrix, res: ChargeResolution) -> bool:
    """For every resolution of M1 some resolution of M2 lies weakly below it.

    The order is the secondary one on BCT(r, c~).  Compare against
    ``M2 <= M1`` computed directly.
    """
    if M1.shape != M2.shape or M1.margins != M2.margins:
        raise ValueError(f"margin mismatch: {M1.margins} vs {M2.margins}")
    c_res = resolve_charges(M1.col_sums, res)
    family, rel = _secondary_on(MarginPair(M1.row_sums, c_res))
    lower = 0
    for R in column_resolutions(M2, res):
        lower |= 1 << family.index[R.matrix]
    return all(rel.reach[family.index[R.matrix]] & lower for R in column_resolutions(M1, res))


def compatibility_relation(family: BctFamily, res: ChargeResolution) -> FiniteRelation:
    """``check_resolution_compatibility`` on every pair of the family at once.

    Bit b of ``reach[a]`` is set iff every resolution of member a lies weakly
    above some resolution of member b.
    """
    resolved, rel = _secondary_on(MarginPair(family.margins.r, resolve_charges(family.margins.c, res)))
    k = res.column
    image = np.zeros((len(resolved), len(family)), dtype=np.float32)
    fiber: list[list[int]] = [[] for _ in family]
    for x, R in enumerate(resolved):
        # members with a row 1 1 in columns k, k+1 are not resolutions of anything
        if any(R.entry(i, k) and R.entry(i, k + 1) for i in range(1, R.m + 1)):
            continue
        a = family.index[merge_columns(ResolvedMatrix(R, k))]
        image[x, a] = 1
        fiber[a].append(x)
    below = (rel.to_matrix().astype(np.float32) @ image) > 0
    reach = [_pack_bool(np.logical_and.reduce(below[xs], axis=0)) for xs in fiber]
    return FiniteRelation(family, "compatibility", reach)


def two_column_z(M: BinaryMatrix, M_prime: BinaryMatrix) -> list[tuple[int, int]]:
    """Rows of Z = M' - M."""
    if M.n != 2 or M_prime.n != 2:
        raise ValueError("two_column_leq needs two-column matrices")
    if M.shape != M_prime.shape or M.margins != M_prime.margins:
        raise ValueError(f"margin mismatch: {M.margins} vs {M_prime.margins}")
    return [(a[0] - b[0], a[1] - b[1]) for a, b in zip(M_prime, M)]


def two_column_leq(M: BinaryMatrix, M_prime: BinaryMatrix) -> bool:
    """M' <= M in the secondary order, read off Z = M' - M in one pass."""
    z = two_column_z(M, M_prime)
    ahead = 0
    for row in z:
        if row == (1, -1):
            ahead += 1
        elif row == (-1, 1):
            ahead -= 1
            if ahead < 0:
                return False
        elif row != (0, 0):
            return False
    return ahead == 0


def two_column_chain(M: BinaryMatrix, M_prime: BinaryMatrix) -> list[CornerSelection]:
    """Interchanges carrying M down to M', pairing the t-th (1,-1) row of Z
    with the t-th (-1,1) row.  Raises if M' is not below M."""
    if not two_column_leq(M, M_prime):
        raise ValueError("M' is not below M in the secondary order")
    z = two_column_z(M, M_prime)
    ups = [p for p, row in enumerate(z, 1) if row == (1, -1)]
    downs = [p for p, row in enumerate(z, 1) if row == (-1, 1)]
    chain = [CornerSelection(i, j, 1, 2) for i, j in zip(ups, downs)]
    current = M
    for sel in chain:
        current = interchange(current, sel)
    assert current == M_prime
    return chain


def fiber_size(M: BinaryMatrix, res: ChargeResolution) -> int:
    return comb(M.col_sums[res.column - 1], res.first)


def maximal_count(M: BinaryMatrix) -> int:
    return prod(factorial(x) for x in M.col_sums)
