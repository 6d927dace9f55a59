"""
Feasibility and exhaustive enumeration of BCT(r, c), plus the undirected
interchange graph on the result.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .matrix import BinaryMatrix, MarginPair, iter_L2, interchange

__all__ = [
    "BctFamily", "InterchangeGraph",
    "gale_ryser_feasible", "enumerate_bcts", "count_bcts",
    "interchange_graph", "is_connected", "compositions",
]


def _as_margins(margins) -> MarginPair:
    if isinstance(margins, MarginPair):
        return margins
    r, c = margins
    return MarginPair(tuple(r), tuple(c))


def _dominated(r: Sequence[int], c: Sequence[int]) -> bool:
    """Gale-Ryser: sorted c is dominated by the conjugate partition of r."""
    if sum(r) != sum(c) or any(x < 0 for x in r) or any(x < 0 for x in c):
        return False
    ordered = sorted(c, reverse=True)
    acc_c = acc_conj = 0
    for k in range(1, len(ordered) + 1):
        acc_c += ordered[k - 1]
        acc_conj += sum(1 for x in r if x >= k)
        if acc_c > acc_conj:
            return False
    # rows longer than the column count can never be filled
    return all(x <= len(c) for x in r)


def gale_ryser_feasible(margins) -> bool:
    """True iff some 0/1 matrix has row sums ``r`` and column sums ``c``."""
    margins = _as_margins(margins)
    return _dominated(margins.r, margins.c)


@dataclass(frozen=True)
class _Plan:
    r: tuple[int, ...]
    n: int

    @cached_property
    def row_choices(self) -> dict[int, list[int]]:
        # packed rows of each weight in ascending bitstring order
        out = {}
        for weight in set(self.r):
            masks = [sum(1 << (self.n - 1 - q) for q in cols)
                     for cols in combinations(range(self.n), weight)]
            out[weight] = sorted(masks)
        return out


def _completions(r: tuple[int, ...], c: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(c)
    plan = _Plan(r, n)
    choices = plan.row_choices
    bits = [1 << (n - 1 - q) for q in range(n)]

    @lru_cache(maxsize=None)
    def fill(p: int, residual: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
        if p == len(r):
            return ((),)
        rest = r[p + 1:]
        out = []
        for mask in choices[r[p]]:
            nxt = list(residual)
            ok = True
            for q in range(n):
                if mask & bits[q]:
                    if nxt[q] == 0:
                        ok = False
                        break
                    nxt[q] -= 1
            if not ok:
                continue
            nxt = tuple(nxt)
            if not _dominated(rest, nxt):
                continue
            out.extend((mask,) + tail for tail in fill(p + 1, nxt))
        return tuple(out)

    if not _dominated(r, c):
        return []
    return list(fill(0, c))


def count_bcts(margins) -> int:
    """|BCT(r, c)| by dynamic programming over residual column sums."""
    margins = _as_margins(margins)
    r, c = margins.r, margins.c
    if not r or not c or not _dominated(r, c):
        return 0
    n = len(c)
    choices = _Plan(r, n).row_choices

    @lru_cache(maxsize=None)
    def count(p: int, residual: tuple[int, ...]) -> int:
        if p == len(r):
            return 1
        total = 0
        for mask in choices[r[p]]:
            nxt = tuple(x - ((mask >> (n - 1 - q)) & 1) for q, x in enumerate(residual))
            if min(nxt, default=0) >= 0:
                total += count(p + 1, nxt)
        return total

    return count(0, c)


class BctFamily:
    """All members of BCT(r, c) in ascending row-major bitstring order."""

    def __init__(self, margins, members: Sequence[BinaryMatrix]):
        self.margins = _as_margins(margins)
        self.members = tuple(members)

    @cached_property
    def index(self) -> dict[BinaryMatrix, int]:
        return {M: a for a, M in enumerate(self.members)}

    @cached_property
    def packed_index(self) -> dict[tuple[int, ...], int]:
        return {M.packed_rows: a for a, M in enumerate(self.members)}

    @property
    def m(self) -> int:
        return len(self.margins.r)

    @property
    def n(self) -> int:
        return len(self.margins.c)

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[BinaryMatrix]:
        return iter(self.members)

    def __getitem__(self, a: int) -> BinaryMatrix:
        return self.members[a]

    def __contains__(self, M):
        return M in self.index

    def __repr__(self):
        return f"BctFamily({self.margins}, size={len(self)})"

    def to_json(self) -> dict:
        return {
            "r": list(self.margins.r),
            "c": list(self.margins.c),
            "members": [M.to_list() for M in self.members],
        }


def enumerate_bcts(margins) -> BctFamily:
    """The complete family BCT(r, c), empty when infeasible."""
    margins = _as_margins(margins)
    if not margins.r or not margins.c:
        return BctFamily(margins, [])
    n = len(margins.c)
    rows = _completions(margins.r, margins.c)
    return BctFamily(margins, [BinaryMatrix(packed, n) for packed in rows])


@dataclass(frozen=True)
class InterchangeGraph:
    family: BctFamily
    edges: frozenset  # of (a, b) with a < b

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(len(self.family))]
        for a, b in sorted(self.edges):
            adj[a].append(b)
            adj[b].append(a)
        return adj


def interchange_graph(family: BctFamily) -> InterchangeGraph:
    lookup = family.packed_index
    edges = set()
    for a, M in enumerate(family.members):
        for sel in iter_L2(M):
            b = lookup[interchange(M, sel).packed_rows]
            edges.add((min(a, b), max(a, b)))
    return InterchangeGraph(family, frozenset(edges))


def is_connected(graph: InterchangeGraph) -> bool:
    size = len(graph.family)
    if size <= 1:
        return True
    adj = graph.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return len(seen) == size


def compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``total``."""
    if total <= 0:
        return
    for parts in range(1, total + 1):
        for cuts in combinations(range(1, total), parts - 1):
            bounds = (0,) + cuts + (total,)
            yield tuple(bounds[t + 1] - bounds[t] for t in range(parts))
