"""
The combinatorial orders on an enumerated family, Hasse diagrams, and
relation comparison.

Relations are stored as one Python integer per member used as a bitset:
bit ``b`` of ``reach[a]`` is set iff ``member_b <= member_a``.  Generated
relations (secondary, geometric) keep their generating arcs so the Hasse
diagram can be read off without scanning whole down-sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterator, Optional, Sequence

import numpy as np

from .enumeration import BctFamily
from .matrix import _cover_conditions, iter_L2

__all__ = [
    "FiniteRelation", "HasseDiagram", "RelationComparison",
    "bruhat_relation", "secondary_relation", "secondary_arcs",
    "secondary_hasse_direct", "hasse", "compare_relations", "closure_from_arcs",
    "bits",
]

KINDS = ("bruhat", "secondary", "geometric")


def bits(x: int) -> Iterator[int]:
    """Indices of the set bits of ``x``, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(eq=False)
class FiniteRelation:
    family: BctFamily
    kind: str
    reach: list[int]
    arcs: Optional[list[list[int]]] = field(default=None, repr=False)

    def leq(self, b: int, a: int) -> bool:
        """member_b <= member_a."""
        return bool((self.reach[a] >> b) & 1)

    def less(self, b: int, a: int) -> bool:
        return a != b and self.leq(b, a)

    def down_set(self, a: int) -> list[int]:
        return list(bits(self.reach[a]))

    def pairs(self) -> Iterator[tuple[int, int]]:
        """All ``(upper, lower)`` with lower <= upper, including the diagonal."""
        for a, row in enumerate(self.reach):
            for b in bits(row):
                yield a, b

    @property
    def size(self) -> int:
        return sum(row.bit_count() for row in self.reach)

    def __eq__(self, other):
        if not isinstance(other, FiniteRelation):
            return NotImplemented
        return self.family.margins == other.family.margins and self.reach == other.reach

    def is_reflexive(self) -> bool:
        return all((row >> a) & 1 for a, row in enumerate(self.reach))

    def to_matrix(self) -> np.ndarray:
        """Boolean matrix with ``[a, b]`` set iff member_b <= member_a."""
        size = len(self.reach)
        nbytes = (size + 7) // 8
        raw = np.frombuffer(b"".join(row.to_bytes(nbytes, "little") for row in self.reach),
                            dtype=np.uint8).reshape(size, nbytes)
        return np.unpackbits(raw, axis=1, bitorder="little")[:, :size].astype(bool)

    def is_transitive(self, chunk: int = 512) -> bool:
        R = self.to_matrix()
        F = R.astype(np.float32)
        for start in range(0, len(R), chunk):
            two_step = (F[start:start + chunk] @ F) > 0
            if (two_step & ~R[start:start + chunk]).any():
                return False
        return True

    def is_antisymmetric(self) -> bool:
        R = self.to_matrix()
        both = R & R.T
        np.fill_diagonal(both, False)
        return not both.any()

    def is_partial_order(self) -> bool:
        return self.is_reflexive() and self.is_antisymmetric() and self.is_transitive()


@dataclass(frozen=True)
class HasseDiagram:
    family: BctFamily
    cover_edges: frozenset  # of (upper, lower)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.cover_edges)

    def levels(self) -> list[int]:
        """Length of the longest chain from a minimal element to each member."""
        down = [[] for _ in range(len(self.family))]
        for upper, lower in self.cover_edges:
            down[upper].append(lower)
        level = [0] * len(self.family)
        order = TopologicalSorter({a: down[a] for a in range(len(self.family))}).static_order()
        for a in order:
            level[a] = max((level[b] + 1 for b in down[a]), default=0)
        return level


def _pack_bool(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def bruhat_relation(family: BctFamily, chunk: int = 64) -> FiniteRelation:
    """M_b <=_B M_a iff the corner sums of M_b dominate those of M_a."""
    size = len(family)
    if size == 0:
        return FiniteRelation(family, "bruhat", [])
    sums = np.stack([M.to_array().cumsum(0).cumsum(1).ravel() for M in family.members])
    sums = sums.astype(np.int16)
    reach = []
    for start in range(0, size, chunk):
        block = sums[start:start + chunk]
        # dom[a, b] = all(sums[b] >= sums[a])
        dom = np.all(sums[None, :, :] >= block[:, None, :], axis=2)
        reach.extend(_pack_bool(row) for row in dom)
    return FiniteRelation(family, "bruhat", reach)


def closure_from_arcs(family: BctFamily, kind: str, arcs: Sequence[Sequence[int]]) -> FiniteRelation:
    """Reflexive-transitive closure of ``a -> b`` arcs (b below a)."""
    graph = {a: arcs[a] for a in range(len(family))}
    try:
        order = list(TopologicalSorter(graph).static_order())
    except CycleError as exc:
        raise ValueError(f"{kind} arcs contain a cycle; not a partial order") from exc
    reach = [0] * len(family)
    for a in order:
        row = 1 << a
        for b in arcs[a]:
            row |= reach[b]
        reach[a] = row
    return FiniteRelation(family, kind, reach, [list(x) for x in arcs])


def secondary_arcs(family: BctFamily, covers_only: bool = False) -> list[list[int]]:
    """For each member, the members reached by one L2 -> I2 interchange."""
    lookup = family.packed_index
    out = []
    for M in family.members:
        rows, n = M.packed_rows, M.n
        targets = []
        for sel in iter_L2(M):
            i, j, k, l = sel
            if covers_only and not _cover_conditions(rows, n, i, j, k, l):
                continue
            flip = (1 << (n - k)) | (1 << (n - l))
            new = list(rows)
            new[i - 1] ^= flip
            new[j - 1] ^= flip
            targets.append(lookup[tuple(new)])
        out.append(sorted(set(targets)))
    return out


def secondary_relation(family: BctFamily) -> FiniteRelation:
    return closure_from_arcs(family, "secondary", secondary_arcs(family))


def secondary_hasse_direct(family: BctFamily) -> HasseDiagram:
    """Cover edges from the cover criterion alone, no closure built."""
    arcs = secondary_arcs(family, covers_only=True)
    return HasseDiagram(family, frozenset((a, b) for a, targets in enumerate(arcs) for b in targets))


def hasse(rel: FiniteRelation) -> HasseDiagram:
    """Transitive reduction of a partial order."""
    if not rel.is_antisymmetric():
        raise ValueError(f"{rel.kind} relation is not antisymmetric")
    edges = set()
    for a, row in enumerate(rel.reach):
        strict = row & ~(1 << a)
        if not strict:
            continue
        # every element strictly below a lies below one of a's generators
        sources = rel.arcs[a] if rel.arcs is not None else bits(strict)
        below = 0
        for c in sources:
            if c != a:
                below |= rel.reach[c] & ~(1 << c)
        for b in bits(strict & ~below):
            edges.add((a, b))
    return HasseDiagram(rel.family, frozenset(edges))


@dataclass
class RelationComparison:
    equal: bool
    only_first: list[tuple[int, int]]   # (upper, lower) pairs, truncated
    only_second: list[tuple[int, int]]
    count_only_first: int
    count_only_second: int

    def to_json(self) -> dict:
        return {
            "equal": self.equal,
            "count_only_first": self.count_only_first,
            "count_only_second": self.count_only_second,
            "only_first": [list(p) for p in self.only_first],
            "only_second": [list(p) for p in self.only_second],
        }


def compare_relations(rel1: FiniteRelation, rel2: FiniteRelation, limit: int = 32) -> RelationComparison:
    if rel1.family.margins != rel2.family.margins or len(rel1.family) != len(rel2.family):
        raise ValueError("relations live on different families")
    only1, only2 = [], []
    count1 = count2 = 0
    for a, (x, y) in enumerate(zip(rel1.reach, rel2.reach)):
        d1, d2 = x & ~y, y & ~x
        count1 += d1.bit_count()
        count2 += d2.bit_count()
        only1.extend((a, b) for b in bits(d1) if len(only1) < limit)
        only2.extend((a, b) for b in bits(d2) if len(only2) < limit)
    only1, only2 = only1[:limit], only2[:limit]
    return RelationComparison(count1 == 0 and count2 == 0, only1, only2, count1, count2)
