"""
Matched blocks, block swap moves and their tangent weights, and the
geometric Bruhat order they generate.

A matched block on columns ``k < l`` and rows ``i..j`` has equal column
sums.  Moves are identified with their trimmed block, whose top and bottom
rows are *affected*, i.e. read ``(0,1)`` or ``(1,0)`` on the two columns.
Swapping the columns of such a block only changes its affected rows.

>>> from bowbruhat.matrix import L2
>>> blk = MatchedBlock(1, 2, 1, 2)
>>> str(tangent_weight(L2, blk))
'a2/a1 h^0'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .enumeration import BctFamily
from .matrix import BinaryMatrix, column_prefix_sum
from .orders import FiniteRelation, closure_from_arcs

__all__ = [
    "MatchedBlock", "BlockSwapMove", "TangentWeight", "CocharacterSpec",
    "CurveArc", "CurveDigraph",
    "matched_blocks", "minimal_decomposition", "is_minimal", "apply_block_swap",
    "tangent_weight", "is_attractive", "block_swap_moves", "curve_digraph",
    "geometric_relation",
]


@dataclass(frozen=True, order=True)
class MatchedBlock:
    """Columns ``k < l`` and contiguous rows ``i..j`` (1-based, inclusive)."""
    k: int
    l: int  # noqa: E741
    i: int
    j: int

    def __post_init__(self):
        if not (self.k < self.l and self.i <= self.j and self.k >= 1 and self.i >= 1):
            raise ValueError(f"malformed block {self}")

    @property
    def rows(self) -> range:
        return range(self.i, self.j + 1)

    def to_json(self) -> dict:
        return {"cols": [self.k, self.l], "rows": [self.i, self.j]}


@dataclass(frozen=True)
class TangentWeight:
    """The monomial ``a_{q1} / a_{q0} * hbar^d``."""
    q1: int
    q0: int
    hbar_exp: int

    def __post_init__(self):
        if self.q0 == self.q1:
            raise ValueError("tangent weight needs two distinct columns")

    def inverse(self) -> "TangentWeight":
        return TangentWeight(self.q0, self.q1, -self.hbar_exp)

    def __str__(self):
        return f"a{self.q1}/a{self.q0} h^{self.hbar_exp}"


@dataclass(frozen=True)
class CocharacterSpec:
    """One-line permutation ``sigma`` of ``1..n``; exponents of the cocharacter."""
    sigma: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(x) for x in self.sigma))
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)):
            raise ValueError(f"{self.sigma} is not a permutation of 1..{len(self.sigma)}")

    @classmethod
    def identity(cls, n: int) -> "CocharacterSpec":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, q: int) -> int:
        return self.sigma[q - 1]


@dataclass(frozen=True)
class BlockSwapMove:
    block: MatchedBlock
    components: tuple[MatchedBlock, ...]
    source: int
    target: int
    weight: TangentWeight

    @property
    def pencil_dim(self) -> int:
        return len(self.components)

    @property
    def indecomposable(self) -> bool:
        return len(self.components) == 1


@dataclass(frozen=True)
class CurveArc:
    source: int
    target: int
    block: MatchedBlock
    weight: TangentWeight
    pencil_dim: int = 1


@dataclass
class CurveDigraph:
    family: BctFamily
    spec: CocharacterSpec
    arcs: list[CurveArc]
    moves: list[BlockSwapMove] = field(default_factory=list, repr=False)

    def successors(self) -> list[list[int]]:
        out = [set() for _ in range(len(self.family))]
        for arc in self.arcs:
            out[arc.source].add(arc.target)
        return [sorted(s) for s in out]

    def arc_pairs(self) -> set[tuple[int, int]]:
        return {(arc.source, arc.target) for arc in self.arcs}


# helpers on packed rows ---------------------------------------------------

def _signs(M: BinaryMatrix, k: int, l: int) -> list[int]:
    """+1 for a (1,0) row, -1 for (0,1), 0 otherwise; index p-1 for row p."""
    bk, bl = 1 << (M.n - k), 1 << (M.n - l)
    out = []
    for row in M.packed_rows:
        a, b = bool(row & bk), bool(row & bl)
        out.append(0 if a == b else (1 if a else -1))
    return out


def _check_block(M: BinaryMatrix, block: MatchedBlock):
    if block.l > M.n or block.j > M.m:
        raise ValueError(f"block {block} outside {M.m}x{M.n} matrix")
    if sum(_signs(M, block.k, block.l)[block.i - 1:block.j]) != 0:
        raise ValueError(f"block {block} is not matched on this matrix")


def _minimal_runs(signs: Sequence[int], lo: int, hi: int) -> list[tuple[int, int]]:
    """Split 0-based rows lo..hi into minimal components (0-based inclusive)."""
    runs = []
    start, level = None, 0
    for p in range(lo, hi + 1):
        s = signs[p]
        if s == 0:
            continue
        if start is None:
            start = p
        level += s
        if level == 0:
            runs.append((start, p))
            start = None
    return runs


def matched_blocks(M: BinaryMatrix) -> list[MatchedBlock]:
    """All trimmed matched blocks, ascending in ``(k, l, i, j)``."""
    out = []
    for k, l in combinations(range(1, M.n + 1), 2):
        signs = _signs(M, k, l)
        affected = [p for p, s in enumerate(signs) if s]
        for x, top in enumerate(affected):
            level = 0
            for bottom in affected[x:]:
                level += signs[bottom]
                if level == 0:
                    out.append(MatchedBlock(k, l, top + 1, bottom + 1))
    return out


def minimal_decomposition(M: BinaryMatrix, block: MatchedBlock) -> list[MatchedBlock]:
    _check_block(M, block)
    signs = _signs(M, block.k, block.l)
    return [MatchedBlock(block.k, block.l, a + 1, b + 1)
            for a, b in _minimal_runs(signs, block.i - 1, block.j - 1)]


def is_minimal(M: BinaryMatrix, block: MatchedBlock) -> bool:
    parts = minimal_decomposition(M, block)
    return len(parts) == 1 and parts[0] == block


def apply_block_swap(M: BinaryMatrix, block: MatchedBlock) -> BinaryMatrix:
    """Swap columns k and l on rows i..j."""
    _check_block(M, block)
    flip = (1 << (M.n - block.k)) | (1 << (M.n - block.l))
    rows = list(M.packed_rows)
    for p in block.rows:
        row = rows[p - 1]
        if bool(row & (1 << (M.n - block.k))) != bool(row & (1 << (M.n - block.l))):
            rows[p - 1] = row ^ flip
    return M.with_rows(rows)


def tangent_weight(M: BinaryMatrix, block: MatchedBlock) -> TangentWeight:
    """Weight of the pencil for the move on ``block``, read at its top row."""
    _check_block(M, block)
    i, k, l = block.i, block.k, block.l
    top = (M.entry(i, k), M.entry(i, l))
    if top == (0, 1):
        q0, q1 = k, l
    elif top == (1, 0):
        q0, q1 = l, k
    else:
        raise ValueError(f"top row {i} of {block} is not affected")
    return TangentWeight(q1, q0, 1 + column_prefix_sum(M, i, q0) - column_prefix_sum(M, i, q1))


def is_attractive(w: TangentWeight, spec: CocharacterSpec) -> bool:
    return spec(w.q1) > spec(w.q0)


def _prefix_columns(M: BinaryMatrix) -> list[list[int]]:
    """s[p][q-1] = ones in column q among rows 1..p (row 0 included as zeros)."""
    n = M.n
    s = [[0] * n]
    for row in M.packed_rows:
        prev = s[-1]
        s.append([prev[q] + ((row >> (n - 1 - q)) & 1) for q in range(n)])
    return s


def _moves_of(M: BinaryMatrix, lookup: dict, source: int,
              spec: Optional[CocharacterSpec], minimal_only: bool) -> Iterator[BlockSwapMove]:
    n = M.n
    rows = M.packed_rows
    prefix = None
    for k, l in combinations(range(1, n + 1), 2):
        bk, bl = 1 << (n - k), 1 << (n - l)
        flip = bk | bl
        signs = [0 if bool(row & bk) == bool(row & bl) else (1 if row & bk else -1) for row in rows]
        affected = [p for p, s in enumerate(signs) if s]
        if len(affected) < 2:
            continue
        for x, top in enumerate(affected):
            # top row (0,1): column k gains a 1, so q0 = k and q1 = l
            q1, q0 = (l, k) if signs[top] < 0 else (k, l)
            if spec is not None and not spec(q1) > spec(q0):
                continue
            level = 0
            touched = []
            comps = 0
            for bottom in affected[x:]:
                level += signs[bottom]
                touched.append(bottom)
                if level:
                    continue
                comps += 1
                if comps > 1 and minimal_only:
                    break
                if prefix is None:
                    prefix = _prefix_columns(M)
                new = list(rows)
                for p in touched:
                    new[p] ^= flip
                target = lookup[tuple(new)]
                d = 1 + prefix[top + 1][q0 - 1] - prefix[top + 1][q1 - 1]
                block = MatchedBlock(k, l, top + 1, bottom + 1)
                components = _component_blocks(signs, k, l, top, bottom) if comps > 1 else (block,)
                yield BlockSwapMove(block, components, source, target, TangentWeight(q1, q0, d))
                if minimal_only:
                    break


def _component_blocks(signs, k, l, top, bottom) -> tuple[MatchedBlock, ...]:
    return tuple(MatchedBlock(k, l, a + 1, b + 1) for a, b in _minimal_runs(signs, top, bottom))


def block_swap_moves(family: BctFamily, spec: Optional[CocharacterSpec] = None,
                     indecomposable_only: bool = False) -> list[BlockSwapMove]:
    """All moves out of every member (attractive ones only when ``spec`` is given).

    Ordered by source, then ``(k, l, i, j)``.
    """
    lookup = family.packed_index
    out = []
    for a, M in enumerate(family.members):
        out.extend(sorted(_moves_of(M, lookup, a, spec, indecomposable_only), key=lambda mv: mv.block))
    return out


def curve_digraph(family: BctFamily, spec: Optional[CocharacterSpec] = None,
                  with_moves: bool = False) -> CurveDigraph:
    """Arcs M -> M' for indecomposable attractive block swap moves.

    With ``with_moves`` the digraph also lists every move out of every member,
    decomposable ones included, attractive or not.
    """
    spec = spec or CocharacterSpec.identity(family.n)
    if len(spec.sigma) != family.n:
        raise ValueError(f"sigma has length {len(spec.sigma)}, family has {family.n} columns")
    arcs = [CurveArc(mv.source, mv.target, mv.block, mv.weight)
            for mv in block_swap_moves(family, spec, indecomposable_only=True)]
    moves = block_swap_moves(family) if with_moves else []
    return CurveDigraph(family, spec, arcs, moves)


def _lsb_columns(M: BinaryMatrix) -> list[int]:
    """Column q-1 as a bitmask with row p (1-based) at bit p-1."""
    n = M.n
    cols = [0] * n
    for p, row in enumerate(M.packed_rows):
        for q in range(n):
            if (row >> (n - 1 - q)) & 1:
                cols[q] |= 1 << p
    return cols


def _arc_targets(M: BinaryMatrix, lookup: dict, sigma: Sequence[int]) -> list[int]:
    """Targets of the indecomposable attractive moves out of M; no bookkeeping."""
    n = M.n
    rows = M.packed_rows
    cols = _lsb_columns(M)
    out = set()
    for k in range(n - 1):
        ck = cols[k]
        for l in range(k + 1, n):
            cl = cols[l]
            aff = ck ^ cl
            if not aff & (aff - 1):
                continue
            gain_k = sigma[l] > sigma[k]  # a top row (0,1) is attractive
            plus = ck & ~cl
            affected = []
            while aff:
                low = aff & -aff
                affected.append(low.bit_length() - 1)
                aff ^= low
            flip = (1 << (n - 1 - k)) | (1 << (n - 1 - l))
            for x, top in enumerate(affected):
                top_plus = (plus >> top) & 1
                if bool(top_plus) == gain_k:
                    continue
                level = 0
                for y in range(x, len(affected)):
                    level += 1 if (plus >> affected[y]) & 1 else -1
                    if level == 0:
                        new = list(rows)
                        for p in affected[x:y + 1]:
                            new[p] ^= flip
                        out.add(lookup[tuple(new)])
                        break
    return sorted(out)


def geometric_relation(family: BctFamily, spec: Optional[CocharacterSpec] = None) -> FiniteRelation:
    """Reflexive-transitive closure of the attractive curve arcs."""
    spec = spec or CocharacterSpec.identity(family.n)
    if len(spec.sigma) != family.n:
        raise ValueError(f"sigma has length {len(spec.sigma)}, family has {family.n} columns")
    lookup = family.packed_index
    arcs = [_arc_targets(M, lookup, spec.sigma) for M in family.members]
    return closure_from_arcs(family, "geometric", arcs)
