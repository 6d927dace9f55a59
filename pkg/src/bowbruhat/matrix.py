"""
Binary contingency tables (BCTs): 0/1 matrices with prescribed margins.

Every public index in this package is 1-based, so ``M.entry(1, 1)`` is the
top-left entry and a :class:`CornerSelection` ``(i, j, k, l)`` names rows
``i < j`` and columns ``k < l`` exactly as written in formulas.

Rows are stored as packed integers with column 1 in the most significant
bit, which makes tuple comparison of the packed rows agree with the
lexicographic order of the row-major bitstring.

>>> M = BinaryMatrix.from_rows([[1, 1, 0], [0, 0, 1], [1, 0, 1]])
>>> M.margins
MarginPair(r=(2, 1, 2), c=(2, 1, 2))
>>> print(M)
110
001
101
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

__all__ = [
    "BinaryMatrix", "MarginPair", "CornerSelection",
    "L2", "I2",
    "partial_sum_matrix", "leq_bruhat", "find_L2", "interchange",
    "is_secondary_cover", "column_prefix_sum",
]


@dataclass(frozen=True, order=True)
class MarginPair:
    """Row sum vector ``r`` and column sum vector ``c``."""
    r: tuple[int, ...]
    c: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(int(x) for x in self.r))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        if any(x < 0 for x in self.r + self.c):
            raise ValueError(f"negative margin in {self}")

    @property
    def total(self) -> int:
        return sum(self.r)

    @property
    def balanced(self) -> bool:
        return sum(self.r) == sum(self.c)

    def __str__(self):
        return f"({','.join(map(str, self.r))}),({','.join(map(str, self.c))})"


class CornerSelection(NamedTuple):
    """Rows ``i < j`` and columns ``k < l``, 1-based; need not be adjacent."""
    i: int
    j: int
    k: int
    l: int  # noqa: E741


class BinaryMatrix:
    """Immutable m x n 0/1 matrix with cached margins."""

    __slots__ = ("_rows", "_n", "__dict__")

    def __init__(self, packed_rows: Sequence[int], n: int):
        # trusted constructor; use from_rows / from_text for validation
        self._rows = tuple(packed_rows)
        self._n = n

    # construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, bit_rows: Iterable[Iterable[int]]) -> "BinaryMatrix":
        rows = [list(row) for row in bit_rows]
        if not rows:
            raise ValueError("matrix needs at least one row")
        n = len(rows[0])
        if n == 0:
            raise ValueError("matrix needs at least one column")
        packed = []
        for p, row in enumerate(rows, 1):
            if len(row) != n:
                raise ValueError(f"ragged rows: row {p} has length {len(row)}, expected {n}")
            value = 0
            for q, bit in enumerate(row, 1):
                if bit not in (0, 1):
                    raise ValueError(f"entry ({p},{q}) = {bit!r} is not a bit")
                value = (value << 1) | int(bit)
            packed.append(value)
        return cls(packed, n)

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        """Parse one row per line of '0'/'1' characters."""
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        rows = []
        for line in lines:
            if set(line) - {"0", "1"}:
                raise ValueError(f"invalid matrix row {line!r}")
            rows.append([int(ch) for ch in line])
        return cls.from_rows(rows)

    @classmethod
    def from_bitstring(cls, bits: str, m: int, n: int) -> "BinaryMatrix":
        if len(bits) != m * n:
            raise ValueError("bitstring length does not match shape")
        return cls.from_rows([[int(ch) for ch in bits[p * n:(p + 1) * n]] for p in range(m)])

    @classmethod
    def from_json(cls, data: dict) -> "BinaryMatrix":
        if not isinstance(data, dict) or "rows" not in data:
            raise ValueError('matrix JSON must be an object with a "rows" key')
        return cls.from_rows(data["rows"])

    @classmethod
    def parse(cls, text: str) -> "BinaryMatrix":
        """Text or JSON, whichever ``text`` looks like."""
        if text.lstrip().startswith("{"):
            return cls.from_json(json.loads(text))
        return cls.from_text(text)

    def to_json(self) -> dict:
        return {"rows": self.to_list()}

    # accessors --------------------------------------------------------------

    @property
    def packed_rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def m(self) -> int:
        return len(self._rows)

    @property
    def n(self) -> int:
        return self._n

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._rows), self._n)

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.m and 1 <= j <= self._n):
            raise IndexError(f"entry ({i},{j}) outside {self.m}x{self._n} matrix")
        return (self._rows[i - 1] >> (self._n - j)) & 1

    def row(self, i: int) -> tuple[int, ...]:
        value = self._rows[i - 1]
        return tuple((value >> (self._n - 1 - q)) & 1 for q in range(self._n))

    def to_list(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(1, self.m + 1)]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_list(), dtype=np.int64).reshape(self.shape)

    @cached_property
    def column_masks(self) -> tuple[int, ...]:
        """Column q packed with row 1 in the most significant bit."""
        cols = []
        for q in range(self._n):
            shift = self._n - 1 - q
            value = 0
            for row in self._rows:
                value = (value << 1) | ((row >> shift) & 1)
            cols.append(value)
        return tuple(cols)

    @cached_property
    def row_sums(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self._rows)

    @cached_property
    def col_sums(self) -> tuple[int, ...]:
        return tuple(col.bit_count() for col in self.column_masks)

    @property
    def margins(self) -> MarginPair:
        return MarginPair(self.row_sums, self.col_sums)

    @property
    def bitstring(self) -> str:
        return "".join(format(row, f"0{self._n}b") for row in self._rows)

    def to_text(self) -> str:
        return "\n".join(format(row, f"0{self._n}b") for row in self._rows)

    def with_rows(self, packed_rows: Sequence[int]) -> "BinaryMatrix":
        return BinaryMatrix(packed_rows, self._n)

    def permute_columns(self, perm: Sequence[int]) -> "BinaryMatrix":
        """Column q of the result is column ``perm[q-1]`` of this matrix."""
        return BinaryMatrix.from_rows([[row[p - 1] for p in perm] for row in self.to_list()])

    # dunder ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __lt__(self, other: "BinaryMatrix") -> bool:
        return (self.shape, self._rows) < (other.shape, other._rows)

    def __hash__(self):
        return hash((self._n, self._rows))

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return (self.row(i) for i in range(1, self.m + 1))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"BinaryMatrix.from_rows({self.to_list()})"


L2 = BinaryMatrix.from_rows([[0, 1], [1, 0]])
I2 = BinaryMatrix.from_rows([[1, 0], [0, 1]])


def partial_sum_matrix(M: BinaryMatrix) -> np.ndarray:
    """Entry ``(i, j)`` (0-based in the array) counts the 1s in the top-left
    ``(i+1) x (j+1)`` corner of M."""
    return M.to_array().cumsum(axis=0).cumsum(axis=1)


def _require_same_margins(M1: BinaryMatrix, M2: BinaryMatrix):
    if M1.shape != M2.shape or M1.margins != M2.margins:
        raise ValueError(f"margin mismatch: {M1.margins} vs {M2.margins}")


def leq_bruhat(M1: BinaryMatrix, M2: BinaryMatrix) -> bool:
    """M1 <=_B M2 iff the corner sums of M1 dominate those of M2 entrywise."""
    _require_same_margins(M1, M2)
    return bool(np.all(partial_sum_matrix(M1) >= partial_sum_matrix(M2)))


def iter_L2(M: BinaryMatrix) -> Iterator[CornerSelection]:
    rows, n = M.packed_rows, M.n
    for a in range(len(rows)):
        ra = rows[a]
        for b in range(a + 1, len(rows)):
            rb = rows[b]
            ones_a = ra & ~rb  # row i is 1, row j is 0: candidate column l
            ones_b = rb & ~ra  # candidate column k
            if not ones_a or not ones_b:
                continue
            for k in range(n):
                if not (ones_b >> (n - 1 - k)) & 1:
                    continue
                for l in range(k + 1, n):
                    if (ones_a >> (n - 1 - l)) & 1:
                        yield CornerSelection(a + 1, b + 1, k + 1, l + 1)


def find_L2(M: BinaryMatrix) -> list[CornerSelection]:
    """All corner selections holding L2, ascending in ``(i, j, k, l)``."""
    return list(iter_L2(M))


def _check_corner(M: BinaryMatrix, sel: CornerSelection, pattern: BinaryMatrix):
    i, j, k, l = sel
    if not (1 <= i < j <= M.m and 1 <= k < l <= M.n):
        raise ValueError(f"invalid corner selection {tuple(sel)} for {M.m}x{M.n} matrix")
    got = ((M.entry(i, k), M.entry(i, l)), (M.entry(j, k), M.entry(j, l)))
    if got != (pattern.row(1), pattern.row(2)):
        raise ValueError(f"corner {tuple(sel)} holds {got}, expected {pattern.to_list()}")


def interchange(M: BinaryMatrix, sel: CornerSelection) -> BinaryMatrix:
    """Replace the L2 at ``sel`` by I2."""
    _check_corner(M, sel, L2)
    i, j, k, l = sel
    flip = (1 << (M.n - k)) | (1 << (M.n - l))
    rows = list(M.packed_rows)
    rows[i - 1] ^= flip
    rows[j - 1] ^= flip
    return M.with_rows(rows)


def is_secondary_cover(M: BinaryMatrix, sel: CornerSelection) -> bool:
    """Brualdi-Deaett cover criterion for the interchange at ``sel``."""
    _check_corner(M, sel, L2)
    return _cover_conditions(M.packed_rows, M.n, *sel)


def _cover_conditions(rows: Sequence[int], n: int, i: int, j: int, k: int, l: int) -> bool:
    bit_k = 1 << (n - k)
    bit_l = 1 << (n - l)
    inner = ((1 << (n - k)) - 1) & ~((1 << (n - l + 1)) - 1)  # columns k < q < l
    top, bottom = rows[i - 1], rows[j - 1]
    if (top ^ bottom) & inner:
        return False
    top_inner = top & inner
    for p in range(i, j - 1):
        row = rows[p]
        has_k = bool(row & bit_k)
        if has_k != bool(row & bit_l):
            return False
        if has_k:
            if top_inner & ~row:
                return False
        elif row & inner & ~top:
            return False
    return True


def column_prefix_sum(M: BinaryMatrix, p: int, q: int) -> int:
    """Number of 1s in column q among rows 1..p."""
    if not (1 <= p <= M.m and 1 <= q <= M.n):
        raise IndexError(f"({p},{q}) outside {M.m}x{M.n} matrix")
    shift = M.n - q
    return sum((row >> shift) & 1 for row in M.packed_rows[:p])
