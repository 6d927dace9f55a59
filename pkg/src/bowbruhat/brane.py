"""
Type A brane diagrams in the compact text notation, their charges,
Hanany-Witten transitions, and tie diagrams.

A diagram is written as fivebranes ``/`` (NS5) and ``\\`` (D5) with the
D3 multiplicity between each consecutive pair, e.g. ``/2/3/5\\3\\2\\``.
The outermost D3 branes have dimension 0 and are not written.

>>> D = parse_diagram("/2/3/5\\\\3\\\\2\\\\")
>>> charges(D)
MarginPair(r=(2, 1, 2), c=(2, 1, 2))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .matrix import BinaryMatrix, MarginPair

__all__ = [
    "NS5", "D5", "BraneDiagram", "TieDiagram",
    "parse_diagram", "format_diagram", "charges", "charge_vectors", "hw_step", "separated_diagram",
    "separate", "enumerate_tie_diagrams", "tie_to_bct", "bct_to_tie",
]

NS5 = "/"
D5 = "\\"

_TOKEN = re.compile(r"[/\\]|\d+|-\d+|\s+|.")


@dataclass(frozen=True)
class BraneDiagram:
    fivebranes: tuple[str, ...]
    d3_dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "fivebranes", tuple(self.fivebranes))
        object.__setattr__(self, "d3_dims", tuple(int(d) for d in self.d3_dims))
        if not self.fivebranes:
            raise ValueError("a brane diagram needs at least one fivebrane")
        if any(b not in (NS5, D5) for b in self.fivebranes):
            raise ValueError(f"unknown fivebrane in {self.fivebranes}")
        if len(self.d3_dims) != len(self.fivebranes) - 1:
            raise ValueError("need exactly one D3 dimension between consecutive fivebranes")
        if any(d < 0 for d in self.d3_dims):
            raise ValueError(f"negative D3 dimension in {self.d3_dims}")

    @property
    def dims(self) -> tuple[int, ...]:
        """All D3 dimensions including the two zero-dimensional ends."""
        return (0,) + self.d3_dims + (0,)

    @property
    def ns5_positions(self) -> list[int]:
        """0-based positions of the NS5 branes, left to right."""
        return [p for p, b in enumerate(self.fivebranes) if b == NS5]

    @property
    def d5_positions(self) -> list[int]:
        return [p for p, b in enumerate(self.fivebranes) if b == D5]

    @property
    def is_conformant(self) -> bool:
        """Every internal D3 brane has positive dimension."""
        return all(d > 0 for d in self.d3_dims)

    @property
    def is_separated(self) -> bool:
        text = "".join(self.fivebranes)
        return D5 + NS5 not in text

    @property
    def is_coseparated(self) -> bool:
        text = "".join(self.fivebranes)
        return NS5 + D5 not in text

    def __str__(self):
        return format_diagram(self)


def parse_diagram(text: str) -> BraneDiagram:
    text = text.strip()
    fivebranes: list[str] = []
    dims: list[int] = []
    expect_brane = True
    for tok in _TOKEN.findall(text):
        if tok.isspace():
            continue
        if tok in (NS5, D5):
            if not expect_brane and fivebranes:
                raise ValueError(f"missing D3 dimension before fivebrane {len(fivebranes) + 1} in {text!r}")
            fivebranes.append(tok)
            expect_brane = False
        elif tok.lstrip("-").isdigit():
            if int(tok) < 0:
                raise ValueError(f"negative D3 dimension {tok} in {text!r}")
            if not fivebranes:
                raise ValueError(f"D3 dimension before the first fivebrane in {text!r}")
            if expect_brane:
                raise ValueError(f"two D3 dimensions in a row in {text!r}")
            dims.append(int(tok))
            expect_brane = True
        else:
            raise ValueError(f"unexpected character {tok!r} in {text!r}")
    if not fivebranes:
        raise ValueError(f"no fivebranes in {text!r}")
    if expect_brane:
        raise ValueError(f"D3 dimension after the last fivebrane in {text!r}")
    return BraneDiagram(tuple(fivebranes), tuple(dims))


def format_diagram(D: BraneDiagram) -> str:
    parts = [D.fivebranes[0]]
    for d, brane in zip(D.d3_dims, D.fivebranes[1:]):
        parts.append(str(d))
        parts.append(brane)
    return "".join(parts)


def charges(D: BraneDiagram) -> MarginPair:
    """NS5 and D5 charge vectors, each read left to right.

    Raises ValueError when some charge is negative; use
    :func:`charge_vectors` for the raw integers.
    """
    r, c = charge_vectors(D)
    if min(r + c, default=0) < 0:
        raise ValueError(f"diagram {format_diagram(D)} has negative charges {r}, {c}")
    return MarginPair(r, c)


def charge_vectors(D: BraneDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    dims = D.dims
    r, c = [], []
    d5_left = 0
    ns5_right = len(D.ns5_positions)
    for p, brane in enumerate(D.fivebranes):
        left, right = dims[p], dims[p + 1]
        if brane == NS5:
            ns5_right -= 1
            r.append(right - left + d5_left)
        else:
            c.append(left - right + ns5_right)
            d5_left += 1
    return tuple(r), tuple(c)


def hw_step(D: BraneDiagram, position: int, direction: str) -> BraneDiagram:
    """Hanany-Witten transition on fivebranes ``position`` and ``position+1``.

    ``fwd`` turns ``d1 / d2 \\ d3`` into ``d1 \\ d1+d3-d2+1 / d3``; ``bwd``
    is the inverse.  ``position`` is 1-based.
    """
    if direction not in ("fwd", "bwd"):
        raise ValueError(f"direction must be 'fwd' or 'bwd', got {direction!r}")
    p = position - 1
    if not 0 <= p < len(D.fivebranes) - 1:
        raise ValueError(f"no fivebrane pair at position {position}")
    pattern = (NS5, D5) if direction == "fwd" else (D5, NS5)
    if D.fivebranes[p:p + 2] != pattern:
        raise ValueError(f"fivebranes at {position} are {''.join(D.fivebranes[p:p + 2])!r}, "
                         f"{direction} needs {''.join(pattern)!r}")
    dims = D.dims
    d1, d2, d3 = dims[p], dims[p + 1], dims[p + 2]
    middle = d1 + d3 - d2 + 1
    if middle < 0:
        raise ValueError(f"transition would create negative D3 dimension {middle}")
    branes = list(D.fivebranes)
    branes[p], branes[p + 1] = branes[p + 1], branes[p]
    internal = list(D.d3_dims)
    internal[p] = middle
    return BraneDiagram(tuple(branes), tuple(internal))


def separated_diagram(margins) -> BraneDiagram:
    """The HW representative with every NS5 brane left of every D5 brane."""
    if not isinstance(margins, MarginPair):
        margins = MarginPair(*margins)
    r, c = margins.r, margins.c
    if sum(r) != sum(c):
        raise ValueError(f"charge sums differ: {sum(r)} vs {sum(c)}")
    dims = []
    acc = 0
    for x in r:
        acc += x
        dims.append(acc)
    if not c:
        dims.pop()  # the last prefix sum is the right boundary, always 0
    tails = [sum(c[q:]) for q in range(1, len(c))]
    return BraneDiagram((NS5,) * len(r) + (D5,) * len(c), tuple(dims + tails))


def separate(D: BraneDiagram) -> tuple[BraneDiagram, list[int]]:
    """Move D5 branes right past NS5 branes until the diagram is separated.

    Returns the separated diagram and the 1-based positions of the ``bwd``
    steps taken, in order.
    """
    steps = []
    while not D.is_separated:
        text = "".join(D.fivebranes)
        p = text.index(D5 + NS5)
        D = hw_step(D, p + 1, "bwd")
        steps.append(p + 1)
    return D, steps


# tie diagrams ------------------------------------------------------------

@dataclass(frozen=True)
class TieDiagram:
    """Set of (NS5 index, D5 index) pairs, both 1-based."""
    ties: frozenset

    def __init__(self, ties: Iterable[Sequence[int]]):
        object.__setattr__(self, "ties", frozenset((int(z), int(a)) for z, a in ties))

    def sorted(self) -> list[tuple[int, int]]:
        return sorted(self.ties)

    def to_json(self) -> dict:
        return {"ties": [list(t) for t in self.sorted()]}


def _span(D: BraneDiagram, z: int, a: int) -> tuple[int, int]:
    """Internal D3 indices (0-based into d3_dims) straddled by the tie."""
    pz, pa = D.ns5_positions[z - 1], D.d5_positions[a - 1]
    lo, hi = min(pz, pa), max(pz, pa)
    return lo, hi  # covers d3_dims[lo:hi]


def coverage(D: BraneDiagram, T: TieDiagram) -> list[int]:
    cover = [0] * len(D.d3_dims)
    for z, a in T.ties:
        lo, hi = _span(D, z, a)
        for x in range(lo, hi):
            cover[x] += 1
    return cover


def is_valid_tie_diagram(D: BraneDiagram, T: TieDiagram) -> bool:
    m, n = len(D.ns5_positions), len(D.d5_positions)
    if any(not (1 <= z <= m and 1 <= a <= n) for z, a in T.ties):
        return False
    return coverage(D, T) == list(D.d3_dims)


def enumerate_tie_diagrams(D: BraneDiagram) -> list[TieDiagram]:
    """Every tie diagram of D, sorted by their sorted tie lists."""
    m, n = len(D.ns5_positions), len(D.d5_positions)
    # candidate ties ordered by left endpoint, so D3 brane x is final once
    # every tie starting at or before x has been decided
    cands = []
    for z in range(1, m + 1):
        for a in range(1, n + 1):
            lo, hi = _span(D, z, a)
            cands.append((lo, hi, z, a))
    cands.sort()
    target = list(D.d3_dims)
    cover = [0] * len(target)
    # remaining[x][t] = number of candidates from index t onwards covering x
    remaining_cover = [[0] * (len(cands) + 1) for _ in target]
    for t in range(len(cands) - 1, -1, -1):
        lo, hi = cands[t][:2]
        for x in range(len(target)):
            remaining_cover[x][t] = remaining_cover[x][t + 1] + (1 if lo <= x < hi else 0)
    out = []
    chosen = []

    def feasible(t: int) -> bool:
        for x in range(len(target)):
            if cover[x] > target[x] or cover[x] + remaining_cover[x][t] < target[x]:
                return False
        return True

    def search(t: int):
        if t == len(cands):
            if cover == target:
                out.append(TieDiagram(chosen))
            return
        lo, hi, z, a = cands[t]
        for take in (False, True):
            if take:
                for x in range(lo, hi):
                    cover[x] += 1
                chosen.append((z, a))
            if feasible(t + 1):
                search(t + 1)
            if take:
                for x in range(lo, hi):
                    cover[x] -= 1
                chosen.pop()

    if feasible(0):
        search(0)
    out.sort(key=TieDiagram.sorted)
    return out


def tie_to_bct(D: BraneDiagram, T: TieDiagram) -> BinaryMatrix:
    if not is_valid_tie_diagram(D, T):
        raise ValueError("not a tie diagram of this brane diagram")
    ns5, d5 = D.ns5_positions, D.d5_positions
    rows = []
    for z, pz in enumerate(ns5, 1):
        row = []
        for a, pa in enumerate(d5, 1):
            tied = (z, a) in T.ties
            row.append(1 if tied == (pz < pa) else 0)
        rows.append(row)
    return BinaryMatrix.from_rows(rows)


def bct_to_tie(D: BraneDiagram, M: BinaryMatrix) -> TieDiagram:
    ns5, d5 = D.ns5_positions, D.d5_positions
    if M.shape != (len(ns5), len(d5)) or M.margins != charges(D):
        raise ValueError(f"matrix margins {M.margins} differ from the charges {charges(D)}")
    ties = []
    for z, pz in enumerate(ns5, 1):
        for a, pa in enumerate(d5, 1):
            if M.entry(z, a) == (1 if pz < pa else 0):
                ties.append((z, a))
    T = TieDiagram(ties)
    if not is_valid_tie_diagram(D, T):
        raise ValueError("matrix does not correspond to a tie diagram")
    return T
