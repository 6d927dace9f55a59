"""
Exhaustive verification sweeps over margin pairs.

For every total ``t <= max_total`` and every pair of compositions ``(r, c)``
of ``t`` the requested relations are built on BCT(r, c) and compared with
the first requested kind.  No symmetry quotient is taken.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .curves import CocharacterSpec, geometric_relation
from .enumeration import BctFamily, compositions, enumerate_bcts
from .matrix import BinaryMatrix
from .orders import KINDS, FiniteRelation, bruhat_relation, compare_relations, secondary_relation

__all__ = ["SweepConfig", "PairReport", "VerificationReport", "build_relation",
           "margin_pairs", "run_sweep", "check_pair"]


@dataclass(frozen=True)
class SweepConfig:
    max_total: int
    kinds: tuple[str, ...] = ("secondary", "geometric")
    sigma: Optional[tuple[int, ...]] = None
    report_limit: int = 32

    def __post_init__(self):
        if self.max_total < 1:
            raise ValueError("max_total must be at least 1")
        if self.report_limit < 1:
            raise ValueError("report_limit must be at least 1")
        unknown = set(self.kinds) - set(KINDS)
        if unknown or len(self.kinds) < 1:
            raise ValueError(f"unknown relation kinds {sorted(unknown)}")


def build_relation(kind: str, family: BctFamily, sigma: Optional[Sequence[int]] = None) -> FiniteRelation:
    if kind == "bruhat":
        return bruhat_relation(family)
    if kind == "secondary":
        return secondary_relation(family)
    if kind == "geometric":
        spec = CocharacterSpec(tuple(sigma)) if sigma is not None else None
        return geometric_relation(family, spec)
    raise ValueError(f"unknown relation kind {kind!r}")


def margin_pairs(max_total: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for t in range(1, max_total + 1):
        for r in compositions(t):
            for c in compositions(t):
                yield r, c


@dataclass
class PairReport:
    r: tuple[int, ...]
    c: tuple[int, ...]
    size: int
    relation_sizes: dict
    equal: dict
    discrepancies: dict
    seconds: float

    def to_json(self) -> dict:
        return {
            "r": list(self.r), "c": list(self.c), "size": self.size,
            "relation_sizes": self.relation_sizes, "equal": self.equal,
            "discrepancies": self.discrepancies, "seconds": round(self.seconds, 6),
        }


@dataclass
class VerificationReport:
    config: SweepConfig
    pairs: list[PairReport] = field(default_factory=list)

    @property
    def all_equal(self) -> bool:
        return all(all(p.equal.values()) for p in self.pairs)

    @property
    def failures(self) -> list[PairReport]:
        return [p for p in self.pairs if not all(p.equal.values())]

    def to_json(self, timing: bool = True) -> dict:
        rows = [p.to_json() for p in self.pairs]
        if not timing:
            for row in rows:
                row.pop("seconds")
        return {
            "max_total": self.config.max_total,
            "kinds": list(self.config.kinds),
            "sigma": list(self.config.sigma) if self.config.sigma else None,
            "all_equal": self.all_equal,
            "pair_count": len(self.pairs),
            "member_count": sum(p.size for p in self.pairs),
            "pairs": rows,
        }


def _check_family(family: BctFamily, config: SweepConfig) -> PairReport:
    start = time.perf_counter()
    sigma = config.sigma
    if sigma is not None and len(sigma) != family.n:
        sigma = None
    rels = {kind: build_relation(kind, family, sigma) for kind in config.kinds}
    base = config.kinds[0]
    equal, disc = {}, {}
    for kind in config.kinds[1:]:
        cmp = compare_relations(rels[base], rels[kind], config.report_limit)
        key = f"{base}=={kind}"
        equal[key] = cmp.equal
        if not cmp.equal:
            disc[key] = cmp.to_json()
    return PairReport(family.margins.r, family.margins.c, len(family),
                      {k: v.size for k, v in rels.items()}, equal, disc,
                      time.perf_counter() - start)


def run_sweep(config: SweepConfig) -> VerificationReport:
    report = VerificationReport(config)
    for r, c in margin_pairs(config.max_total):
        family = enumerate_bcts((r, c))
        if len(family) == 0:
            continue
        report.pairs.append(_check_family(family, config))
    return report


def check_pair(A: BinaryMatrix, B: BinaryMatrix, kinds: Sequence[str],
               sigma: Optional[Sequence[int]] = None) -> dict:
    """Whether ``A <= B`` under each requested relation."""
    if A.shape != B.shape or A.margins != B.margins:
        raise ValueError(f"margin mismatch: {A.margins} vs {B.margins}")
    family = enumerate_bcts(A.margins)
    a, b = family.index[A], family.index[B]
    out = {}
    for kind in kinds:
        rel = build_relation(kind, family, sigma)
        out[kind] = rel.leq(a, b)
    return out
