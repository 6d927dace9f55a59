"""DOT, JSON and CSV renderings.  Output is deterministic for fixed input."""

from __future__ import annotations

import csv
import io
import json

from .curves import CurveDigraph
from .enumeration import BctFamily
from .orders import FiniteRelation, HasseDiagram

__all__ = ["to_dot", "to_json", "to_csv", "render", "FORMATS"]

FORMATS = ("dot", "json", "csv")


def _node_lines(family: BctFamily) -> list[str]:
    return [f'  n{a} [label="{M.bitstring}"];' for a, M in enumerate(family.members)]


def to_dot(obj) -> str:
    if isinstance(obj, HasseDiagram):
        lines = ["digraph hasse {", "  rankdir=TB;"]
        lines += _node_lines(obj.family)
        lines += [f"  n{a} -> n{b};" for a, b in obj.sorted_edges()]
    elif isinstance(obj, CurveDigraph):
        lines = ["digraph curves {", "  rankdir=TB;"]
        lines += _node_lines(obj.family)
        for arc in sorted(obj.arcs, key=lambda x: (x.source, x.block)):
            lines.append(f'  n{arc.source} -> n{arc.target} [label="{arc.weight}"];')
    elif isinstance(obj, FiniteRelation):
        lines = [f"digraph {obj.kind} {{"]
        lines += _node_lines(obj.family)
        lines += [f"  n{a} -> n{b};" for a, b in obj.pairs() if a != b]
    elif isinstance(obj, BctFamily):
        lines = ["graph family {"]
        lines += _node_lines(obj)
    else:
        raise TypeError(f"cannot render {type(obj).__name__} as DOT")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_data(obj) -> dict:
    if isinstance(obj, BctFamily):
        return obj.to_json()
    if isinstance(obj, HasseDiagram):
        data = obj.family.to_json()
        data["cover_edges"] = [list(e) for e in obj.sorted_edges()]
        return data
    if isinstance(obj, FiniteRelation):
        data = obj.family.to_json()
        data["kind"] = obj.kind
        data["pairs"] = [[a, b] for a, b in obj.pairs()]
        return data
    if isinstance(obj, CurveDigraph):
        data = obj.family.to_json()
        data["sigma"] = list(obj.spec.sigma)
        data["arcs"] = [
            {"source": arc.source, "target": arc.target, "block": arc.block.to_json(),
             "weight": {"q1": arc.weight.q1, "q0": arc.weight.q0, "hbar": arc.weight.hbar_exp},
             "pencil_dim": arc.pencil_dim}
            for arc in sorted(obj.arcs, key=lambda x: (x.source, x.block))
        ]
        if obj.moves:
            data["moves"] = [
                {"source": mv.source, "target": mv.target, "block": mv.block.to_json(),
                 "components": [blk.to_json() for blk in mv.components],
                 "weight": {"q1": mv.weight.q1, "q0": mv.weight.q0, "hbar": mv.weight.hbar_exp},
                 "pencil_dim": mv.pencil_dim}
                for mv in obj.moves
            ]
        return data
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def to_json(obj) -> str:
    return json.dumps(to_data(obj), sort_keys=False) + "\n"


def to_csv(obj) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if isinstance(obj, BctFamily):
        writer.writerow(["index", "bits"])
        writer.writerows([a, M.bitstring] for a, M in enumerate(obj.members))
    elif isinstance(obj, HasseDiagram):
        writer.writerow(["upper", "lower"])
        writer.writerows(obj.sorted_edges())
    elif isinstance(obj, FiniteRelation):
        writer.writerow(["upper", "lower"])
        writer.writerows(obj.pairs())
    elif isinstance(obj, CurveDigraph):
        writer.writerow(["source", "target", "k", "l", "i", "j", "q1", "q0", "hbar", "pencil_dim"])
        for arc in sorted(obj.arcs, key=lambda x: (x.source, x.block)):
            b, w = arc.block, arc.weight
            writer.writerow([arc.source, arc.target, b.k, b.l, b.i, b.j, w.q1, w.q0, w.hbar_exp, arc.pencil_dim])
    else:
        raise TypeError(f"cannot render {type(obj).__name__} as CSV")
    return buf.getvalue()


def render(obj, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(obj)
    if fmt == "json":
        return to_json(obj)
    if fmt == "csv":
        return to_csv(obj)
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
