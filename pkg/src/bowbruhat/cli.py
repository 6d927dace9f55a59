"""
Command-line front end.

Exit codes: 0 on success (or when every requested equality holds), 1 when a
comparison finds a difference or a predicate is false, 2 on invalid input.
Standard output is deterministic; timings go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager

from . import brane as br
from .curves import CocharacterSpec, curve_digraph
from .enumeration import count_bcts, enumerate_bcts, gale_ryser_feasible
from .export import FORMATS, render
from .matrix import BinaryMatrix, MarginPair
from .orders import KINDS, compare_relations, hasse, secondary_hasse_direct
from .resolution import ChargeResolution, column_resolutions, maximal_resolutions
from .sweep import SweepConfig, build_relation, check_pair, run_sweep

EXIT_OK, EXIT_DIFF, EXIT_INVALID = 0, 1, 2


class InputError(ValueError):
    pass


# argument parsing helpers ------------------------------------------------

def int_vector(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"expected non-negative integers, got {text!r}")
    return values


def permutation(text: str) -> tuple[int, ...]:
    values = int_vector(text)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise argparse.ArgumentTypeError(f"{text!r} is not a permutation of 1..{len(values)}")
    return values


def kind_list(text: str) -> tuple[str, ...]:
    kinds = tuple(k.strip() for k in text.split(",") if k.strip())
    bad = [k for k in kinds if k not in KINDS]
    if bad or not kinds:
        raise argparse.ArgumentTypeError(f"unknown kinds {bad}; choose from {', '.join(KINDS)}")
    return kinds


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}")


def read_matrix(path: str) -> BinaryMatrix:
    return BinaryMatrix.parse(read_text(path))


def margins_of(args) -> MarginPair:
    return MarginPair(args.r, args.c)


def emit(text: str):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def emit_json(data):
    emit(json.dumps(data))


@contextmanager
def timed(label: str, size=None):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    size_part = f"family size {size()}, " if size else ""
    print(f"{label}: {size_part}elapsed {elapsed:.3f}s", file=sys.stderr)


def _spec(args, family):
    if getattr(args, "sigma", None) is None:
        return None
    if len(args.sigma) != family.n:
        raise InputError(f"sigma has length {len(args.sigma)} but there are {family.n} columns")
    return CocharacterSpec(args.sigma)


def _family(args):
    m = margins_of(args)
    family = enumerate_bcts(m)
    return family


# subcommands -------------------------------------------------------------

def cmd_feasible(args) -> int:
    ok = gale_ryser_feasible(margins_of(args))
    emit("feasible" if ok else "infeasible")
    return EXIT_OK if ok else EXIT_DIFF


def cmd_count(args) -> int:
    emit(str(count_bcts(margins_of(args))))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    holder = {}
    with timed("enumerate", lambda: len(holder["family"])):
        holder["family"] = _family(args)
    emit(render(holder["family"], args.format))
    return EXIT_OK


def _relation(args):
    family = _family(args)
    sigma = _spec(args, family)
    return build_relation(args.kind, family, sigma.sigma if sigma else None)


def cmd_order(args) -> int:
    holder = {}
    with timed(f"order {args.kind}", lambda: len(holder["rel"].family)):
        holder["rel"] = _relation(args)
    emit(render(holder["rel"], args.format))
    return EXIT_OK


def cmd_hasse(args) -> int:
    holder = {}
    with timed(f"hasse {args.kind}", lambda: len(holder["h"].family)):
        if args.direct:
            if args.kind != "secondary":
                raise InputError("--direct is only available for the secondary order")
            holder["h"] = secondary_hasse_direct(_family(args))
        else:
            holder["h"] = hasse(_relation(args))
    emit(render(holder["h"], args.format))
    return EXIT_OK


def cmd_curves(args) -> int:
    holder = {}
    with timed("curves", lambda: len(holder["g"].family)):
        family = _family(args)
        holder["g"] = curve_digraph(family, _spec(args, family), with_moves=args.moves)
    emit(render(holder["g"], args.format))
    return EXIT_OK


def cmd_compare(args) -> int:
    if len(args.kinds) != 2:
        raise InputError("compare needs exactly two kinds")
    family = _family(args)
    sigma = _spec(args, family)
    sigma = sigma.sigma if sigma else None
    with timed("compare", lambda: len(family)):
        rel1 = build_relation(args.kinds[0], family, sigma)
        rel2 = build_relation(args.kinds[1], family, sigma)
        cmp = compare_relations(rel1, rel2, args.report_limit)
    out = {"r": list(family.margins.r), "c": list(family.margins.c), "size": len(family),
           "kinds": list(args.kinds)}
    out.update(cmp.to_json())
    emit_json(out)
    return EXIT_OK if cmp.equal else EXIT_DIFF


def cmd_verify(args) -> int:
    if args.pair:
        A, B = (read_matrix(p) for p in args.pair)
        with timed("verify --pair"):
            result = check_pair(A, B, args.kinds, args.sigma)
        emit_json({"kinds": list(args.kinds), "leq": result})
        return EXIT_OK if len(set(result.values())) <= 1 else EXIT_DIFF
    if args.max_total is None:
        raise InputError("verify needs --max-total or --pair")
    config = SweepConfig(args.max_total, args.kinds, args.sigma, args.report_limit)
    start = time.perf_counter()
    report = run_sweep(config)
    data = report.to_json(timing=args.timing)
    print(f"verify: {data['pair_count']} margin pairs, {data['member_count']} members, "
          f"elapsed {time.perf_counter() - start:.3f}s", file=sys.stderr)
    emit_json(data)
    return EXIT_OK if report.all_equal else EXIT_DIFF


def cmd_brane(args) -> int:
    op = args.brane_cmd
    if op == "separated":
        emit(br.format_diagram(br.separated_diagram(margins_of(args))))
        return EXIT_OK
    D = br.parse_diagram(args.diagram)
    if op == "charges":
        m = br.charges(D)
        emit_json({"r": list(m.r), "c": list(m.c)})
    elif op == "hw":
        emit(br.format_diagram(br.hw_step(D, args.pos, args.dir)))
    elif op == "ties":
        with timed("ties"):
            ties = br.enumerate_tie_diagrams(D)
        if args.list:
            emit_json([T.to_json() for T in ties])
        else:
            emit(str(len(ties)))
    elif op == "tie2bct":
        data = json.loads(read_text(args.ties))
        M = br.tie_to_bct(D, br.TieDiagram(data["ties"]))
        emit(M.to_text())
    elif op == "bct2tie":
        emit_json(br.bct_to_tie(D, read_matrix(args.matrix)).to_json())
    return EXIT_OK


def _emit_matrices(matrices, fmt: str):
    if fmt == "json":
        emit_json({"matrices": [M.to_list() for M in matrices]})
    else:
        emit("\n\n".join(M.to_text() for M in matrices))


def cmd_resolve(args) -> int:
    M = read_matrix(args.matrix)
    if args.maximal:
        _emit_matrices(maximal_resolutions(M), args.format)
        return EXIT_OK
    if args.column is None or args.split is None:
        raise InputError("resolve needs --column and --split, or --maximal")
    if len(args.split) != 2:
        raise InputError("--split takes two parts a,b")
    res = ChargeResolution(args.column, *args.split)
    _emit_matrices([R.matrix for R in column_resolutions(M, res)], args.format)
    return EXIT_OK


def cmd_export(args) -> int:
    family = _family(args)
    sigma = _spec(args, family)
    if args.object == "family":
        obj = family
    elif args.object == "hasse":
        obj = hasse(build_relation(args.kind, family, sigma.sigma if sigma else None))
    elif args.object == "order":
        obj = build_relation(args.kind, family, sigma.sigma if sigma else None)
    else:
        obj = curve_digraph(family, sigma, with_moves=args.moves)
    emit(render(obj, args.format))
    return EXIT_OK


# parser --------------------------------------------------------------------

def _add_margins(p, required=True):
    p.add_argument("-r", type=int_vector, required=required, help="row sums, e.g. 2,1,2")
    p.add_argument("-c", type=int_vector, required=required, help="column sums, e.g. 2,1,2")


def _add_format(p, default):
    p.add_argument("--format", choices=FORMATS, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bowbruhat",
                                     description="Bruhat-type orders on binary contingency tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("feasible", help="Gale-Ryser feasibility of the margins")
    _add_margins(p)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("count", help="number of tables with the given margins")
    _add_margins(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list every table in canonical order")
    _add_margins(p)
    _add_format(p, "json")
    p.set_defaults(func=cmd_enumerate)

    for name, func, default in (("order", cmd_order, "json"), ("hasse", cmd_hasse, "dot")):
        p = sub.add_parser(name, help=f"{name} of a relation on the family")
        _add_margins(p)
        p.add_argument("--kind", choices=KINDS, default="secondary")
        p.add_argument("--sigma", type=permutation)
        _add_format(p, default)
        if name == "hasse":
            p.add_argument("--direct", action="store_true",
                           help="secondary covers from the cover criterion, no closure")
        p.set_defaults(func=func)

    p = sub.add_parser("curves", help="directed compact-curve digraph")
    _add_margins(p)
    p.add_argument("--sigma", type=permutation)
    p.add_argument("--moves", action="store_true", help="include every block swap move")
    _add_format(p, "dot")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("compare", help="compare two relations on one family")
    _add_margins(p)
    p.add_argument("--kinds", type=kind_list, default=("secondary", "geometric"))
    p.add_argument("--sigma", type=permutation)
    p.add_argument("--report-limit", type=int, default=32)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="sweep all margin pairs, or test one pair of matrices")
    p.add_argument("--max-total", type=int)
    p.add_argument("--kinds", type=kind_list, default=("secondary", "geometric"))
    p.add_argument("--sigma", type=permutation)
    p.add_argument("--report-limit", type=int, default=32)
    p.add_argument("--pair", nargs=2, metavar=("FILE_A", "FILE_B"),
                   help="report whether A <= B under each kind")
    p.add_argument("--timing", action="store_true", help="include per-pair timings in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("brane", help="brane diagram calculus")
    bsub = p.add_subparsers(dest="brane_cmd", required=True)
    q = bsub.add_parser("charges")
    q.add_argument("diagram")
    q = bsub.add_parser("hw")
    q.add_argument("diagram")
    q.add_argument("--pos", type=int, required=True)
    q.add_argument("--dir", choices=("fwd", "bwd"), required=True)
    q = bsub.add_parser("separated")
    _add_margins(q)
    q = bsub.add_parser("ties")
    q.add_argument("diagram")
    group = q.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", default=True)
    group.add_argument("--list", action="store_true")
    q = bsub.add_parser("tie2bct")
    q.add_argument("diagram")
    q.add_argument("--ties", required=True, help='JSON file {"ties": [[z,a], ...]}')
    q = bsub.add_parser("bct2tie")
    q.add_argument("diagram")
    q.add_argument("--matrix", required=True)
    p.set_defaults(func=cmd_brane)

    p = sub.add_parser("resolve", help="column resolutions of a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--column", type=int)
    p.add_argument("--split", type=int_vector)
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("export", help="render a computed object")
    p.add_argument("object", choices=("family", "hasse", "order", "curves"))
    _add_margins(p)
    p.add_argument("--kind", choices=KINDS, default="secondary")
    p.add_argument("--sigma", type=permutation)
    p.add_argument("--moves", action="store_true")
    _add_format(p, "dot")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
