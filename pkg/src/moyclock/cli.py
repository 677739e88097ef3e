"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 theorem violation.  A theorem
violation also writes a witness file (graph JSON plus the offending data)
so the case can be replayed and reported.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from typing import List, Optional

from .clock import LOCAL, ClockAnalysis
from .crowell import (
    PDFormatError,
    compare,
    crowell_alexander,
    crowell_graph,
    crowell_trees,
    load_pd,
    singular_from_pd,
)
from .errors import TheoremViolation
from .generate import generate
from .kauffman import alexander_statesum
from .laurent import render
from .plane_graph import GraphFormatError, PlaneGraph
from .spanning import TreeSpace, alexander_matrix_tree, alexander_spanning


def _load_graph(path: str) -> PlaneGraph:
    g = PlaneGraph.load(path)
    report = g.validate()
    if not report.ok:
        raise GraphFormatError(f"invalid graph:\n{report}")
    return g


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        print(text)


def _cmd_validate(args) -> int:
    try:
        g = PlaneGraph.load(args.file)
    except GraphFormatError as exc:
        _emit(args, f"INVALID: {exc}", {"ok": False, "error": str(exc)})
        return 1
    report = g.validate()
    payload = {
        "ok": report.ok,
        "checks": [
            {"name": n, "ok": ok, "detail": d} for n, ok, d in report.checks
        ],
    }
    if report.ok:
        _emit(args, "OK", payload)
        return 0
    _emit(args, str(report), payload)
    return 1


def _alexander_all(g: PlaneGraph) -> dict:
    gp = g.reduce_to_trivial()
    return {
        "statesum": alexander_statesum(g),
        "spanning": alexander_spanning(gp),
        "matrixtree": alexander_matrix_tree(gp),
    }


def _cmd_alexander(args) -> int:
    g = _load_graph(args.file)
    if args.method == "all":
        polys = _alexander_all(g)
        vals = list(polys.values())
        if not (vals[0].doteq(vals[1]) and vals[1].doteq(vals[2])):
            raise TheoremViolation(
                "state sum, spanning model and matrix-tree disagree",
                {
                    "graph": g.to_json_dict(),
                    "results": {k: render(v) for k, v in polys.items()},
                },
            )
        delta = vals[0]
    elif args.method == "statesum":
        delta = alexander_statesum(g)
    elif args.method == "spanning":
        delta = alexander_spanning(g.reduce_to_trivial())
    else:
        delta = alexander_matrix_tree(g.reduce_to_trivial())
    _emit(args, render(delta), {"method": args.method, "delta": render(delta)})
    return 0


def _cmd_trees(args) -> int:
    g = _load_graph(args.file).reduce_to_trivial()
    space = TreeSpace(g)
    points = sorted(space.enumerate_trees())
    lines = [f"{','.join(map(str, p))} |{space.norm(p)}|" for p in points]
    _emit(
        args,
        "\n".join(lines),
        {"trees": [{"point": list(p), "norm": space.norm(p)} for p in points]},
    )
    return 0


def _moves_of(analysis: ClockAnalysis):
    seen = set()
    for p in sorted(analysis.space.enumerate_trees()):
        for mv in analysis.neighbors(p):
            pair = tuple(sorted((mv.from_point, mv.to_point)))
            if pair not in seen:
                seen.add(pair)
                yield mv


def _cmd_clock_graph(args) -> int:
    g = _load_graph(args.file).reduce_to_trivial()
    analysis = ClockAnalysis(g)
    moves = list(_moves_of(analysis))
    if args.dot:
        def node(p):
            return '"(' + ",".join(map(str, p)) + ')"'

        lines = ["graph clock {"]
        for p in sorted(analysis.space.enumerate_trees()):
            lines.append(f"  {node(p)};")
        for mv in moves:
            style = (
                "color=red, style=solid"
                if mv.kind == LOCAL
                else "color=blue, style=dashed"
            )
            lines.append(f"  {node(mv.from_point)} -- {node(mv.to_point)} [{style}];")
        lines.append("}")
        print("\n".join(lines))
        return 0
    payload = {
        "moves": [
            {
                "from": list(mv.from_point),
                "to": list(mv.to_point),
                "kind": mv.kind,
                "vertex": mv.vertex,
            }
            for mv in moves
        ]
    }
    text = "\n".join(
        f"{','.join(map(str, mv.from_point))} -> {','.join(map(str, mv.to_point))}"
        f"  {mv.kind}  vertex {mv.vertex}"
        for mv in moves
    )
    _emit(args, text, payload)
    return 0


def _cmd_rectangles(args) -> int:
    g = _load_graph(args.file).reduce_to_trivial()
    analysis = ClockAnalysis(g)
    rects = analysis.maximal_rectangles()
    lines = []
    payload = []
    for r in rects:
        bounds = "x".join(f"[{lo}..{hi}]" for lo, hi in zip(r.lower, r.upper))
        contribution = r.contribution()
        lines.append(
            f"{bounds} size={len(r.members)} A={r.average_norm} "
            f"contribution={render(contribution)}"
        )
        payload.append(
            {
                "lower": list(r.lower),
                "upper": list(r.upper),
                "size": len(r.members),
                "average_norm": str(r.average_norm),
                "contribution": render(contribution),
            }
        )
    _emit(args, "\n".join(lines), {"rectangles": payload})
    return 0


def _cmd_crowell(args) -> int:
    pd = load_pd(args.pd)
    cg = crowell_graph(pd)
    root = args.root if args.root is not None else min(cg.vertices)
    trees = crowell_trees(cg, root)
    delta = crowell_alexander(cg, root)
    lines = [
        f"{','.join(map(str, edges))} {render(w)}" for edges, w in trees
    ]
    lines.append(f"trees: {len(trees)}")
    lines.append(render(delta))
    _emit(
        args,
        "\n".join(lines),
        {
            "root": root,
            "trees": [
                {"edges": list(edges), "weight": render(w)} for edges, w in trees
            ],
            "delta": render(delta),
        },
    )
    return 0


def _cmd_compare(args) -> int:
    report = compare(load_pd(args.pd))
    verdict = "EQUAL" if report.equal else "UNEQUAL"
    text = (
        f"{verdict}\n"
        f"crowell:  {render(report.crowell_poly)}  "
        f"({report.crowell_tree_count} trees)\n"
        f"singular: {render(report.singular_poly)}  "
        f"({report.singular_tree_count} trees)"
    )
    _emit(
        args,
        text,
        {
            "equal": report.equal,
            "crowell": render(report.crowell_poly),
            "singular": render(report.singular_poly),
            "crowell_trees": report.crowell_tree_count,
            "singular_trees": report.singular_tree_count,
        },
    )
    return 0


def _cmd_reduce(args) -> int:
    g = _load_graph(args.file)
    print(g.reduce_to_trivial().to_json())
    return 0


def _cmd_gen(args) -> int:
    if args.size < 1:
        raise GraphFormatError("size must be >= 1")
    print(generate(args.seed, args.size).to_json())
    return 0


def _cmd_singular(args) -> int:
    g = singular_from_pd(load_pd(args.pd))
    print(g.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moyclock",
        description="Alexander polynomials and clock moves of plane MOY graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=["text", "json"], default="text")
        return p

    p = add("validate", _cmd_validate, help="check a graph file")
    p.add_argument("file")

    p = add("alexander", _cmd_alexander, help="compute the Alexander polynomial")
    p.add_argument("file")
    p.add_argument(
        "--method",
        choices=["statesum", "spanning", "matrixtree", "all"],
        default="all",
    )

    p = add("trees", _cmd_trees, help="list spanning-tree lattice points")
    p.add_argument("file")

    p = add("clock-graph", _cmd_clock_graph, help="the clock-move graph")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit graphviz DOT")

    p = add("rectangles", _cmd_rectangles, help="maximal local rectangles")
    p.add_argument("file")

    p = add("crowell", _cmd_crowell, help="Crowell tree sum of an alternating knot")
    p.add_argument("pd")
    p.add_argument("--root", type=int, default=None)

    p = add("compare", _cmd_compare, help="Crowell vs singular MOY on one diagram")
    p.add_argument("pd")

    p = add("reduce", _cmd_reduce, help="replace colored edges by parallel ones")
    p.add_argument("file")

    p = add("singular", _cmd_singular, help="singular projection of a PD code")
    p.add_argument("pd")

    p = add("gen", _cmd_gen, help="generate a random valid fixture")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--size", type=int, required=True)

    return parser


def _write_witness(exc: TheoremViolation) -> str:
    fd, path = tempfile.mkstemp(
        prefix="moyclock-witness-", suffix=".json", dir=os.getcwd()
    )
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        json.dump({"check": exc.check, "witness": exc.witness}, fh, indent=1)
    return path


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFormatError, PDFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TheoremViolation as exc:
        path = _write_witness(exc)
        print(f"theorem violation: {exc.check}", file=sys.stderr)
        print(f"witness written to {path}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
