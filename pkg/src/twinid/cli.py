"""Command-line entry point: ``twinid <subcommand> ...``.

Exit codes: 0 success / valid, 1 invalid coloring or failed verification,
2 usage or parse error, 3 instance exceeds a search guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import constructions as cons
from .bounds import verify_bounds
from .coloring import (
    ColoringError,
    check,
    is_identifying_code,
    is_weighted_identifying,
    parse_code,
    parse_coloring,
    parse_set_coloring,
    parse_weights,
)
from .graph import Graph, GraphError, load_graph, write_edge_list
from .search import InstanceTooLarge, SearchLimits, chi, min_identifying_code, weighted_optimum
from .twins import quotient

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_gen_spec(spec: str) -> cons.LabeledGraph | Graph:
    """Inline generators: ``hp:P``, ``hext:A``, ``htt:P,T,t``, ``random:N,PROB,SEED``."""
    try:
        family, _, args = spec.partition(":")
        vals = args.split(",") if args else []
        if family == "hp":
            return cons.gen_Hp(int(vals[0]))
        if family == "hext":
            return cons.gen_Hext(int(vals[0]))
        if family == "htt":
            return cons.gen_HTt(int(vals[0]), int(vals[1]), int(vals[2]))
        if family == "random":
            return cons.gen_random(int(vals[0]), float(vals[1]), int(vals[2]))
        if family == "twins":
            return cons.random_twin_graph(int(vals[0]))
    except (IndexError, ValueError) as e:
        raise UsageError(f"bad generator spec {spec!r}: {e}") from None
    raise UsageError(f"unknown generator family {family!r}")


def _graph(args):
    if (args.graph is None) == (args.gen is None):
        raise UsageError("give exactly one of a graph file or --gen")
    if args.gen is not None:
        g = parse_gen_spec(args.gen)
        return g.graph if isinstance(g, cons.LabeledGraph) else g
    return load_graph(args.graph)


def _read(path: str) -> str:
    with open(path) as f:
        return f.read()


def _limits(args) -> SearchLimits:
    limits = SearchLimits()
    if getattr(args, "max_n", None) is not None:
        limits = SearchLimits(args.max_n, args.max_n, args.max_n)
    return limits


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.format == "json" else text)


def cmd_quotient(args) -> int:
    g = _graph(args)
    q = quotient(g)
    part = q.partition.to_json()
    if args.format == "json":
        print(json.dumps({**part, "quotient": write_edge_list(q.quotient)}))
    else:
        print(json.dumps(part))
        print(write_edge_list(q.quotient))
    return EXIT_OK


def cmd_check(args) -> int:
    g = _graph(args)
    if args.variant == "idcode":
        if not args.code:
            raise UsageError("--code is required for variant idcode")
        res = is_identifying_code(g, parse_code(_read(args.code), g.n), dominating=args.dominating)
    elif args.variant == "weighted":
        if not (args.coloring and args.weights):
            raise UsageError("--coloring and --weights are required for variant weighted")
        w = parse_weights(_read(args.weights), g.n)
        res = is_weighted_identifying(g, parse_set_coloring(_read(args.coloring), g.n, w))
    else:
        if not args.coloring:
            raise UsageError("--coloring is required")
        res = check(g, parse_coloring(_read(args.coloring), g.n), args.variant)
    payload = {"valid": res.valid, "violations": [v.to_json() for v in res.violations]}
    lines = ["valid" if res else "invalid"]
    lines += [f"{v.kind} {' '.join(map(str, v.vertices))}" for v in res.violations]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if res else EXIT_INVALID


def _report_text(r) -> str:
    return f"{r.variant} optimum={r.optimum} proof={r.proof} nodes={r.nodes_explored}\nwitness {r.witness_json()}"


def cmd_solve(args) -> int:
    r = chi(_graph(args), args.variant, force=args.force, limits=_limits(args))
    _emit(args, r.to_json(), _report_text(r))
    return EXIT_OK


def cmd_idcode(args) -> int:
    r = min_identifying_code(_graph(args), force=args.force, dominating=args.dominating, limits=_limits(args))
    _emit(args, r.to_json(), _report_text(r))
    return EXIT_OK


def cmd_weighted(args) -> int:
    g = _graph(args)
    if args.weights:
        w = parse_weights(_read(args.weights), g.n)
    else:
        w = [args.uniform] * g.n
    r = weighted_optimum(g, w, force=args.force, limits=_limits(args))
    _emit(args, r.to_json(), _report_text(r))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "hp":
        lg = cons.gen_Hp(args.p)
    elif args.family == "hext":
        lg = cons.gen_Hext(args.a)
    elif args.family == "htt":
        lg = cons.gen_HTt(args.p, args.T, args.t)
    else:
        g = cons.gen_random(args.n, args.prob, args.seed)
        lg = cons.LabeledGraph(g, tuple(str(v) for v in range(g.n)), "random",
                               {"n": args.n, "prob": args.prob, "seed": args.seed})
    text = write_edge_list(lg.graph) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    if args.labels:
        with open(args.labels, "w") as f:
            json.dump(lg.to_json(), f, indent=2)
    return EXIT_OK


def _bounds_job(item):
    name, g, variants, force = item
    return name, [verify_bounds(g, v, force=force).to_json() for v in variants]


def cmd_verify_bounds(args) -> int:
    variants = [args.variant] if args.variant else ["id", "lid", "rlid"]
    items = []
    if args.corpus:
        for fname in sorted(os.listdir(args.corpus)):
            path = os.path.join(args.corpus, fname)
            if os.path.isfile(path):
                items.append((fname, load_graph(path), variants, args.force))
    elif args.seeds:
        lo, _, hi = args.seeds.partition(":")
        try:
            seeds = range(int(lo), int(hi))
        except ValueError:
            raise UsageError("--seeds expects START:STOP") from None
        items = [(f"seed={s}", cons.random_twin_graph(s, max_n=args.max_vertices), variants, args.force)
                 for s in seeds]
    else:
        items = [(args.graph or args.gen, _graph(args), variants, args.force)]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_bounds_job, items))
    else:
        results = [_bounds_job(it) for it in items]
    failures = 0
    for name, reports in results:
        for rep in reports:
            failures += not rep["satisfied"]
            if args.format == "json":
                print(json.dumps({"graph": name, **rep}))
            else:
                print(f"{name} {rep['variant']}: {rep['lower']} <= {rep['chi_G']} <= {rep['upper']}"
                      f" ok={rep['satisfied']} lower_tight={rep['lower_tight']} upper_tight={rep['upper_tight']}")
    total = sum(len(r) for _, r in results)
    summary = {"summary": {"graphs": len(results), "reports": total, "violations": failures}}
    print(json.dumps(summary) if args.format == "json" else f"{total} reports, {failures} violations")
    return EXIT_OK if failures == 0 else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twinid", description="Twin-aware identifying colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, help_, func, variant=None):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", nargs="?", help="edge-list file (.col files are read as DIMACS)")
        p.add_argument("--gen", help="inline generator: hp:P, hext:A, htt:P,T,t, random:N,PROB,SEED, twins:SEED")
        p.add_argument("--format", choices=["text", "json"], default="json")
        if variant is not None:
            p.add_argument("--variant", choices=variant, required=name != "verify-bounds")
        p.set_defaults(func=func)
        return p

    def guarded(p):
        p.add_argument("--force", action="store_true", help="ignore the instance-size guard")
        p.add_argument("--max-n", type=int, help="override the instance-size guard")

    graph_cmd("quotient", "twin partition and quotient graph", cmd_quotient)

    p = graph_cmd("check", "validate a coloring or code", cmd_check, ["id", "lid", "rlid", "idcode", "weighted"])
    p.add_argument("--coloring", help="coloring file ('v c' lines; 'v c1,c2' for weighted)")
    p.add_argument("--code", help="code file, one vertex per line")
    p.add_argument("--weights", help="capacity file ('v w' lines)")
    p.add_argument("--dominating", action="store_true", help="also require every vertex to see the code")

    guarded(graph_cmd("solve", "exact chi_id / chi_lid / chi_rlid", cmd_solve, ["id", "lid", "rlid"]))

    p = graph_cmd("idcode", "minimum twin-aware identifying code", cmd_idcode)
    guarded(p)
    p.add_argument("--dominating", action="store_true")

    p = graph_cmd("weighted", "optimal weighted-identifying coloring", cmd_weighted)
    guarded(p)
    p.add_argument("--weights", help="capacity file ('v w' lines)")
    p.add_argument("--uniform", type=int, default=1, help="capacity for every vertex when no file is given")

    p = graph_cmd("verify-bounds", "check the quotient bounds on one graph or a corpus", cmd_verify_bounds,
                  ["id", "lid", "rlid"])
    p.add_argument("--corpus", help="directory of graph files")
    p.add_argument("--seeds", help="seed range START:STOP of random graphs with planted twins")
    p.add_argument("--max-vertices", type=int, default=9)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--force", action="store_true")

    g = sub.add_parser("gen", help="generate a graph as an edge list")
    fam = g.add_subparsers(dest="family", required=True)
    hp = fam.add_parser("hp")
    hp.add_argument("--p", type=int, required=True)
    hx = fam.add_parser("hext")
    hx.add_argument("--a", type=int, required=True)
    ht = fam.add_parser("htt")
    ht.add_argument("--p", type=int, required=True)
    ht.add_argument("--T", type=int, required=True)
    ht.add_argument("--t", type=int, required=True)
    rd = fam.add_parser("random")
    rd.add_argument("--n", type=int, required=True)
    rd.add_argument("--prob", type=float, required=True)
    rd.add_argument("--seed", type=int, required=True)
    for p in (hp, hx, ht, rd):
        p.add_argument("--out", help="write the edge list here instead of stdout")
        p.add_argument("--labels", help="write a JSON label sidecar here")
        p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except InstanceTooLarge as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (UsageError, GraphError, ColoringError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
