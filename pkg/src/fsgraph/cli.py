"""Command-line front end.

Graph arguments take a file (text ``n`` + ``u v`` lines, or JSON) or a
shorthand ``family:n[,m]``; an existing file of that name wins.
Exit codes: 2 usage, 3 bad input, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import os
import sys
from dataclasses import replace

from . import config
from .config import BudgetExceeded, FsError
from .fs_core import FsContext, from_word, to_word
from .graph_core import complement, load_graph

EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 2, 3, 4


def _emit(args, obj, text=None):
    if args.json or text is None:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _ctx(args):
    return FsContext(load_graph(args.x), load_graph(args.y))


# ---------------------------------------------------------------- subcommands

def cmd_explore(args):
    from .explorer import explore_report
    rep = explore_report(_ctx(args), threads=args.threads, with_girth=not args.no_girth)
    lines = [f"connected: {rep['connected']}"]
    lines += [f"component size={c['size']} diameter={c['diameter']} cycle={c['is_cycle']}"
              for c in rep["components"]]
    if "girth" in rep:
        lines.append(f"girth: {rep['girth']}")
    _emit(args, rep, "\n".join(lines))


def cmd_diameter(args):
    from .explorer import component_diameter, diameter_two_sweep, max_component_diameter
    ctx = _ctx(args)
    if args.sigma is None:
        d = max_component_diameter(ctx, threads=args.threads)
        exact = True
    else:
        sigma = from_word(args.sigma, ctx.n)
        exact = not args.two_sweep
        d = component_diameter(ctx, sigma, args.threads) if exact else diameter_two_sweep(ctx, sigma)
    _emit(args, {"diameter": d, "exact": exact}, str(d))


def cmd_girth(args):
    from .explorer import fs_girth
    from .girth_probe import star_seeds
    ctx = _ctx(args)
    Y = ctx.Y
    is_star = ctx.n >= 3 and Y.m == ctx.n - 1 and Y.degree(0) == ctx.n - 1
    g = fs_girth(ctx, seeds=star_seeds(ctx.n) if is_star else None)
    g = None if g == math.inf else int(g)
    _emit(args, {"girth": g}, "inf" if g is None else str(g))


def cmd_orient(args):
    from .orientations import (comparable_pairs, double_flip_classes, flip_classes,
                               linear_extensions, orientation_from)
    Y = load_graph(args.y)
    G = complement(Y)
    if args.classes:
        parts = flip_classes(G) if args.classes == "flip" else double_flip_classes(G)
        sizes = [len(p) for p in parts]
        _emit(args, {"class_count": len(parts), "sizes": sizes},
              f"{len(parts)} classes, sizes {sizes}")
        return
    sigma = from_word(args.sigma, Y.n) if args.sigma else tuple(range(Y.n))
    alpha = orientation_from(sigma, G)
    rep = {"arcs": [list(a) for a in alpha.arcs()], "sources": alpha.sources(),
           "sinks": alpha.sinks(), "comparable_pairs": comparable_pairs(alpha),
           "linear_extensions": len(linear_extensions(alpha))}
    _emit(args, rep, "\n".join(f"{k}: {v}" for k, v in rep.items()))


def _route(args, solver):
    log = logging.getLogger("fsgraph")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    if args.trace:
        log.addHandler(handler)
        log.setLevel(logging.INFO)
    try:
        Y = load_graph(args.y)
        seq = solver(Y, from_word(args.sigma, Y.n), from_word(args.tau, Y.n), trace=args.trace)
    finally:
        log.removeHandler(handler)
    _emit(args, json.loads(seq.to_json()), seq.to_json())


def cmd_sort(args):
    from .solvers import path_sort
    _route(args, path_sort)


def cmd_route(args):
    from .solvers import cycle_route
    _route(args, cycle_route)


def cmd_construct(args):
    from . import construction as C
    lc = C.build(args.L)
    if args.emit == "graphs":
        print(C.graphs_json(lc))
    elif args.emit == "sigma-s":
        print(to_word(lc.sigma_s))
    else:
        level = args.level or lc.L
        out = sys.stdout
        prog = C.l_extraction_program(lc, level, args.eta, store=False,
                                      sink=lambda e: out.write(f"{e[0]} {e[1]}\n"))
        print(json.dumps({"length": prog.length, "checkpoints": prog.checkpoints}),
              file=sys.stderr)


def cmd_girth_probe(args):
    from .girth_probe import conjecture_probe
    rep = conjecture_probe(load_graph(args.graph), budget=args.budget)
    print(json.dumps(rep, sort_keys=True))


def cmd_chain(args):
    from . import markov
    ctx = FsContext(load_graph(args.graph_x), load_graph(args.graph_y))
    start = from_word(args.start, ctx.n) if args.start else tuple(range(ctx.n))
    w = csv.writer(sys.stdout, lineterminator="\n")
    if args.tv:
        comp, P = markov.component_matrix(ctx, start)
        ts = list(range(args.tv + 1))
        w.writerow(["t", "tv"])
        for t, d in zip(ts, markov.tv_curve(P, ts)):
            w.writerow([t, f"{d:.12g}"])
        return
    state = markov.make_chain(ctx, start, seed=args.seed)
    w.writerow(["step", "friendly_pairs", "moved", "configuration"])
    w.writerow([0, len(ctx.friendly_edges(start)), 0, to_word(start)])
    for t in range(1, args.steps + 1):
        prev = state.current
        markov.step(state)
        if t % args.every == 0 or t == args.steps:
            w.writerow([t, len(ctx.friendly_edges(state.current)),
                        int(prev != state.current), to_word(state.current)])


def cmd_repro(args):
    from .acceptance import run_suite
    results = run_suite(slow=args.slow, out=sys.stdout)
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------- parser

def build_parser():
    def common(suppress):
        c = argparse.ArgumentParser(add_help=False)
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        c.add_argument("--json", action="store_true", default=d(False),
                       help="machine-readable output")
        c.add_argument("--threads", type=int, default=d(os.cpu_count()),
                       help="explorer threads (default: all cores)")
        c.add_argument("--config", default=d(None), help="budget file of key = value lines")
        c.add_argument("--seed", type=int, default=d(0))
        return c

    # options may come before or after the subcommand; subparser copies
    # default to SUPPRESS so they never clobber a value given earlier
    p = argparse.ArgumentParser(prog="fsgraph", description=__doc__.splitlines()[0],
                                parents=[common(False)])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common(True)], help=help_)
        sp.set_defaults(func=fn)
        return sp

    for name, fn, h in (("explore", cmd_explore, "components, diameters, girth"),
                        ("diameter", cmd_diameter, "largest component diameter"),
                        ("girth", cmd_girth, "girth of FS(X, Y)")):
        sp = add(name, fn, h)
        sp.add_argument("--x", required=True)
        sp.add_argument("--y", required=True)
        if name == "explore":
            sp.add_argument("--no-girth", action="store_true")
        if name == "diameter":
            sp.add_argument("--sigma", help="only the component of this configuration")
            sp.add_argument("--two-sweep", action="store_true",
                            help="lower bound by double BFS sweep (not exact)")

    sp = add("orient", cmd_orient, "acyclic orientation of complement(Y) from sigma")
    sp.add_argument("--y", required=True)
    sp.add_argument("--sigma")
    sp.add_argument("--classes", choices=["flip", "double"])

    for name, fn, h in (("sort", cmd_sort, "inversion-optimal route on Path_n"),
                        ("route", cmd_route, "double-flip route on Cycle_n")):
        sp = add(name, fn, h)
        sp.add_argument("--y", required=True)
        sp.add_argument("--sigma", required=True)
        sp.add_argument("--tau", required=True)
        sp.add_argument("--trace", action="store_true")

    sp = add("construct", cmd_construct, "layered large-diameter construction")
    sp.add_argument("--L", type=int, required=True)
    sp.add_argument("--emit", choices=["graphs", "sigma-s", "program"], default="graphs")
    sp.add_argument("--level", type=int)
    sp.add_argument("--eta", type=int, default=1)

    sp = add("girth-probe", cmd_girth_probe, "girth of FS(X, Star_n) against candidate walks")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--budget", type=int)

    sp = add("chain", cmd_chain, "lazy Markov chain trajectory or TV table (CSV)")
    sp.add_argument("--graph-x", required=True)
    sp.add_argument("--graph-y", required=True)
    sp.add_argument("--steps", type=int, default=100)
    sp.add_argument("--every", type=int, default=1, help="row every k steps")
    sp.add_argument("--start")
    sp.add_argument("--tv", type=int, metavar="T", help="exact TV-vs-t table up to T instead")

    sp = add("repro", cmd_repro, "reproduce a result table")
    sp.add_argument("--suite", choices=["acceptance"], default="acceptance")
    sp.add_argument("--slow", action="store_true")
    return p


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        budget = config.load_budget(args.config)
        config.set_budget(replace(budget))
        code = args.func(args)
        return code or 0
    except BudgetExceeded as exc:
        print(f"fsgraph: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FsError, OSError, ValueError) as exc:
        print(f"fsgraph: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


def load_schema(name):
    """A shipped JSON schema for ``--json`` output, by file stem."""
    from importlib.resources import files
    return json.loads(files("fsgraph").joinpath("schemas", f"{name}.json").read_text())
