"""The acceptance table: one pass/fail line per criterion.

Shared by ``fsgraph repro --suite acceptance`` and tests/test_acceptance.py.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass
from functools import reduce
from itertools import combinations, permutations

import numpy as np
from scipy.sparse.csgraph import shortest_path

from . import construction as C
from . import markov
from .explorer import (_csr, components, eccentricities, fs_girth, is_connected_fs,
                       is_cycle_component)
from .fs_core import FsContext, fs_edge_count, neighbors, validate_sequence
from .girth_probe import (barbell_graph, barbell_of, barbell_walk, bowtie, cycle_walk,
                          star_seeds, walk_stats)
from .graph_core import SimpleGraph, all_graphs, complement, make_named
from .graph_core import components as graph_components
from .orientations import (acyclic_orientations, cycle_connectivity_predicate,
                           linear_extensions, orientation_from)
from .solvers import cycle_route, double_flip_skeleton


@dataclass
class Result:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} {self.key:>3}  {self.title}: {self.detail} ({self.seconds:.1f}s)"


def _timed(limit):
    def wrap(fn):
        def inner(*a, **kw):
            t0 = time.perf_counter()
            ok, detail = fn(*a, **kw)
            dt = time.perf_counter() - t0
            if limit is not None and dt > limit:
                ok, detail = False, f"{detail}; over the {limit}s limit"
            return ok, detail, dt
        inner.limit = limit
        return inner
    return wrap


# ---------------------------------------------------------------- 1-3 exhaustive diameters

def _max_diam(ctx):
    return max(int(eccentricities(ctx, comp).max()) for comp in components(ctx))


@_timed(60)
def c1_path_complete():
    got = {n: _max_diam(FsContext(make_named("path", n), make_named("complete", n)))
           for n in range(3, 8)}
    bad = {n: d for n, d in got.items() if d != math.comb(n, 2)}
    return not bad, f"diameters {got}" + (f", mismatches {bad}" if bad else "")


@_timed(120)
def c2_cycle_complete():
    got = {n: _max_diam(FsContext(make_named("cycle", n), make_named("complete", n)))
           for n in range(3, 8)}
    bad = {n: d for n, d in got.items() if d != n * n // 4}
    return not bad, f"diameters {got}" + (f", mismatches {bad}" if bad else "")


@_timed(120)
def c3_cycle_star():
    rows = []
    ok = True
    for n in range(3, 8):
        ctx = FsContext(make_named("cycle", n), make_named("star", n))
        comps = components(ctx)
        good = (len(comps) == math.factorial(n) // (n * (n - 1))
                and all(len(c) == n * (n - 1) and is_cycle_component(ctx, c) for c in comps))
        ok &= good
        rows.append(f"n={n}:{len(comps)}x{len(comps[0])}")
    return ok, " ".join(rows)


# ---------------------------------------------------------------- 4-6 structure theorems

@_timed(600)
def c4_connectivity():
    bad, total = 0, 0
    for n in (4, 5):
        X = make_named("cycle", n)
        for Y in all_graphs(n):
            total += 1
            bad += is_connected_fs(FsContext(X, Y)) != cycle_connectivity_predicate(Y)
    return bad == 0, f"{total} graphs, {bad} disagreements"


def _positions(comp):
    """(k, n) array: pos[i, y] = X-vertex of Y-vertex y in comp[i]."""
    arr = np.asarray(comp)
    pos = np.empty_like(arr)
    rows = np.arange(arr.shape[0])[:, None]
    pos[rows, arr] = np.arange(arr.shape[1])[None, :]
    return pos


def _inversion_matrix(comp):
    pos = _positions(comp)
    n = pos.shape[1]
    i, j = np.triu_indices(n, 1)
    S = (pos[:, i] < pos[:, j]).astype(np.int64)
    return S @ (1 - S).T + (1 - S) @ S.T


def _all_pairs(ctx, comp):
    return shortest_path(_csr(ctx, comp), method="D", directed=False, unweighted=True)


@_timed(600)
def c5_path_components():
    bad_comp, bad_dist, graphs, pairs = 0, 0, 0, 0
    for n in range(2, 6):
        X = make_named("path", n)
        for Y in all_graphs(n):
            graphs += 1
            ctx = FsContext(X, Y)
            comps = components(ctx)
            found = {frozenset(c) for c in comps}
            predicted = {frozenset(linear_extensions(a))
                         for a in acyclic_orientations(complement(Y))}
            bad_comp += found != predicted
            for comp in comps:
                D = _all_pairs(ctx, comp)
                bad_dist += int((D != _inversion_matrix(comp)).sum())
                pairs += len(comp) ** 2
    return bad_comp == 0 and bad_dist == 0, \
        f"{graphs} graphs, {pairs} ordered pairs, {bad_comp} component and {bad_dist} distance disagreements"


@_timed(600)
def c6_diameter_bounds():
    viol = {"path": 0, "cycle_small": 0, "cycle_gcd": 0}
    checked = {"path": 0, "cycle_small": 0, "cycle_gcd": 0}
    for n in range(3, 6):
        P, Cy = make_named("path", n), make_named("cycle", n)
        for Y in all_graphs(n):
            m = Y.m
            for comp in components(FsContext(P, Y)):
                checked["path"] += 1
                viol["path"] += int(eccentricities(FsContext(P, Y), comp).max()) > m
            small = any(Y.degree(v) == 0 for v in range(n)) or m <= n - 2
            sizes = [len(c) for c in graph_components(complement(Y))]
            coprime = reduce(math.gcd, sizes) == 1
            if not (small or coprime):
                continue
            ctx = FsContext(Cy, Y)
            for comp in components(ctx):
                d = int(eccentricities(ctx, comp).max())
                if small:
                    checked["cycle_small"] += 1
                    viol["cycle_small"] += d > m
                if coprime:
                    checked["cycle_gcd"] += 1
                    viol["cycle_gcd"] += d > 4 * n ** 3 + m
    return sum(viol.values()) == 0, f"components checked {checked}, violations {viol}"


# ---------------------------------------------------------------- 7 cycle routing

def _random_coprime_graph(rng, n):
    while True:
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.6]
        Y = SimpleGraph(n, edges)
        sizes = [len(c) for c in graph_components(complement(Y))]
        if reduce(math.gcd, sizes) == 1:
            return Y


def _random_walk_endpoint(ctx, sigma, rng, steps):
    for _ in range(steps):
        nb = neighbors(ctx, sigma)
        if not nb:
            break
        sigma = nb[int(rng.integers(len(nb)))]
    return sigma


@_timed(600)
def c7_cycle_route(instances=100, seed=7):
    rng = np.random.default_rng(seed)
    bad, worst = 0, 0.0
    for k in range(instances):
        n = 5 if k % 2 == 0 else 6
        Y = _random_coprime_graph(rng, n)
        X = make_named("cycle", n)
        ctx = FsContext(X, Y)
        sigma = tuple(int(v) for v in rng.permutation(n))
        tau = _random_walk_endpoint(ctx, sigma, rng, 200)
        seq = cycle_route(Y, sigma, tau)
        bound = 4 * n ** 3 + Y.m
        end = validate_sequence(ctx, seq)
        chain = double_flip_skeleton(Y, seq)
        ok = (end == tau and len(seq) <= bound
              and chain[-1] == orientation_from(tau, complement(Y)))
        bad += not ok
        worst = max(worst, len(seq) / bound)
    return bad == 0, f"{instances} instances, {bad} failures, max length/bound {worst:.3f}"


# ---------------------------------------------------------------- 8 construction

def _all_checkers_pass(lc, W):
    res = C.check_all(lc, W)
    return {k: int((~v).sum()) for k, v in res.items()}


@_timed(900)
def c8_construction(walk_steps=100_000, seed=2024):
    notes, ok = [], True
    sizes = {L: C.build(L).n for L in range(1, 6)}
    ok &= all(v == 58 * L + 2 for L, v in sizes.items())
    notes.append(f"sizes {list(sizes.values())}")
    runs = [("L1 eta1", C.build(1), 1, 1), ("L1 eta2", C.build(1), 1, 2),
            ("L2 lvl2", C.build(2), 2, 1)]
    for name, lc, level, eta in runs:
        prog = C.l_extraction_program(lc, level, eta)
        W = C.trajectory(lc, prog.program)          # raises on any invalid swap
        fails = _all_checkers_pass(lc, W)
        ok &= not any(fails.values())
        line = f"{name}: {prog.length} swaps, checker failures {sum(fails.values())}"
        if name == "L2 lvl2":
            chain = C.count_extraction_chain(lc, W, 1)
            ok &= chain >= C.CHAIN_BOUND
            line += f", level-1 chain {chain}"
        notes.append(line)
    for L in (1, 2):
        lc = C.build(L)
        W = C.random_walk(lc, walk_steps, seed=seed + L)
        fails = _all_checkers_pass(lc, W)
        ok &= not any(fails.values())
        notes.append(f"walk L={L}: {walk_steps} steps, checker failures {sum(fails.values())}")
    lb = all(C.lower_bound(L) == 25 ** (L - 1) for L in range(1, 11))
    ok &= lb
    notes.append(f"lower_bound ok={lb}")
    return ok, "; ".join(notes)


# ---------------------------------------------------------------- 9 girth

@_timed(600)
def c9_girth(slow=False):
    notes, ok = [], True
    for n in (4, 5, 6):
        g = fs_girth(FsContext(make_named("cycle", n), make_named("star", n)))
        ok &= g == n * (n - 1)
        notes.append(f"Cycle_{n}: {g}")
    g = fs_girth(FsContext(bowtie(), make_named("star", 5)))
    ok &= g == 6
    notes.append(f"bowtie: {g}")
    walks, stats_ok, lengths_ok = 0, True, True
    for a in range(5, 8):
        for b in range(5, 8):
            for d in (-1, 0, 1, 2):
                X = barbell_graph(a, b, d)
                B = barbell_of(X, a, b, d)
                w = barbell_walk(X, B)
                Y = make_named("star", X.n)
                end = validate_sequence(FsContext(X, Y), w)
                target = 2 * (a + b - 1) + 2 if d < 0 else 2 * (a + b + 2 * d + 2)
                lengths_ok &= len(w) == target and end == w.start
                stats_ok &= walk_stats(X, Y, w).consistent()
                walks += 1
    for k in range(3, 8):
        X = make_named("cycle", k)
        w = cycle_walk(X, list(range(k)))
        Y = make_named("star", k)
        lengths_ok &= len(w) == k * (k - 1) and validate_sequence(FsContext(X, Y), w) == w.start
        stats_ok &= walk_stats(X, Y, w).consistent()
        walks += 1
    ok &= lengths_ok and stats_ok
    notes.append(f"{walks} walks, formula lengths {lengths_ok}, walk_stats {stats_ok}")
    if slow:
        X = barbell_graph(5, 5, -1)
        ctx = FsContext(X, make_named("star", 9))
        g = fs_girth(ctx, seeds=star_seeds(9))
        ok &= g == 20
        notes.append(f"two 5-cycles, Star_9: {g}")
    return ok, "; ".join(notes)


# ---------------------------------------------------------------- 10 edge count

@_timed(120)
def c10_edge_count(instances=50, seed=10):
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(instances):
        n = int(rng.integers(2, 7))
        pairs = list(combinations(range(n), 2))
        X = SimpleGraph(n, [e for e in pairs if rng.random() < 0.5])
        Y = SimpleGraph(n, [e for e in pairs if rng.random() < 0.5])
        ctx = FsContext(X, Y)
        brute = sum(len(neighbors(ctx, s)) for s in permutations(range(n))) // 2
        bad += brute != fs_edge_count(ctx)
    return bad == 0, f"{instances} random pairs, {bad} mismatches"


# ---------------------------------------------------------------- 11 Markov

@_timed(300)
def c11_markov(samples=1_000_000, seed=11):
    ctx = FsContext(make_named("cycle", 4), make_named("star", 4))
    comp, P = markov.component_matrix(ctx, (0, 1, 2, 3))
    rows = float(np.abs(P.sum(axis=1) - 1).max())
    curve = markov.tv_curve(P, list(range(201)))
    mono = all(b <= a + 1e-15 for a, b in zip(curve, curve[1:]))
    kctx = FsContext(make_named("complete", 5), make_named("complete", 5))
    counts = markov.pair_counts(kctx, (0, 1, 2, 3, 4), samples, seed)
    p = markov.uniformity_pvalue(counts)
    ok = rows <= 1e-12 and mono and p > 0.0027
    return ok, (f"row error {rows:.1e}, TV nonincreasing {mono} (t=0..200, "
                f"TV(200)={curve[-1]:.2e}), chi-square p={p:.3f} over {len(counts)} pairs")


CRITERIA = [
    ("1", "diam FS(Path_n, K_n) = C(n,2), n=3..7", c1_path_complete),
    ("2", "diam FS(Cycle_n, K_n) = floor(n^2/4), n=3..7", c2_cycle_complete),
    ("3", "FS(Cycle_n, Star_n) components are n(n-1)-cycles, n=3..7", c3_cycle_star),
    ("4", "FS(Cycle_n, Y) connected iff forest complement with coprime sizes, n=4,5", c4_connectivity),
    ("5", "Path components = linear extensions, distance = inversions, n<=5", c5_path_components),
    ("6", "component diameter bounds, n<=5", c6_diameter_bounds),
    ("7", "cycle_route validity, length bound, skeleton", c7_cycle_route),
    ("8", "layered construction certificates", c8_construction),
    ("9", "girth oracle and closed-walk lengths", c9_girth),
    ("10", "fs_edge_count = brute force", c10_edge_count),
    ("11", "lazy chain rows, TV monotonicity, pair uniformity", c11_markov),
]


def run_criterion(key, slow=False):
    for k, title, fn in CRITERIA:
        if k == key:
            ok, detail, dt = fn(slow=slow) if key == "9" else fn()
            return Result(k, title, bool(ok), detail, dt)
    raise KeyError(key)


def run_suite(slow=False, out=sys.stdout):
    results = []
    for key, _, _ in CRITERIA:
        r = run_criterion(key, slow=slow)
        results.append(r)
        if out is not None:
            print(r.line(), file=out, flush=True)
    return results
