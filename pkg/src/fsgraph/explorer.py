"""Exhaustive search over FS(X, Y): components, distances, diameters, girth."""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .config import BudgetExceeded, current_budget
from .fs_core import check_configuration, neighbors


def _check_n(ctx):
    budget = current_budget()
    if ctx.n > budget.max_n:
        raise BudgetExceeded(f"n={ctx.n} exceeds the exhaustive-search budget max_n={budget.max_n}")
    return budget


def bfs_distances(ctx, sigma, target=None):
    """Distances from sigma to every configuration in its component."""
    budget = _check_n(ctx)
    sigma = check_configuration(sigma, ctx.n)
    dist = {sigma: 0}
    q = deque([sigma])
    while q:
        u = q.popleft()
        if u == target:
            break
        du = dist[u] + 1
        for w in neighbors(ctx, u):
            if w not in dist:
                dist[w] = du
                q.append(w)
        if len(dist) > budget.max_states:
            raise BudgetExceeded("component search over budget", visited=len(dist))
    return dist


def component_of(ctx, sigma):
    return set(bfs_distances(ctx, sigma))


def distance(ctx, sigma, tau):
    """BFS distance; ``math.inf`` when sigma and tau lie in different components."""
    tau = check_configuration(tau, ctx.n)
    return bfs_distances(ctx, sigma, target=tau).get(tau, math.inf)


def components(ctx):
    """All components as lists; seeds taken in lexicographic permutation order."""
    budget = _check_n(ctx)
    seen, out = set(), []
    for p in permutations(range(ctx.n)):
        if p in seen:
            continue
        comp = list(bfs_distances(ctx, p))
        seen.update(comp)
        if len(seen) > budget.max_states:
            raise BudgetExceeded("component enumeration over budget", visited=len(seen))
        out.append(comp)
    return out


def is_connected_fs(ctx):
    _check_n(ctx)
    return len(bfs_distances(ctx, tuple(range(ctx.n)))) == math.factorial(ctx.n)


def _csr(ctx, comp):
    index = {c: i for i, c in enumerate(comp)}
    rows, cols = [], []
    for c in comp:
        i = index[c]
        for w in neighbors(ctx, c):
            rows.append(i)
            cols.append(index[w])
    data = np.ones(len(rows), dtype=np.int8)
    return csr_matrix((data, (rows, cols)), shape=(len(comp), len(comp)))


def eccentricities(ctx, comp, threads=None, chunk=256):
    """Exact eccentricity of every configuration of a component (all-sources BFS)."""
    graph = _csr(ctx, list(comp))
    size = graph.shape[0]
    starts = list(range(0, size, chunk))

    def run(lo):
        d = shortest_path(graph, method="D", directed=False, unweighted=True,
                          indices=np.arange(lo, min(lo + chunk, size)))
        return d.max(axis=1)

    if threads and threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(run, starts))
    else:
        parts = [run(lo) for lo in starts]
    ecc = np.concatenate(parts) if parts else np.zeros(0)
    return ecc.astype(np.int64)


def component_diameter(ctx, sigma, threads=None):
    comp = list(bfs_distances(ctx, sigma))
    return int(eccentricities(ctx, comp, threads).max())


def diameter_two_sweep(ctx, sigma):
    """Non-exact lower bound on the component diameter (double BFS sweep)."""
    d1 = bfs_distances(ctx, sigma)
    far = max(d1, key=d1.get)
    return max(bfs_distances(ctx, far).values())


def max_component_diameter(ctx, threads=None):
    return max(int(eccentricities(ctx, c, threads).max()) for c in components(ctx))


def is_cycle_component(ctx, component):
    comp = set(component)
    if len(comp) < 3:
        return False
    for c in comp:
        nb = neighbors(ctx, c)
        if len(nb) != 2 or not all(w in comp for w in nb):
            return False
    start = next(iter(comp))
    return len(bfs_distances(ctx, start)) == len(comp)


# ---------------------------------------------------------------- girth

def shortest_cycle_through(ctx, s, bound=math.inf):
    """Shortest cycle of FS containing s, if shorter than ``bound``.

    Returns (length, cycle as a configuration list starting at s) or
    (inf, None).  An edge between two different BFS branches of s closes
    a simple cycle through s; the minimum over such edges is exact.
    """
    budget = current_budget()
    dist, parent, branch = {s: 0}, {s: None}, {s: None}
    best, best_edge = bound, None
    q = deque([s])
    while q:
        u = q.popleft()
        du = dist[u]
        if 2 * du >= best:
            break
        for w in neighbors(ctx, u):
            if w not in dist:
                dist[w] = du + 1
                parent[w] = u
                branch[w] = w if u == s else branch[u]
                q.append(w)
            elif w != parent[u] and w != s and branch[w] != branch[u]:
                length = du + dist[w] + 1
                if length < best:
                    best, best_edge = length, (u, w)
        if len(dist) > budget.max_states:
            raise BudgetExceeded("girth search over budget", visited=len(dist))
    if best_edge is None:
        return math.inf, None
    u, w = best_edge
    left, right = [u], [w]
    while parent[left[-1]] is not None:
        left.append(parent[left[-1]])
    while parent[right[-1]] is not None:
        right.append(parent[right[-1]])
    cycle = list(reversed(left)) + right[:-1]
    return best, cycle


def fs_girth(ctx, seeds=None, witness=False):
    """Girth of FS(X, Y).

    ``seeds`` restricts the roots; it must meet every orbit of an
    automorphism group of FS (for example one configuration per star
    center position when Y is a star).  Default: every configuration.
    """
    _check_n(ctx)
    roots = permutations(range(ctx.n)) if seeds is None else seeds
    best, cyc = math.inf, None
    for s in roots:
        length, c = shortest_cycle_through(ctx, tuple(s), best)
        if length < best:
            best, cyc = length, c
    return (best, cyc) if witness else best


def explore_report(ctx, threads=None, with_girth=True):
    comps = components(ctx)
    report = {"components": [], "connected": len(comps) == 1}
    for c in comps:
        ecc = eccentricities(ctx, c, threads)
        report["components"].append({"size": len(c), "diameter": int(ecc.max()),
                                     "is_cycle": is_cycle_component(ctx, c)})
    if with_girth:
        g = fs_girth(ctx)
        report["girth"] = None if g == math.inf else int(g)
    return report
