"""Girth of FS(X, Star_n): closed walks of the star center and the
candidate-length comparison against the BFS oracle.

With Y = Star_n every friendly swap moves the center, so a swap sequence
is a walk of the center on X.  Vertex 0 of Y is the center.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .config import FsError, InputError, current_budget, set_budget
from .explorer import fs_girth
from .fs_core import FsContext, SwapSequence, check_configuration, replay
from .graph_core import (BarbellDecomposition, SimpleGraph, cycle_edges, find_barbells,
                         find_thetas, is_connected, make_named, simple_cycles)

CENTER = 0


class WalkSynthesisError(FsError, RuntimeError):
    """A synthesized walk failed its replay check."""


def _require_star(Y):
    n = Y.n
    if n >= 2 and (Y.m != n - 1 or Y.degree(CENTER) != n - 1):
        raise InputError("Y must be Star_n with center 0")


def star_start(n, vertex=0):
    """Identity configuration with the center moved onto X-vertex ``vertex``."""
    s = list(range(n))
    s[0], s[vertex] = s[vertex], s[0]
    return tuple(s)


def star_seeds(n):
    """One configuration per center position: meets every orbit of the
    leaf-relabelling automorphisms of FS(X, Star_n)."""
    return [star_start(n, v) for v in range(n)]


@dataclass
class PathInducedSubgraph:
    vertices: frozenset
    edges: frozenset

    def graph(self):
        """The subgraph relabelled onto 0..k-1 (sorted vertex order)."""
        idx = {v: i for i, v in enumerate(sorted(self.vertices))}
        return SimpleGraph(len(idx), [(idx[a], idx[b]) for a, b in self.edges])


@dataclass
class WalkStatistics:
    visits: dict
    traversals: dict
    leaf_swaps: dict

    @property
    def length(self):
        return sum(self.visits.values())

    def consistent(self):
        return sum(self.visits.values()) == sum(self.traversals.values()) == \
            sum(self.leaf_swaps.values())


def _center_positions(X, Y, seq):
    _require_star(Y)
    ctx = FsContext(X, Y)
    return [s.index(CENTER) for s in replay(ctx, seq)]


def path_induced(X, Y, seq):
    pos = _center_positions(X, Y, seq)
    edges = frozenset((min(a, b), max(a, b)) for a, b in seq.swaps)
    return PathInducedSubgraph(frozenset(pos), edges)


def walk_stats(X, Y, seq):
    _require_star(Y)
    ctx = FsContext(X, Y)
    visits, trav, leaves = {}, {}, {}
    prev = None
    for s in replay(ctx, seq):
        if prev is not None:
            origin, dest = prev.index(CENTER), s.index(CENTER)
            leaf = prev[dest]
            e = (min(origin, dest), max(origin, dest))
            visits[dest] = visits.get(dest, 0) + 1
            trav[e] = trav.get(e, 0) + 1
            leaves[leaf] = leaves.get(leaf, 0) + 1
        prev = s
    return WalkStatistics(visits, trav, leaves)


def _walk_swaps(route):
    """Swaps that move the center along a vertex route."""
    return [(min(a, b), max(a, b)) for a, b in zip(route, route[1:])]


def _rotate_cycle(cycle, v):
    i = cycle.index(v)
    return list(cycle[i:]) + list(cycle[:i])


def cycle_walk(X, cycle, start=None):
    """Center loops the k-cycle k-1 times: a closed walk of length k(k-1)."""
    k = len(cycle)
    if k < 3:
        raise InputError("a cycle needs at least 3 vertices")
    if not cycle_edges(cycle) <= X.edges:
        raise InputError("cycle is not a subgraph of X")
    start = star_start(X.n, min(cycle)) if start is None else check_configuration(start, X.n)
    c = _rotate_cycle(list(cycle), start.index(CENTER))
    loop = _walk_swaps(c + [c[0]])
    return SwapSequence(start, loop * (k - 1))


def barbell_walk(X, B: BarbellDecomposition):
    """Closed walk of length 2(|C1|+|C2|) + 4*(path length) around a barbell.

    The walk is the commutator A B A^-1 B^-1 of two center loops based at
    the path's first vertex: A goes once around C1, B crosses the path,
    goes once around C2 and comes back.  A and B move disjoint token sets,
    so the commutator closes; it is replayed and checked to be a cycle of
    FS, then rotated so the center starts on the barbell's lowest vertex.
    """
    if not B.validate(X):
        raise InputError("not a barbell subgraph of X")
    n = X.n
    j1, j2 = B.path[0], B.path[-1]
    c1 = _rotate_cycle(list(B.cycle1), j1)
    c2 = _rotate_cycle(list(B.cycle2), j2)
    a = _walk_swaps(c1 + [j1])
    path = list(B.path)
    b = _walk_swaps(path) + _walk_swaps(c2 + [j2]) + _walk_swaps(path[::-1])
    swaps = a + b + a[::-1] + b[::-1]
    seq = SwapSequence(star_start(n, j1), swaps)
    ctx = FsContext(X, make_named("star", n))
    states = list(replay(ctx, seq))
    if states[-1] != seq.start or len(set(states[:-1])) != len(swaps):
        raise WalkSynthesisError("barbell commutator is not a simple closed walk")
    low = min(B.vertices())
    i = next(t for t, s in enumerate(states) if s.index(CENTER) == low)
    return SwapSequence(states[i], swaps[i:] + swaps[:i])


def barbell_formula(B):
    return 2 * (len(B.cycle1) + len(B.cycle2)) + 4 * B.path_length


def _has_bridge(g, edges):
    for e in edges:
        rest = [f for f in edges if f != e]
        if not is_connected(SimpleGraph(g.n, rest)):
            return True
    return False


def classify_subgraph(sub: PathInducedSubgraph):
    """'cycle', 'barbell', 'theta' or 'other' for a path-induced subgraph."""
    g = sub.graph()
    if g.n < 3 or not is_connected(g):
        return "other"
    degs = sorted(g.degree(v) for v in range(g.n))
    if degs[0] < 2:
        return "other"
    if g.m == g.n and degs[-1] == 2:
        return "cycle"
    if g.m == g.n + 1:
        if degs[-1] == 4 and degs[-2] == 2:
            return "barbell"
        if degs[-2:] == [3, 3] and (g.n < 3 or degs[-3] == 2):
            return "barbell" if _has_bridge(g, g.edge_list) else "theta"
    return "other"


def _configs_to_sequence(cycle):
    swaps = []
    for s, t in zip(cycle, cycle[1:] + cycle[:1]):
        a, b = [x for x in range(len(s)) if s[x] != t[x]]
        swaps.append((a, b))
    return SwapSequence(cycle[0], swaps)


def conjecture_probe(X, budget=None):
    """Compare the BFS girth of FS(X, Star_n) with the cycle/barbell candidates.

    ``budget`` overrides the configuration-count limit of the girth search.
    """
    n = X.n
    Y = make_named("star", n)
    ctx = FsContext(X, Y)
    old = current_budget()
    if budget is not None:
        set_budget(replace(old, max_states=int(budget)))
    try:
        girth, witness = fs_girth(ctx, seeds=star_seeds(n), witness=True)
    finally:
        set_budget(old)
    cycles = simple_cycles(X)
    cands = []
    for c in cycles:
        cands.append({"type": "cycle", "subgraph": {"cycle": list(c)},
                      "formula_len": len(c) * (len(c) - 1)})
    for b in find_barbells(X, cycles):
        cands.append({"type": "barbell",
                      "subgraph": {"cycle1": list(b.cycle1), "cycle2": list(b.cycle2),
                                   "path": list(b.path)},
                      "formula_len": barbell_formula(b)})
    for t in find_thetas(X, cycles):
        cands.append({"type": "theta",
                      "subgraph": {"base_cycle": list(t.base_cycle), "ear": list(t.ear)},
                      "formula_len": None, "note": "no formula"})
    known = [c["formula_len"] for c in cands if c["formula_len"] is not None]
    best = min(known) if known else None
    oracle = None if girth == math.inf else int(girth)
    report = {"oracle_girth": oracle, "candidate_min": best, "candidates": cands,
              "agree": (oracle == best) if best is not None else None,
              "witness_subgraph_type": None, "witness_subgraph": None}
    if witness is not None:
        seq = _configs_to_sequence(witness)
        sub = path_induced(X, Y, seq)
        report["witness_subgraph_type"] = classify_subgraph(sub)
        report["witness_subgraph"] = {"vertices": sorted(sub.vertices),
                                      "edges": sorted(list(e) for e in sub.edges)}
        report["witness_length"] = len(seq)
    return report


def bowtie():
    """Two triangles sharing vertex 0."""
    return SimpleGraph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def barbell_graph(a, b, d):
    """C_a and C_b joined by a path with d inner vertices; d = -1 shares vertex 0."""
    edges = [(i, (i + 1) % a) for i in range(a)]
    if d < 0:
        verts2 = [0] + list(range(a, a + b - 1))
    else:
        path = [0] + list(range(a, a + d + 1))
        edges += list(zip(path, path[1:]))
        verts2 = list(range(a + d, a + d + b))
    edges += [(verts2[i], verts2[(i + 1) % b]) for i in range(b)]
    return SimpleGraph(max(max(e) for e in edges) + 1, edges)


def barbell_of(g, a, b, d):
    """The BarbellDecomposition of ``barbell_graph(a, b, d)``."""
    c1 = tuple(range(a))
    if d < 0:
        return BarbellDecomposition(c1, (0,) + tuple(range(a, a + b - 1)), (0,))
    path = (0,) + tuple(range(a, a + d)) + (a + d,)
    return BarbellDecomposition(c1, tuple(range(a + d, a + d + b)), path)
