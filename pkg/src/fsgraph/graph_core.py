"""Simple undirected graphs on vertices 0..n-1 and the small amount of
graph arithmetic the rest of the package needs.

Named families use 0-based labels: ``path`` joins i and i+1, ``cycle``
adds the wrap edge {0, n-1}, ``star`` has center 0 and leaves 1..n-1.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .config import BudgetExceeded, InputError, current_budget


def _norm(u, v):
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """Immutable simple graph. ``edges`` is a frozenset of sorted pairs."""

    __slots__ = ("n", "edges", "_adj", "_edge_list")

    def __init__(self, n, edges=()):
        if n < 0:
            raise InputError("vertex count must be non-negative")
        es = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {(u, v)} out of range for n={n}")
            es.add(_norm(u, v))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", frozenset(es))
        adj = [set() for _ in range(n)]
        for u, v in es:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))
        object.__setattr__(self, "_edge_list", tuple(sorted(es)))

    def __setattr__(self, *_):
        raise AttributeError("SimpleGraph is immutable")

    @property
    def edge_list(self):
        """Edges in sorted order; the canonical order used everywhere."""
        return self._edge_list

    def neighbors(self, v):
        return self._adj[v]

    def has_edge(self, u, v):
        return v in self._adj[u]

    def degree(self, v):
        return len(self._adj[v])

    @property
    def m(self):
        return len(self.edges)

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, edges={list(self._edge_list)})"

    def adjacency_matrix(self):
        """Dense 0/1 adjacency as nested tuples (fast membership in hot loops)."""
        rows = [[0] * self.n for _ in range(self.n)]
        for u, v in self._edge_list:
            rows[u][v] = rows[v][u] = 1
        return tuple(tuple(r) for r in rows)

    def induced(self, vertices):
        """Induced subgraph, relabelled to 0..k-1 in the order given."""
        vs = list(vertices)
        idx = {v: i for i, v in enumerate(vs)}
        return SimpleGraph(len(vs), [(idx[u], idx[v]) for u, v in self._edge_list
                                     if u in idx and v in idx])


# ---------------------------------------------------------------- builders

def make_named(family, *params):
    """Build a named family: path, cycle, star, complete, complete_bipartite, empty."""
    if family in ("path", "cycle", "star", "complete", "empty"):
        if len(params) != 1:
            raise InputError(f"{family} takes one size parameter")
        n = int(params[0])
        if n < 1:
            raise InputError("graph size must be at least 1")
        if family == "path":
            return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])
        if family == "cycle":
            if n < 3:
                raise InputError("cycle needs at least 3 vertices")
            return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])
        if family == "star":
            return SimpleGraph(n, [(0, i) for i in range(1, n)])
        if family == "complete":
            return SimpleGraph(n, combinations(range(n), 2))
        return SimpleGraph(n)
    if family == "complete_bipartite":
        if len(params) != 2:
            raise InputError("complete_bipartite takes two part sizes")
        a, b = (int(p) for p in params)
        if a < 1 or b < 1:
            raise InputError("part sizes must be at least 1")
        return SimpleGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    raise InputError(f"unknown graph family {family!r}")


def parse_named(source):
    """Parse the ``family:n`` shorthand, e.g. ``cycle:5`` or ``complete_bipartite:2,3``."""
    family, _, rest = source.partition(":")
    if not rest:
        raise InputError(f"named graph needs a size: {source!r}")
    try:
        params = [int(p) for p in rest.split(",")]
    except ValueError:
        raise InputError(f"bad size in {source!r}") from None
    return make_named(family.strip().lower(), *params)


def disjoint_union(*graphs):
    edges, off = [], 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edge_list)
        off += g.n
    return SimpleGraph(off, edges)


def add_isolated(g, k):
    return SimpleGraph(g.n + k, g.edge_list)


def complement(g):
    return SimpleGraph(g.n, [(u, v) for u, v in combinations(range(g.n), 2)
                             if not g.has_edge(u, v)])


def all_graphs(n):
    """Every labelled simple graph on n vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


# ---------------------------------------------------------------- connectivity

def components(g, removed=()):
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    gone = set(removed)
    seen = set(gone)
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g):
    return len(components(g)) <= 1


def has_cut_vertex(g):
    base = len(components(g))
    return any(len(components(g, removed=(v,))) > base for v in range(g.n)
               if g.degree(v) > 0)


def is_forest(g):
    return g.m == g.n - len(components(g))


# ---------------------------------------------------------------- cycles

def _bfs_tree(g, root):
    dist, parent, branch = {root: 0}, {root: None}, {root: None}
    order, q = [root], deque([root])
    while q:
        u = q.popleft()
        for w in sorted(g.neighbors(u)):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                branch[w] = w if u == root else branch[u]
                order.append(w)
                q.append(w)
    return dist, parent, branch, order


def girth(g):
    """Length of a shortest cycle, ``math.inf`` for forests.

    BFS from every vertex; a non-tree edge {u, w} closes a walk of length
    d(u) + d(w) + 1 and the minimum over all roots is the girth.
    """
    best = math.inf
    for r in range(g.n):
        dist, parent, _, _ = _bfs_tree(g, r)
        for u, w in g.edge_list:
            if u in dist and w in dist and parent.get(u) != w and parent.get(w) != u:
                best = min(best, dist[u] + dist[w] + 1)
    return best


def _tree_path(parent, u):
    path = [u]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def fundamental_cycles(g):
    """One cycle per non-tree edge of a BFS spanning forest.

    Each cycle is returned as a closed list of directed traversal steps
    [(v0, v1), (v1, v2), ..., (vk, v0)].
    """
    cycles = []
    for comp in components(g):
        _, parent, _, _ = _bfs_tree(g, comp[0])
        tree = {_norm(u, p) for u, p in parent.items() if p is not None}
        for u, w in g.edge_list:
            if u not in parent or _norm(u, w) in tree:
                continue
            pu, pw = _tree_path(parent, u), _tree_path(parent, w)
            common = set(pu) & set(pw)
            lca = next(x for x in pu if x in common)
            up = pu[:pu.index(lca) + 1]                  # u .. lca
            down = list(reversed(pw[:pw.index(lca)]))    # below lca .. w
            verts = up + down                           # u .. lca .. w
            steps = list(zip(verts, verts[1:])) + [(w, u)]
            cycles.append(steps)
    return cycles


def simple_cycles(g, max_vertices=None, max_count=None):
    """All cycle subgraphs as vertex lists (each cycle once, smallest vertex first).

    Exponential in general; guarded by the configured budget.
    """
    budget = current_budget()
    max_vertices = budget.max_cycle_vertices if max_vertices is None else max_vertices
    max_count = budget.max_subgraphs if max_count is None else max_count
    if g.n > max_vertices:
        raise BudgetExceeded(f"cycle enumeration capped at {max_vertices} vertices, graph has {g.n}")
    out = []
    for s in range(g.n):
        path, on_path = [s], {s}

        def extend(u):
            for w in sorted(g.neighbors(u)):
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(list(path))
                    if len(out) > max_count:
                        raise BudgetExceeded("too many cycle subgraphs", visited=len(out))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    return out


def cycle_edges(cycle):
    return frozenset(_norm(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


# ---------------------------------------------------------------- barbells and thetas

@dataclass(frozen=True)
class BarbellDecomposition:
    """Two edge-disjoint cycles and a connecting path.

    ``path`` runs from a vertex of ``cycle1`` to a vertex of ``cycle2``;
    when the cycles share a vertex the path is that single vertex.
    """
    cycle1: tuple
    cycle2: tuple
    path: tuple

    @property
    def inner(self):
        return max(len(self.path) - 2, 0)

    @property
    def path_length(self):
        return len(self.path) - 1

    def edges(self):
        return (cycle_edges(self.cycle1) | cycle_edges(self.cycle2)
                | frozenset(_norm(a, b) for a, b in zip(self.path, self.path[1:])))

    def vertices(self):
        return frozenset(self.cycle1) | frozenset(self.cycle2) | frozenset(self.path)

    def validate(self, g):
        c1, c2, p = self.cycle1, self.cycle2, self.path
        for c in (c1, c2):
            if len(c) < 3 or len(set(c)) != len(c) or not cycle_edges(c) <= g.edges:
                return False
        pe = [_norm(a, b) for a, b in zip(p, p[1:])]
        if not set(pe) <= g.edges or len(set(p)) != len(p):
            return False
        e1, e2 = cycle_edges(c1), cycle_edges(c2)
        if e1 & e2 or e1 & set(pe) or e2 & set(pe):
            return False
        s1, s2 = set(c1), set(c2)
        if len(p) == 1:
            return s1 & s2 == {p[0]}
        inner = set(p[1:-1])
        return (not s1 & s2 and p[0] in s1 and p[-1] in s2
                and not inner & (s1 | s2))


@dataclass(frozen=True)
class ThetaWitness:
    """A cycle plus one ear whose endpoints sit on the cycle."""
    base_cycle: tuple
    ear: tuple

    def edges(self):
        return cycle_edges(self.base_cycle) | frozenset(
            _norm(a, b) for a, b in zip(self.ear, self.ear[1:]))

    def validate(self, g):
        c, e = self.base_cycle, self.ear
        if len(c) < 3 or len(set(c)) != len(c) or not cycle_edges(c) <= g.edges:
            return False
        if len(e) < 2 or len(set(e)) != len(e):
            return False
        ee = {_norm(a, b) for a, b in zip(e, e[1:])}
        if not ee <= g.edges or ee & cycle_edges(c):
            return False
        return e[0] in c and e[-1] in c and not set(e[1:-1]) & set(c)


def _paths_avoiding(g, starts, targets, blocked):
    """All simple paths from a start to a target whose inner vertices avoid ``blocked``."""
    out = []
    for s in sorted(starts):
        path = [s]

        def extend(u):
            for w in sorted(g.neighbors(u)):
                if w in targets and len(path) >= 1 and w != s:
                    out.append(tuple(path + [w]))
                elif w not in blocked and w not in path and w not in targets:
                    path.append(w)
                    extend(w)
                    path.pop()

        extend(s)
    return out


def find_barbells(g, cycles=None):
    """Every barbell subgraph, deduplicated by edge set."""
    cycles = simple_cycles(g) if cycles is None else cycles
    seen, out = set(), []
    for c1, c2 in combinations(cycles, 2):
        s1, s2 = set(c1), set(c2)
        shared = s1 & s2
        if len(shared) == 1:
            cands = [tuple(shared)]
        elif not shared:
            cands = _paths_avoiding(g, s1, s2, s1 | s2)
        else:
            continue
        for p in cands:
            b = BarbellDecomposition(tuple(c1), tuple(c2), p)
            key = b.edges()
            if key in seen:
                continue
            seen.add(key)
            out.append(b)
    return out


def find_thetas(g, cycles=None):
    """Every theta subgraph (cycle plus one ear), deduplicated by edge set."""
    cycles = simple_cycles(g) if cycles is None else cycles
    seen, out = set(), []
    for c in cycles:
        sc = set(c)
        ce = cycle_edges(c)
        for i, a in enumerate(c):
            for b in c[i + 1:]:
                ears = []
                if g.has_edge(a, b) and _norm(a, b) not in ce:
                    ears.append((a, b))
                ears += [p for p in _paths_avoiding(g, {a}, {b}, sc) if len(p) > 2]
                for e in ears:
                    t = ThetaWitness(tuple(c), tuple(e))
                    key = t.edges()
                    if key in seen:
                        continue
                    seen.add(key)
                    out.append(t)
    return out


# ---------------------------------------------------------------- I/O

def to_text(g):
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edge_list]) + "\n"


def from_text(text):
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("empty graph file")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError:
        raise InputError("graph text must be 'n' then 'u v' lines") from None
    return SimpleGraph(n, edges)


def to_json(g):
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edge_list]})


def from_json(text):
    try:
        obj = json.loads(text)
        return SimpleGraph(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad graph JSON: {exc}") from None


def to_dot(g, name="G", labels=None):
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lab = f' [label="{labels[v]}"]' if labels and v in labels else ""
        lines.append(f"  {v}{lab};")
    lines += [f"  {u} -- {v};" for u, v in g.edge_list]
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(source):
    """Load a graph from ``family:n`` shorthand, a .json file or a text file.

    Shorthand wins when the argument contains ':' and names no existing file.
    """
    import os
    if ":" in source and not os.path.exists(source):
        return parse_named(source)
    try:
        with open(source) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read graph {source!r}: {exc}") from None
    return from_json(text) if text.lstrip().startswith("{") else from_text(text)
