"""Acyclic orientations: flips, double-flips, linear extensions and the
component descriptions of FS(Path_n, Y) and FS(Cycle_n, Y).

An orientation of G is stored as one boolean per edge of ``G.edge_list``:
True means the edge (u, v), u < v, is directed u -> v.
"""

from __future__ import annotations

import math
from collections import deque
from functools import reduce
from itertools import permutations

from .config import BudgetExceeded, FsError, InputError, current_budget
from .fs_core import inverse
from .graph_core import complement, components, fundamental_cycles, is_forest


class OrientationError(FsError, ValueError):
    pass


class AcyclicOrientation:
    __slots__ = ("base", "dirs", "_inc")

    def __init__(self, base, dirs, check=True):
        dirs = tuple(bool(d) for d in dirs)
        if len(dirs) != base.m:
            raise InputError("one direction per base edge required")
        self.base, self.dirs = base, dirs
        self._inc = _incidence(base)
        if check and not self.is_acyclic():
            raise OrientationError("orientation has a directed cycle")

    @classmethod
    def from_arcs(cls, base, arcs):
        arcs = set(map(tuple, arcs))
        dirs = []
        for u, v in base.edge_list:
            if (u, v) in arcs:
                dirs.append(True)
            elif (v, u) in arcs:
                dirs.append(False)
            else:
                raise InputError(f"edge {(u, v)} has no direction")
        if len(arcs) != base.m:
            raise InputError("arcs do not match the base edges")
        return cls(base, dirs)

    def arcs(self):
        return [(u, v) if d else (v, u) for (u, v), d in zip(self.base.edge_list, self.dirs)]

    def out_degree(self, v):
        return sum(1 for i, tail in self._inc[v] if self.dirs[i] == tail)

    def in_degree(self, v):
        return len(self._inc[v]) - self.out_degree(v)

    def is_source(self, v):
        return all(self.dirs[i] == tail for i, tail in self._inc[v])

    def is_sink(self, v):
        return all(self.dirs[i] != tail for i, tail in self._inc[v])

    def sources(self):
        return [v for v in range(self.base.n) if self.is_source(v)]

    def sinks(self):
        return [v for v in range(self.base.n) if self.is_sink(v)]

    def is_acyclic(self):
        indeg = [self.in_degree(v) for v in range(self.base.n)]
        out = self._out_lists()
        q = deque(v for v in range(self.base.n) if indeg[v] == 0)
        seen = 0
        while q:
            u = q.popleft()
            seen += 1
            for w in out[u]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    q.append(w)
        return seen == self.base.n

    def _out_lists(self):
        out = [[] for _ in range(self.base.n)]
        for u, v in self.arcs():
            out[u].append(v)
        return out

    def _flip_at(self, vs):
        d = list(self.dirs)
        for v in vs:
            for i, _ in self._inc[v]:
                d[i] = not d[i]
        return AcyclicOrientation(self.base, d, check=False)

    def reversed(self):
        return AcyclicOrientation(self.base, [not d for d in self.dirs], check=False)

    def __eq__(self, other):
        return isinstance(other, AcyclicOrientation) and self.base == other.base and self.dirs == other.dirs

    def __hash__(self):
        return hash(self.dirs)

    def __lt__(self, other):
        return self.dirs < other.dirs

    def __repr__(self):
        return f"AcyclicOrientation({self.arcs()})"


_INC_CACHE = {}


def _incidence(g):
    """Per vertex: (edge index, True if the vertex is the smaller endpoint)."""
    key = (g.n, g.edges)
    inc = _INC_CACHE.get(key)
    if inc is None:
        inc = [[] for _ in range(g.n)]
        for i, (u, v) in enumerate(g.edge_list):
            inc[u].append((i, True))
            inc[v].append((i, False))
        inc = tuple(tuple(x) for x in inc)
        if len(_INC_CACHE) > 4096:
            _INC_CACHE.clear()
        _INC_CACHE[key] = inc
    return inc


# ---------------------------------------------------------------- basic operations

def orientation_from(sigma, G):
    """alpha_G(sigma): edge {i, j} points i -> j iff sigma^-1(i) < sigma^-1(j)."""
    pos = inverse(sigma)
    return AcyclicOrientation(G, [pos[u] < pos[v] for u, v in G.edge_list], check=False)


def sources(alpha):
    return alpha.sources()


def sinks(alpha):
    return alpha.sinks()


def inflip(alpha, v):
    """Turn the source v into a sink."""
    if not alpha.is_source(v):
        raise OrientationError(f"vertex {v} is not a source")
    return alpha._flip_at([v])


def outflip(alpha, v):
    """Turn the sink v into a source."""
    if not alpha.is_sink(v):
        raise OrientationError(f"vertex {v} is not a sink")
    return alpha._flip_at([v])


def double_flip(alpha, v, w):
    """Inflip the source v and outflip the sink w; v and w must be distinct and nonadjacent."""
    if v == w:
        raise OrientationError("double-flip needs two distinct vertices")
    if alpha.base.has_edge(v, w):
        raise OrientationError(f"{v} and {w} are adjacent")
    if not alpha.is_source(v):
        raise OrientationError(f"vertex {v} is not a source")
    if not alpha.is_sink(w):
        raise OrientationError(f"vertex {w} is not a sink")
    return alpha._flip_at([v, w])


def linear_extensions(alpha, limit=None):
    """All configurations sigma with alpha_G(sigma) = alpha, in lexicographic order.

    sigma lists the vertices in a topological order of alpha.
    """
    n = alpha.base.n
    if n > current_budget().max_n:
        raise BudgetExceeded(f"linear extensions capped at n={current_budget().max_n}")
    out_lists = alpha._out_lists()
    indeg = [alpha.in_degree(v) for v in range(n)]
    order, res = [], []

    def rec():
        if len(order) == n:
            res.append(tuple(order))
            if limit is not None and len(res) >= limit:
                raise StopIteration
            return
        for v in range(n):
            if indeg[v] == 0 and v not in placed:
                placed.add(v)
                order.append(v)
                for w in out_lists[v]:
                    indeg[w] -= 1
                rec()
                for w in out_lists[v]:
                    indeg[w] += 1
                order.pop()
                placed.discard(v)

    placed = set()
    try:
        rec()
    except StopIteration:
        pass
    return res


def acyclic_orientations(G):
    """Acyc(G), sorted; every acyclic orientation has a linear extension."""
    if G.n > current_budget().max_n:
        raise BudgetExceeded(f"Acyc enumeration capped at n={current_budget().max_n}")
    found = {orientation_from(p, G) for p in permutations(range(G.n))}
    return sorted(found)


# ---------------------------------------------------------------- flip equivalence

def cycle_signature(alpha, cycles=None):
    """Per fundamental cycle, the number of edges pointing along its traversal."""
    cycles = fundamental_cycles(alpha.base) if cycles is None else cycles
    arcs = set(alpha.arcs())
    return tuple(sum(1 for step in c if step in arcs) for c in cycles)


def flip_potentials(alpha, beta):
    """Per-vertex inflip counts k taking alpha to beta, or None if inconsistent.

    Along an arc u -> v of alpha, inflips alternate u, v, u, ... so the
    edge ends reversed iff k_u = k_v + 1 and unchanged iff k_u = k_v.
    Potentials are normalised to minimum 0 on each component of the base.
    """
    g = alpha.base
    k = {}
    for comp in components(g):
        root = comp[0]
        k[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in k:
                    continue
                k[w] = k[u] + _edge_offset(alpha, beta, u, w)
                stack.append(w)
        low = min(k[v] for v in comp)
        for v in comp:
            k[v] -= low
    for (u, v), da, db in zip(g.edge_list, alpha.dirs, beta.dirs):
        tail, head = (u, v) if da else (v, u)
        want = 0 if da == db else 1
        if k[tail] - k[head] != want:
            return None
    return [k[v] for v in range(g.n)]


def _edge_offset(alpha, beta, u, w):
    """k_w - k_u forced by the edge {u, w}."""
    i = alpha.base.edge_list.index((min(u, w), max(u, w)))
    da, db = alpha.dirs[i], beta.dirs[i]
    u_is_tail = da == (u < w)
    diff = 0 if da == db else 1           # k_tail - k_head
    return -diff if u_is_tail else diff


def inflip_sequence(alpha, beta):
    """Inflip sequence alpha -> beta of minimal total length, or None.

    Greedy: always inflip a source whose remaining count is positive; one
    exists inside the set of vertices with the largest remaining count.
    """
    k = flip_potentials(alpha, beta)
    if k is None:
        return None
    seq, cur = [], alpha
    remaining = sum(k)
    while remaining:
        v = next((v for v in range(alpha.base.n) if k[v] > 0 and cur.is_source(v)), None)
        if v is None:            # cannot happen for consistent potentials
            raise AssertionError("no flippable source with positive potential")
        cur = cur._flip_at([v])
        k[v] -= 1
        remaining -= 1
        seq.append(v)
    return seq


def outflip_sequence(alpha, beta):
    """Outflip sequence alpha -> beta (inflips on the reversed orientations)."""
    return inflip_sequence(alpha.reversed(), beta.reversed())


def flip_equivalent(alpha, beta):
    """(equivalent?, inflip certificate or None).

    Equivalence is decided by cycle signatures on a fundamental cycle
    basis; the certificate is an explicit inflip sequence.
    """
    if alpha.base != beta.base:
        raise InputError("orientations of different graphs")
    cycles = fundamental_cycles(alpha.base)
    if cycle_signature(alpha, cycles) != cycle_signature(beta, cycles):
        return False, None
    seq = inflip_sequence(alpha, beta)
    if seq is None:
        seq = _search_inflips(alpha, beta)
    return True, seq


def _search_inflips(alpha, beta):
    """Fallback BFS over orientation space under inflips."""
    budget = current_budget()
    prev = {alpha: None}
    q = deque([alpha])
    while q:
        a = q.popleft()
        if a == beta:
            path = []
            while prev[a] is not None:
                a, v = prev[a]
                path.append(v)
            return path[::-1]
        for v in a.sources():
            b = a._flip_at([v])
            if b not in prev:
                prev[b] = (a, v)
                q.append(b)
        if len(prev) > budget.max_states:
            raise BudgetExceeded("inflip search over budget", visited=len(prev))
    return None


def _closure(start, moves):
    seen = {start}
    q = deque([start])
    while q:
        a = q.popleft()
        for b in moves(a):
            if b not in seen:
                seen.add(b)
                q.append(b)
    return seen


def _flip_moves(a):
    return [a._flip_at([v]) for v in a.sources()] + [a._flip_at([v]) for v in a.sinks()]


def _double_flip_moves(a):
    g = a.base
    return [a._flip_at([v, w]) for v in a.sources() for w in a.sinks()
            if v != w and not g.has_edge(v, w)]


def flip_class(alpha):
    return _closure(alpha, _flip_moves)


def flip_class_id(alpha):
    """Lexicographically smallest orientation flip-equivalent to alpha."""
    return min(flip_class(alpha))


def double_flip_class(alpha):
    return _closure(alpha, _double_flip_moves)


def double_flip_class_id(alpha):
    return min(double_flip_class(alpha))


def _partition(G, moves):
    left = set(acyclic_orientations(G))
    classes = []
    while left:
        start = min(left)
        cls = _closure(start, moves)
        left -= cls
        classes.append(sorted(cls))
    return classes


def flip_classes(G):
    return _partition(G, _flip_moves)


def double_flip_classes(G):
    """Partition of Acyc(G) into double-flip classes, each sorted, ordered by representative."""
    return _partition(G, _double_flip_moves)


# ---------------------------------------------------------------- FS components

def cycle_connectivity_predicate(Y):
    """FS(Cycle_n, Y) connected iff complement(Y) is a forest with coprime tree sizes."""
    if Y.n < 3:
        raise InputError("cycle connectivity needs n >= 3")
    cy = complement(Y)
    if not is_forest(cy):
        return False
    return reduce(math.gcd, (len(c) for c in components(cy))) == 1


def path_component(Y, sigma):
    """Component of sigma in FS(Path_n, Y): the linear extensions of alpha_{complement(Y)}(sigma)."""
    return set(linear_extensions(orientation_from(sigma, complement(Y))))


def cycle_component(Y, sigma):
    """Component of sigma in FS(Cycle_n, Y): union of L over a double-flip class."""
    cls = double_flip_class(orientation_from(sigma, complement(Y)))
    out = set()
    for a in cls:
        out.update(linear_extensions(a))
    return out


def comparable_pairs(alpha):
    """p_alpha: number of pairs related in the reachability order of alpha."""
    out_lists = alpha._out_lists()
    total = 0
    for s in range(alpha.base.n):
        seen, stack = {s}, [s]
        while stack:
            u = stack.pop()
            for w in out_lists[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        total += len(seen) - 1
    return total
