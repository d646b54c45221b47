"""The layered pair (X_L, Y_L) whose FS component has exponential diameter,
the swap programs that perform layer extractions, and executable
checkers for the invariants every configuration of that component obeys.

Vertex numbering of X_L (layer-major; side a before side b; cycle before
path).  Cycle lists run clockwise:

    cycle_a = [v_a, upper arc (7 inner), v, lower arc (7 inner)]
    cycle_b = [v_b, lower arc (7 inner), v, upper arc (7 inner)]

so on cycle_a the junction with the layer above sits at index 4 and the
junction with the layer below at index 12; on cycle_b these are 12 and 4.
A junction and v belong to the layer/side that allocates them first.
path_a lists v_a first and then 15 vertices going left; path_b lists v_b
and 14 vertices going right.

Y_L is labelled so that the starting configuration is the identity: a
Y-vertex carries the label of the X-vertex it starts on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .config import BudgetExceeded, FsError, InputError, current_budget
from .fs_core import FsContext, SwapSequence, check_configuration
from .graph_core import SimpleGraph, add_isolated

CYCLE = 16
PATH_A = 16
PATH_B = 15
STAR_LEAVES = 14
SEGMENTS = 31          # lower-level extractions per higher-level extraction
CHAIN_BOUND = 25       # guaranteed nested extractions per level

A_TOP, A_BOTTOM, B_TOP, B_BOTTOM, V_IDX = 4, 12, 12, 4, 8


class ConstructionError(FsError, RuntimeError):
    """An internal step of a generated program was not a friendly swap."""


@dataclass
class Layer:
    index: int
    cycle_a: list
    cycle_b: list
    path_a: list
    path_b: list
    knob_a: int
    knob_b: int
    leaves_a: list
    leaves_b: list
    K_a: list
    K_b: list

    @property
    def v_a(self):
        return self.cycle_a[0]

    @property
    def v_b(self):
        return self.cycle_b[0]

    @property
    def v(self):
        return self.cycle_a[V_IDX]


@dataclass
class LayeredConstruction:
    L: int
    X: SimpleGraph
    Y: SimpleGraph
    sigma_s: tuple
    layers: list

    @property
    def n(self):
        return self.X.n

    def layer(self, ell):
        return self.layers[ell - 1]

    def ctx(self):
        return FsContext(self.X, self.Y)

    def junction(self, ell, side):
        """v_side^{ell, ell+1}, or None at the last layer."""
        if ell >= self.L:
            return None
        lay = self.layer(ell)
        return lay.cycle_a[A_BOTTOM] if side == "a" else lay.cycle_b[B_BOTTOM]

    def names(self):
        """Plain-dict view of every distinguished vertex and index set."""
        out = {"L": self.L, "n": self.n, "layers": []}
        for lay in self.layers:
            ell = lay.index
            d = {"cycleA": lay.cycle_a, "cycleB": lay.cycle_b,
                 "pathA": lay.path_a, "pathB": lay.path_b,
                 "starA": lay.leaves_a, "starB": lay.leaves_b,
                 "knobA": lay.knob_a, "knobB": lay.knob_b,
                 "KA": lay.K_a, "KB": lay.K_b,
                 "v_a": lay.v_a, "v_b": lay.v_b, "v": lay.v}
            if ell < self.L:
                d["v_a_next"] = self.junction(ell, "a")
                d["v_b_next"] = self.junction(ell, "b")
            out["layers"].append(d)
        return out


# ---------------------------------------------------------------- build

def build(L):
    """Construct X_L, Y_L and the identity starting configuration."""
    if L < 1:
        raise InputError("L must be at least 1")
    counter = [0]

    def new():
        counter[0] += 1
        return counter[0] - 1

    layers = []
    for ell in range(1, L + 1):
        prev = layers[-1] if layers else None
        ca = [None] * CYCLE
        for i in range(CYCLE):
            ca[i] = prev.cycle_a[A_BOTTOM] if (prev and i == A_TOP) else new()
        pa = [ca[0]] + [new() for _ in range(PATH_A - 1)]
        cb = [None] * CYCLE
        for i in range(CYCLE):
            if i == V_IDX:
                cb[i] = ca[V_IDX]
            elif prev and i == B_TOP:
                cb[i] = prev.cycle_b[B_BOTTOM]
            else:
                cb[i] = new()
        pb = [cb[0]] + [new() for _ in range(PATH_B - 1)]
        if prev is None:
            knob_a, knob_b = ca[A_TOP], cb[B_TOP]
        else:
            knob_a, knob_b = prev.path_a[-1], prev.path_b[0]
        leaves_a = [x for i, x in enumerate(ca) if i not in (A_TOP, V_IDX)]
        leaves_b = [x for i, x in enumerate(cb) if i not in (0, B_TOP)]
        layers.append(Layer(ell, ca, cb, pa, pb, knob_a, knob_b, leaves_a, leaves_b,
                            pa[1:], pb[:]))
    n = counter[0]
    xe = set()
    for lay in layers:
        for cyc in (lay.cycle_a, lay.cycle_b):
            xe.update((cyc[i], cyc[(i + 1) % CYCLE]) for i in range(CYCLE))
        for p in (lay.path_a, lay.path_b):
            xe.update(zip(p, p[1:]))
    ye = set()
    for lay in layers:
        K = lay.K_a + lay.K_b
        for knob, leaves in ((lay.knob_a, lay.leaves_a), (lay.knob_b, lay.leaves_b)):
            ye.update((knob, y) for y in leaves)
            ye.update((knob, y) for y in K)
        ye.update((a, b) for a in lay.K_a for b in lay.K_b)
    return LayeredConstruction(L, SimpleGraph(n, xe), SimpleGraph(n, ye),
                               tuple(range(n)), layers)


def boundary(lc, ell, side):
    """bd(C_side^ell): the junction vertices of that cycle that exist for ell."""
    lay = lc.layer(ell)
    if side == "a":
        out = {lay.v_a, lay.v}
        if ell > 1:
            out.add(lay.cycle_a[A_TOP])
        if ell < lc.L:
            out.add(lay.cycle_a[A_BOTTOM])
    else:
        out = {lay.v_b, lay.v}
        if ell > 1:
            out.add(lay.cycle_b[B_TOP])
        if ell < lc.L:
            out.add(lay.cycle_b[B_BOTTOM])
    return out


def lower_bound(L, native_bits=None):
    """25^(L-1); with ``native_bits`` set, overflow of that signed width is an error."""
    if L < 1:
        raise InputError("L must be at least 1")
    value = CHAIN_BOUND ** (L - 1)
    if native_bits is not None and value >= 1 << (native_bits - 1):
        raise OverflowError(f"25^{L - 1} does not fit in {native_bits} bits")
    return value


def padded(L, n):
    """(X~, Y~, sigma) with n - (58L+2) isolated vertices appended to both graphs."""
    lc = build(L)
    extra = n - lc.n
    if extra < 0:
        raise InputError(f"n={n} is smaller than 58L+2={lc.n}")
    return add_isolated(lc.X, extra), add_isolated(lc.Y, extra), tuple(range(n))


# ---------------------------------------------------------------- knob rotations

def _cycle_of(lc, ell, side):
    lay = lc.layer(ell)
    return (lay.cycle_a, lay.knob_a, lay.leaves_a) if side == "a" else \
        (lay.cycle_b, lay.knob_b, lay.leaves_b)


def knob_rotation(lc, sigma, side, ell, mu, loops, direction=1):
    """``loops`` full turns of the knob of C_side^ell around its cycle.

    ``direction`` +1 moves the knob along increasing cycle-list index.
    Every companion shifts one step the other way per turn, skipping the
    knob's start vertex.
    """
    cyc, knob, leaves = _cycle_of(lc, ell, side)
    sigma = check_configuration(sigma, lc.n)
    on = {sigma[x] for x in cyc}
    if on != set(leaves) | {knob, mu}:
        raise ConstructionError("occupancy precondition violated: cycle must hold the knob, "
                                "its 14 leaves and the companion")
    if not lc.Y.has_edge(knob, mu):
        raise ConstructionError(f"companion {mu} is not a neighbour of the knob")
    i = cyc.index(next(x for x in cyc if sigma[x] == knob))
    swaps = []
    for _ in range(loops):
        for _ in range(CYCLE):
            j = (i + direction) % CYCLE
            a, b = cyc[i], cyc[j]
            swaps.append((min(a, b), max(a, b)))
            i = j
    return SwapSequence(sigma, swaps)


# ---------------------------------------------------------------- extraction programs

@dataclass
class RotationSpan:
    layer: int
    side: str
    companion: int
    start: int
    end: int
    interrupted: bool = False


@dataclass
class ExtractionProgram:
    level: int
    eta: int
    program: SwapSequence
    checkpoints: list
    level_checkpoints: dict = field(default_factory=dict)
    rotations: list = field(default_factory=list)
    length: int = 0
    endpoint: tuple = None


class _Builder:
    """Generates a level-`top` extraction program by simulation.

    Layer 1 runs the six-step loop.  A layer ell >= 2 acts only while its
    knob sits on the junction with layer ell-1, i.e. between two turns of
    a layer ell-1 rotation that carries that knob; each layer ell-1
    extraction hosts exactly one layer ell task.
    """

    def __init__(self, lc, top, sink=None, store=True, limit=None):
        self.lc, self.top = lc, top
        self.conf = list(lc.sigma_s)
        self.where = list(range(lc.n))
        self.yadj = lc.Y.adjacency_matrix()
        self.sink, self.store = sink, store
        self.limit = current_budget().max_program if limit is None else limit
        self.swaps = []
        self.count = 0
        self.rotations = []
        self.level_checkpoints = {ell: [0] for ell in range(1, top + 1)}
        self.segment = {ell: 0 for ell in range(2, top + 1)}
        self.done = {ell: False for ell in range(2, top + 1)}

    # -- primitives
    def swap(self, a, b):
        ya, yb = self.conf[a], self.conf[b]
        if not self.yadj[ya][yb]:
            raise ConstructionError(f"unfriendly swap {(a, b)} at step {self.count}")
        self.conf[a], self.conf[b] = yb, ya
        self.where[ya], self.where[yb] = b, a
        e = (a, b) if a < b else (b, a)
        if self.store:
            if self.count >= self.limit:
                raise BudgetExceeded(f"program longer than the {self.limit}-swap budget",
                                     visited=self.count)
            self.swaps.append(e)
        if self.sink is not None:
            self.sink(e)
        self.count += 1

    def rotate(self, ell, side, target):
        """Move the companion currently on the cycle to ``target`` via the lower arc."""
        cyc, knob, _ = _cycle_of(self.lc, ell, side)
        start = A_TOP if side == "a" else B_TOP
        bottom = A_BOTTOM if side == "a" else B_BOTTOM
        if self.where[knob] != cyc[start]:
            raise ConstructionError(f"knob of C_{side}^{ell} is not on its start vertex")
        mu = next(self.conf[x] for x in cyc if self.conf[x] != knob
                  and self.conf[x] not in self._leafset(ell, side))
        p, t = cyc.index(self.where[mu]), cyc.index(target)
        # the companion walks the arc that avoids the knob's start vertex
        step = 1 if all((p + k) % CYCLE != start for k in range(1, (t - p) % CYCLE + 1)) else -1
        loops = (t - p) % CYCLE if step == 1 else (p - t) % CYCLE
        span = RotationSpan(ell, side, mu, self.count, self.count)
        pos = start
        for _ in range(loops):
            for _ in range(CYCLE):
                nxt = (pos - step) % CYCLE
                self.swap(cyc[pos], cyc[nxt])
                pos = nxt
            if (ell < self.top and self.where[mu] == cyc[bottom]
                    and mu == self._knob(ell + 1, side)):
                before = self.count
                self.on_junction(ell + 1, side)
                span.interrupted |= self.count != before
        span.end = self.count
        self.rotations.append(span)
        if self.where[mu] != target:
            raise ConstructionError("rotation missed its target")

    def _knob(self, ell, side):
        lay = self.lc.layer(ell)
        return lay.knob_a if side == "a" else lay.knob_b

    _leaf_cache = {}

    def _leafset(self, ell, side):
        key = (id(self.lc), ell, side)
        s = self._leaf_cache.get(key)
        if s is None:
            lay = self.lc.layer(ell)
            s = frozenset(lay.leaves_a if side == "a" else lay.leaves_b)
            self._leaf_cache[key] = s
        return s

    def push(self, path):
        i = 0
        while i + 1 < len(path) and self.yadj[self.conf[path[i]]][self.conf[path[i + 1]]]:
            self.swap(path[i], path[i + 1])
            i += 1

    # -- the six steps, per layer
    def step(self, ell, k):
        lay = self.lc.layer(ell)
        if k == 1:
            self.rotate(ell, "b", lay.v)
        elif k == 2:
            self.rotate(ell, "a", lay.v_a)
        elif k == 3:
            self.push(lay.path_a)
        elif k == 4:
            self.rotate(ell, "a", lay.v)
        elif k == 5:
            self.rotate(ell, "b", lay.v_b)
        else:
            self.push(lay.path_b)

    @staticmethod
    def task(j):
        """Steps and side of the j-th task (0..30) of one extraction on layers >= 2."""
        if j == 0:
            return "b", (1,)
        if j == SEGMENTS - 1:
            return "b", (5, 6)
        if j % 2 == 1:
            return "a", (2, 3, 4)
        return "b", (5, 6, 1)

    def on_junction(self, ell, side):
        if ell > self.top or self.done[ell]:
            return
        want, steps = self.task(self.segment[ell] % SEGMENTS)
        if want != side:
            return
        self.done[ell] = True
        for k in steps:
            self.step(ell, k)

    def checkpoint(self, ell):
        self.level_checkpoints[ell].append(self.count)
        nxt = ell + 1
        if nxt > self.top:
            return
        if not self.done[nxt]:
            raise ConstructionError(f"layer {nxt} task {self.segment[nxt] % SEGMENTS} "
                                    "found no junction visit in its segment")
        self.done[nxt] = False
        self.segment[nxt] += 1
        if self.segment[nxt] % SEGMENTS == 0:
            self.checkpoint(nxt)

    def run(self, eta):
        total = eta * SEGMENTS ** (self.top - 1)
        for _ in range(total):
            for _ in range(PATH_B):
                for k in range(1, 7):
                    self.step(1, k)
            self.checkpoint(1)


def l_extraction_program(lc, ell, eta=1, sink=None, store=True, limit=None):
    """Program of ``eta`` consecutive ell-extractions starting at sigma_s.

    Checkpoint j is the index after the j-th ell-extraction.  With
    ``store=False`` swaps go only to ``sink`` (streaming mode).
    """
    if not 1 <= ell <= lc.L:
        raise InputError(f"level must lie in 1..{lc.L}")
    if eta < 1:
        raise InputError("eta must be positive")
    b = _Builder(lc, ell, sink=sink, store=store, limit=limit)
    b.run(eta)
    seq = SwapSequence(lc.sigma_s, b.swaps if store else [])
    return ExtractionProgram(ell, eta, seq, list(b.level_checkpoints[ell]),
                             dict(b.level_checkpoints), b.rotations, b.count, tuple(b.conf))


def one_layer_extraction(lc, eta=1):
    if lc.L != 1:
        raise InputError("one_layer_extraction needs L = 1")
    return l_extraction_program(lc, 1, eta)


def sigma_f(lc):
    """Endpoint of the level-L program: an L-extraction of sigma_s."""
    return l_extraction_program(lc, lc.L, 1, store=False).endpoint


# ---------------------------------------------------------------- replay

def trajectory(lc, seq, dtype=None):
    """Array W with W[t, y] = X-position of Y-vertex y after t swaps."""
    n = lc.n
    dtype = dtype or (np.int16 if n < 32000 else np.int32)
    T = len(seq.swaps)
    W = np.empty((T + 1, n), dtype=dtype)
    conf = list(seq.start)
    where = [0] * n
    for x, y in enumerate(conf):
        where[y] = x
    W[0] = where
    yadj = lc.Y.adjacency_matrix()
    X = lc.X
    for t, (a, b) in enumerate(seq.swaps, 1):
        ya, yb = conf[a], conf[b]
        if not X.has_edge(a, b) or not yadj[ya][yb]:
            raise ConstructionError(f"invalid swap {(a, b)} at index {t - 1}")
        conf[a], conf[b] = yb, ya
        where[ya], where[yb] = b, a
        W[t] = where
    return W


def _as_traj(lc, sigmas):
    """Accept one configuration, a list of them, or a W array."""
    if isinstance(sigmas, np.ndarray) and sigmas.ndim == 2:
        return sigmas
    arr = np.asarray(sigmas)
    if arr.ndim == 1:
        arr = arr[None, :]
    W = np.empty_like(arr)
    rows = np.arange(arr.shape[0])[:, None]
    W[rows, arr] = np.arange(arr.shape[1])[None, :]
    return W


def _mask(lc, xs):
    m = np.zeros(lc.n, dtype=bool)
    m[list(xs)] = True
    return m


def _on(lc, W, ys, xs):
    """Boolean (T, |ys|): Y-vertices ys stand on X-set xs."""
    return _mask(lc, xs)[W[:, list(ys)]]


# ---------------------------------------------------------------- checkers
# Each checker takes a configuration (X->Y tuple) or a trajectory array and
# returns a boolean array with one entry per configuration.

def rule_of_two(lc, W):
    W = _as_traj(lc, W)
    ok = np.ones(W.shape[0], dtype=bool)
    for lay in lc.layers:
        ok &= _on(lc, W, lay.leaves_a, lay.cycle_a).all(axis=1)
        ok &= _on(lc, W, lay.leaves_b, lay.cycle_b).all(axis=1)
    return ok


def check_rule_of_two(lc, sigma):
    return bool(rule_of_two(lc, sigma)[0])


def _x_layer(lay):
    return set(lay.cycle_a) | set(lay.cycle_b) | set(lay.path_a) | set(lay.path_b)


def layer_independence(lc, W):
    """(T, 4) boolean array: the four layer-independence properties."""
    W = _as_traj(lc, W)
    T = W.shape[0]
    out = np.ones((T, 4), dtype=bool)
    l1 = lc.layer(1)
    out[:, 0] = (_on(lc, W, [l1.knob_a], set(l1.cycle_a) | set(l1.path_a))[:, 0]
                 & _on(lc, W, [l1.knob_b], set(l1.cycle_b) | set(l1.path_b))[:, 0])
    for ell in range(2, lc.L + 1):
        lay = lc.layer(ell)
        region = _x_layer(lc.layer(ell - 1)) | _x_layer(lay)
        out[:, 1] &= _on(lc, W, [lay.knob_a, lay.knob_b], region).all(axis=1)
    for ell in range(1, lc.L + 1):
        lay = lc.layer(ell)
        K = lay.K_a + lay.K_b
        if ell < lc.L:
            nxt = lc.layer(ell + 1)
            K = [y for y in K if y not in (nxt.knob_a, nxt.knob_b)]
        out[:, 2] &= _on(lc, W, K, _x_layer(lay)).all(axis=1)
        paths = set(lay.path_a) | set(lay.path_b)
        off = (~_on(lc, W, lay.K_a + lay.K_b, paths)).sum(axis=1)
        out[:, 3] &= off <= 1
    return out


def check_layer_independence(lc, sigma):
    return tuple(bool(v) for v in layer_independence(lc, sigma)[0])


def path_images(lc, W):
    W = _as_traj(lc, W)
    ok = np.ones(W.shape[0], dtype=bool)
    for lay in lc.layers:
        K = lay.K_a + lay.K_b
        paths = set(lay.path_a) | set(lay.path_b)
        all_on = _on(lc, W, K, paths).all(axis=1)
        Kw = W[:, K]
        k_on_va = (Kw == lay.v_a).any(axis=1)
        k_on_vb = (Kw == lay.v_b).any(axis=1)
        knobs = [lay.knob_a, lay.knob_b]
        in_a = _on(lc, W, knobs, lay.path_a[1:]).any(axis=1)
        in_b = _on(lc, W, knobs, lay.path_b[1:])
        interiors = (_on(lc, W, knobs, lay.path_a[1:]) | in_b).sum(axis=1)
        in_b = in_b.any(axis=1)
        s1 = ~all_on | ~(k_on_va & k_on_vb) | (interiors == 1)
        s2 = all_on | ((~k_on_va | in_a) & (~k_on_vb | in_b))
        ok &= s1 & s2
    return ok


def check_path_images(lc, sigma):
    return bool(path_images(lc, sigma)[0])


def knob_extract(lc, W):
    W = _as_traj(lc, W)
    ok = np.ones(W.shape[0], dtype=bool)
    for ell in range(1, lc.L):
        lay, nxt = lc.layer(ell), lc.layer(ell + 1)
        paths = set(lay.path_a) | set(lay.path_b)
        a_off = ~_on(lc, W, [nxt.knob_a], paths)[:, 0]
        b_off = ~_on(lc, W, [nxt.knob_b], paths)[:, 0]
        kb_in = _on(lc, W, lay.K_b, lay.path_a).all(axis=1)
        ka_in = _on(lc, W, lay.K_a, lay.path_a).all(axis=1)
        ok &= (~a_off | kb_in) & (~b_off | ka_in)
    return ok


def check_knob_extract(lc, sigma):
    return bool(knob_extract(lc, sigma)[0])


def _layer_of(lc, mu):
    for lay in lc.layers:
        if mu in lay.K_a:
            return lay, "a"
        if mu in lay.K_b:
            return lay, "b"
    return None, None


def is_left(lc, sigma, mu1, mu2):
    """Whether mu1 is left of mu2 on sigma; None when the relation is undefined."""
    lay, part = _layer_of(lc, mu1)
    lay2, part2 = _layer_of(lc, mu2)
    if lay is None or lay is not lay2 or part != part2 or mu1 == mu2:
        return None
    x1, x2 = sigma.index(mu1), sigma.index(mu2)
    pa, pb = lay.path_a, lay.path_b
    if x1 in pa and x2 in pa:
        return pa.index(x2) < pa.index(x1)
    if x1 in pb and x2 in pb:
        return pb.index(x1) < pb.index(x2)
    if x1 in pa and x2 in pb:
        return True
    if x1 in pb and x2 in pa:
        return False
    return None


def _coord(lc, lay):
    c = np.full(lc.n, np.nan)
    for d, x in enumerate(lay.path_a):
        c[x] = -d
    for d, x in enumerate(lay.path_b):
        c[x] = 100 + d
    return c


def order_invariance(lc, W):
    """Left order among same-part K elements on the paths agrees with sigma_s."""
    W = _as_traj(lc, W)
    ok = np.ones(W.shape[0], dtype=bool)
    W0 = _as_traj(lc, lc.sigma_s)[0]
    for lay in lc.layers:
        coord = _coord(lc, lay)
        for part in (lay.K_a, lay.K_b):
            order = sorted(part, key=lambda y: coord[W0[y]])   # left to right at sigma_s
            C = coord[W[:, order]]
            run = np.fmax.accumulate(C, axis=1)
            prev = np.concatenate([np.full((C.shape[0], 1), np.nan), run[:, :-1]], axis=1)
            bad = ~np.isnan(C) & ~np.isnan(prev) & (C <= prev)
            ok &= ~bad.any(axis=1)
    return ok


def _extraction_flags(lc, W, ell):
    lay = lc.layer(ell)
    on_a = _on(lc, W, lay.K_a, lay.path_a)
    on_b = _on(lc, W, lay.K_b, lay.path_a)
    return on_a.all(1), ~on_a.any(1), on_b.all(1), ~on_b.any(1)


def is_extraction(lc, sigma, tau, ell):
    W = _as_traj(lc, [sigma, tau])
    a_in, a_out, b_in, b_out = _extraction_flags(lc, W, ell)
    return bool((a_in[0] and a_out[1] and b_in[1]) or (b_in[0] and b_out[1] and a_in[1]))


def count_extraction_chain(lc, W, ell):
    """Greedy length of a chain of nested ell-extractions along a trajectory."""
    W = _as_traj(lc, W)
    a_in, a_out, b_in, b_out = _extraction_flags(lc, W, ell)
    first = a_out & b_in          # extraction of a checkpoint that had K_a on path_a
    second = b_out & a_in
    c, count = 0, 0
    while True:
        target = first if a_in[c] else second if b_in[c] else None
        if target is None:
            return count
        hits = np.flatnonzero(target[c + 1:])
        if hits.size == 0:
            return count
        c = c + 1 + int(hits[0])
        count += 1


def check_all(lc, W):
    """Dict of per-configuration pass arrays for every invariant checker."""
    W = _as_traj(lc, W)
    li = layer_independence(lc, W)
    return {"rule_of_two": rule_of_two(lc, W),
            "layer_independence": li.all(axis=1),
            "path_images": path_images(lc, W),
            "order_invariance": order_invariance(lc, W),
            "knob_extract": knob_extract(lc, W)}


def is_rotation(lc, W, span):
    """Literal check that W[span.start..span.end] is a knob rotation with the companion."""
    cyc, knob, leaves = _cycle_of(lc, span.layer, span.side)
    seg = W[span.start:span.end + 1]
    lam = span.end - span.start
    if lam <= 0 or lam % CYCLE:
        return False
    members = list(leaves) + [knob, span.companion]
    if not _on(lc, seg, members, cyc).all():
        return False
    pos = [cyc.index(int(x)) for x in seg[:, knob]]
    step = (pos[1] - pos[0]) % CYCLE
    if step not in (1, CYCLE - 1):
        return False
    return all(pos[j] == (pos[0] + j * (1 if step == 1 else -1)) % CYCLE for j in range(len(pos)))


def segment_rotation_cover(lc, prog, W):
    """Per checkpoint segment: does it contain uninterrupted rotations of both
    top-layer knobs with every element of that layer's K?"""
    lay = lc.layer(prog.level)
    K = set(lay.K_a + lay.K_b)
    out = []
    for lo, hi in zip(prog.checkpoints, prog.checkpoints[1:]):
        seen = {"a": set(), "b": set()}
        for r in prog.rotations:
            if (r.layer == prog.level and not r.interrupted and lo <= r.start and r.end <= hi
                    and is_rotation(lc, W, r)):
                seen[r.side].add(r.companion)
        out.append(K <= seen["a"] and K <= seen["b"])
    return out


# ---------------------------------------------------------------- random walks

def random_walk(lc, steps, seed=0):
    """Uniform random friendly-swap walk from sigma_s; returns the trajectory array."""
    rng = np.random.default_rng(seed)
    conf = list(lc.sigma_s)
    where = list(range(lc.n))
    yadj = lc.Y.adjacency_matrix()
    edges = lc.X.edge_list
    W = np.empty((steps + 1, lc.n), dtype=np.int16)
    W[0] = where
    picks = rng.random(steps)
    for t in range(1, steps + 1):
        ok = [e for e in edges if yadj[conf[e[0]]][conf[e[1]]]]
        a, b = ok[int(picks[t - 1] * len(ok))]
        ya, yb = conf[a], conf[b]
        conf[a], conf[b] = yb, ya
        where[ya], where[yb] = b, a
        W[t] = where
    return W


# ---------------------------------------------------------------- emit

def graphs_json(lc):
    return json.dumps({"X": {"n": lc.n, "edges": [list(e) for e in lc.X.edge_list]},
                       "Y": {"n": lc.n, "edges": [list(e) for e in lc.Y.edge_list]},
                       "names": lc.names()})
