"""Constructive swap sequences.

* ``path_sort``: inversion-optimal sorting for X = Path_n.
* ``token_swap_complete``: the classical O(n^2) routine for Y = K_n.
* ``cycle_route``: double-flip driven routing for X = Cycle_n.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from functools import reduce

from .config import FsError, InputError
from .fs_core import SwapSequence, check_configuration, inverse
from .graph_core import complement, components
from .orientations import (AcyclicOrientation, double_flip, flip_potentials,
                           inflip_sequence, linear_extensions, orientation_from,
                           outflip_sequence)

log = logging.getLogger(__name__)


class RoutingError(FsError, ValueError):
    """The requested endpoints are provably not connected, or a hypothesis fails."""


@dataclass
class InversionReport:
    count: int
    pairs: list


def inversions(sigma, tau):
    """Pairs (i, j), i < j, of Y-vertices ordered differently by sigma^-1 and tau^-1."""
    if len(sigma) != len(tau):
        raise InputError("configurations of different lengths")
    ps, pt = inverse(sigma), inverse(tau)
    n = len(sigma)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)
             if (ps[i] < ps[j]) != (pt[i] < pt[j])]
    return InversionReport(len(pairs), pairs)


def _inv_count(sigma, tau):
    return inversions(sigma, tau).count


# ---------------------------------------------------------------- paths

def path_sort(Y, sigma, tau, trace=False):
    """Bubble-sort sigma into tau along Path_n (edges {p, p+1}).

    Fixes tau(0), tau(1), ... left to right; each swap removes exactly
    one (sigma, tau)-inversion, so the length equals inv(sigma, tau).
    """
    sigma = check_configuration(sigma, Y.n)
    tau = check_configuration(tau, Y.n)
    cy = complement(Y)
    if orientation_from(sigma, cy) != orientation_from(tau, cy):
        raise RoutingError("sigma and tau lie in different components of FS(Path_n, Y)")
    cur = list(sigma)
    swaps = []
    for p in range(Y.n):
        q = cur.index(tau[p])
        while q > p:
            cur[q - 1], cur[q] = cur[q], cur[q - 1]
            swaps.append((q - 1, q))
            if trace:
                log.info("step %d edge %s inversions %d", len(swaps), (q - 1, q),
                         _inv_count(tuple(cur), tau))
            q -= 1
    return SwapSequence(sigma, swaps)


# ---------------------------------------------------------------- complete Y

def _shortest_path(X, src, dst):
    prev = {src: None}
    q = deque([src])
    while q:
        u = q.popleft()
        if u == dst:
            break
        for w in sorted(X.neighbors(u)):
            if w not in prev:
                prev[w] = u
                q.append(w)
    if dst not in prev:
        return None
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def token_swap_complete(X, sigma, tau):
    """Route sigma to tau in FS(X, K_n).

    For each i in order: walk tau(i) onto i along a shortest X-path, then
    walk the displaced sigma(i) back; net effect is one transposition.
    """
    sigma = check_configuration(sigma, X.n)
    tau = check_configuration(tau, X.n)
    cur = list(sigma)
    swaps = []
    for i in range(X.n):
        if cur[i] == tau[i]:
            continue
        q = cur.index(tau[i])
        path = _shortest_path(X, q, i)
        if path is None:
            raise RoutingError(f"token {tau[i]} cannot reach vertex {i}: different X-components")
        for a, b in zip(path, path[1:]):
            cur[a], cur[b] = cur[b], cur[a]
            swaps.append((min(a, b), max(a, b)))
        back = path[:-1]
        for a, b in zip(reversed(back), list(reversed(back))[1:]):
            cur[a], cur[b] = cur[b], cur[a]
            swaps.append((min(a, b), max(a, b)))
    return SwapSequence(sigma, swaps)


# ---------------------------------------------------------------- cycles

def _bezout(values, modulus):
    """Integers x_i with sum x_i * values_i congruent to 1 mod ``modulus``."""
    def ext(a, b):
        if b == 0:
            return a, 1, 0
        g, x, y = ext(b, a % b)
        return g, y, x - (a // b) * y

    # fold g = gcd(modulus, v1, v2, ...); g is always c*modulus + sum xs_i*v_i
    g, xs = modulus, []
    for v in values:
        g, a, b = ext(g, v)
        xs = [x * a for x in xs] + [b]
    if g != 1:
        return None
    return [x % modulus for x in xs]


def _round_order(alpha, comp):
    """A topological order of alpha restricted to ``comp``."""
    ext = linear_extensions(alpha, limit=1)[0]
    cs = set(comp)
    return [v for v in ext if v in cs]


def _target_on(alpha, target, comp):
    """Orientation equal to ``target`` on edges inside comp and to alpha elsewhere."""
    cs = set(comp)
    dirs = [dt if u in cs else da for (u, _), da, dt in
            zip(alpha.base.edge_list, alpha.dirs, target.dirs)]
    return AcyclicOrientation(alpha.base, dirs, check=False)


def double_flip_schedule(Y, sigma, tau):
    """List of (v, w) double-flips (inflip v, outflip w) from alpha(sigma) to alpha(tau).

    Right stream: inflips on the largest component of complement(Y), first
    a direct sequence to its target, then rounds that return every n_r
    inflips.  Left stream: outflips on the other components, then full
    outflip rounds on the smallest one, then Bezout-corrected extra
    rounds so that the right stream stops on a round boundary.
    """
    cy = complement(Y)
    alpha, target = orientation_from(sigma, cy), orientation_from(tau, cy)
    comps = sorted(components(cy), key=lambda c: (len(c), c[0]))
    sizes = [len(c) for c in comps]
    if reduce(math.gcd, sizes) != 1:
        raise RoutingError(f"complement component sizes {sizes} are not coprime")
    if flip_potentials(alpha, target) is None:
        raise RoutingError("sigma and tau lie in different components of FS(Cycle_n, Y)")
    *lefts, right = comps
    n_r = len(right)

    direct_r = inflip_sequence(alpha, _target_on(alpha, target, right))
    round_r = _round_order(target, right)

    left_seq = []
    for c in lefts:
        left_seq += outflip_sequence(alpha, _target_on(alpha, target, c))
    # outflip rounds: reverse topological order of the target restricted to c
    rounds = {tuple(c): _round_order(target, c)[::-1] for c in lefts}
    first = tuple(lefts[0])
    while len(left_seq) < len(direct_r):
        left_seq += rounds[first]
    c = (len(left_seq) - len(direct_r)) % n_r
    if c:
        xs = _bezout([len(cc) for cc in lefts], n_r)
        for cc, x in zip(lefts, xs):
            d = (x * (n_r - c)) % n_r
            left_seq += rounds[tuple(cc)] * d
    total = len(left_seq)
    right_seq = list(direct_r)
    while len(right_seq) < total:
        right_seq += round_r
    right_seq = right_seq[:total]
    if (total - len(direct_r)) % n_r:
        raise AssertionError("Bezout correction failed to align the right stream")
    return list(zip(right_seq, left_seq))


def cycle_route(Y, sigma, tau, trace=False):
    """Route sigma to tau in FS(Cycle_n, Y) (X = Cycle_n, wrap edge {0, n-1}).

    Each double-flip (v, w) becomes: v slides left to position 0, w slides
    right to position n-1, then one swap across {0, n-1}.  A path_sort tail
    on the edges {p, p+1} finishes.  Length <= 4n^3 + |E(Y)|.
    """
    n = Y.n
    sigma = check_configuration(sigma, n)
    tau = check_configuration(tau, n)
    if n < 3:
        raise InputError("cycle routing needs n >= 3")
    schedule = double_flip_schedule(Y, sigma, tau)
    cur = list(sigma)
    swaps = []
    for step, (v, w) in enumerate(schedule):
        p = cur.index(v)
        while p > 0:
            cur[p - 1], cur[p] = cur[p], cur[p - 1]
            swaps.append((p - 1, p))
            p -= 1
        p = cur.index(w)
        while p < n - 1:
            cur[p], cur[p + 1] = cur[p + 1], cur[p]
            swaps.append((p, p + 1))
            p += 1
        cur[0], cur[n - 1] = cur[n - 1], cur[0]
        swaps.append((0, n - 1))
        if trace:
            log.info("double-flip %d: inflip %d outflip %d (swaps so far %d)", step, v, w, len(swaps))
    tail = path_sort(Y, tuple(cur), tau, trace=trace)
    return SwapSequence(sigma, swaps + tail.swaps)


def double_flip_skeleton(Y, seq):
    """Recover the double-flips of a Cycle_n route from its swaps across {0, n-1}.

    Returns the orientation sequence; raises OrientationError if some
    wrap swap does not correspond to a valid double-flip.
    """
    n = Y.n
    cy = complement(Y)
    cur = list(seq.start)
    alpha = orientation_from(tuple(cur), cy)
    chain = [alpha]
    for a, b in seq.swaps:
        if (a, b) == (0, n - 1):
            alpha = double_flip(alpha, cur[0], cur[n - 1])
            chain.append(alpha)
        cur[a], cur[b] = cur[b], cur[a]
    return chain
