"""The lazy friends-and-strangers chain.

Each step picks one friendly X-edge uniformly among those available at
the current configuration and swaps across it with probability 1/2.
With no friendly edge the step is a self-loop.  Because the number of
friendly edges varies, the stationary law is proportional to the
friendly degree rather than uniform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import linalg, stats

from .config import BudgetExceeded, InputError, current_budget
from .explorer import bfs_distances
from .fs_core import FsContext, check_configuration, neighbors


BIT_GENERATORS = {c.__name__.lower(): c for c in
                  (np.random.PCG64, np.random.PCG64DXSM, np.random.Philox,
                   np.random.SFC64, np.random.MT19937)}


def make_rng(seed, algorithm=None):
    """numpy Generator over the configured bit generator (default PCG64)."""
    name = (algorithm or current_budget().rng).lower()
    if name not in BIT_GENERATORS:
        raise InputError(f"unknown bit generator {name!r}; choose from {sorted(BIT_GENERATORS)}")
    return np.random.Generator(BIT_GENERATORS[name](seed))


def spawn_seeds(seed, k):
    """k independent child seeds for parallel chains."""
    return np.random.SeedSequence(seed).spawn(k)


@dataclass
class ChainState:
    ctx: FsContext
    current: tuple
    rng_seed: int
    step_count: int = 0
    rng: np.random.Generator = field(default=None, repr=False)

    def __post_init__(self):
        self.current = check_configuration(self.current, self.ctx.n)
        if self.rng is None:
            self.rng = make_rng(self.rng_seed)


def make_chain(ctx, start=None, seed=0):
    start = tuple(range(ctx.n)) if start is None else start
    return ChainState(ctx, start, seed)


def select_pair(state):
    """A uniformly chosen friendly X-edge of the current configuration, or None."""
    pairs = state.ctx.friendly_edges(state.current)
    if not pairs:
        return None
    return pairs[int(state.rng.integers(len(pairs)))]


def step(state):
    """Advance one lazy step in place; returns the state for chaining."""
    pair = select_pair(state)
    if pair is not None and state.rng.random() < 0.5:
        a, b = pair
        s = list(state.current)
        s[a], s[b] = s[b], s[a]
        state.current = tuple(s)
    state.step_count += 1
    return state


def run(state, steps):
    """Trajectory of ``steps`` steps (start included) as a list of configurations."""
    out = [state.current]
    for _ in range(steps):
        out.append(step(state).current)
    return out


def pair_counts(ctx, sigma, samples, seed=0):
    """Counts of each friendly edge over ``samples`` draws of the selection rule."""
    state = ChainState(ctx, sigma, seed)
    pairs = ctx.friendly_edges(state.current)
    if not pairs:
        return {}
    idx = state.rng.integers(len(pairs), size=samples)
    return dict(zip(pairs, np.bincount(idx, minlength=len(pairs)).tolist()))


def uniformity_pvalue(counts):
    """Chi-square p-value of the hypothesis that the counts are uniform."""
    obs = np.array(list(counts.values()), dtype=float)
    return float(stats.chisquare(obs).pvalue)


# ---------------------------------------------------------------- exact analysis

def transition_matrix(ctx, component):
    """Dense lazy transition matrix on a component (rows in ``component`` order)."""
    comp = list(component)
    if len(comp) > current_budget().dense_states:
        raise BudgetExceeded(f"component of size {len(comp)} exceeds the dense-matrix budget "
                             f"{current_budget().dense_states}")
    index = {c: i for i, c in enumerate(comp)}
    P = np.zeros((len(comp), len(comp)))
    for c in comp:
        i = index[c]
        nb = neighbors(ctx, c)
        if not nb:
            P[i, i] = 1.0
            continue
        P[i, i] = 0.5
        for w in nb:
            P[i, index[w]] += 0.5 / len(nb)
    return P


def component_matrix(ctx, sigma):
    comp = sorted(bfs_distances(ctx, sigma))
    return comp, transition_matrix(ctx, comp)


def stationary(P):
    """Stationary vector by eigen-solve of P^T (eigenvalue closest to 1)."""
    w, v = linalg.eig(P.T)
    k = int(np.argmin(np.abs(w - 1.0)))
    pi = np.real(v[:, k])
    return pi / pi.sum()


def tv_rows(M, pi):
    """Max over rows of the total-variation distance to pi."""
    return float(0.5 * np.abs(M - pi[None, :]).sum(axis=1).max())


def tv_curve(P, ts, pi=None):
    """Max-row TV distance to stationary at each t in ``ts`` (ascending)."""
    pi = stationary(P) if pi is None else pi
    out, M, cur = [], np.eye(P.shape[0]), 0
    for t in ts:
        if t < cur:
            raise InputError("times must be ascending")
        M = M @ np.linalg.matrix_power(P, t - cur)
        cur = t
        out.append(tv_rows(M, pi))
    return out


def mixing_estimate(ctx, component, epsilon=0.25, max_doublings=60):
    """Smallest t with max-row TV <= epsilon.

    Squares P until the bound holds, then binary-lifts down using the
    stored powers P^(2^j); valid because the TV distance is nonincreasing.
    """
    P = transition_matrix(ctx, component)
    pi = stationary(P)
    if tv_rows(np.eye(P.shape[0]), pi) <= epsilon:
        return 0
    powers = [P]
    while tv_rows(powers[-1], pi) > epsilon:
        if len(powers) > max_doublings:
            raise BudgetExceeded(f"TV above {epsilon} after 2^{max_doublings} steps")
        powers.append(powers[-1] @ powers[-1])
    M, t = np.eye(P.shape[0]), 0
    for j in range(len(powers) - 1, -1, -1):
        cand = M @ powers[j]
        if tv_rows(cand, pi) > epsilon:
            M, t = cand, t + (1 << j)
    return t + 1


def empirical_tv(ctx, start, t, samples, seed=0):
    """Monte Carlo TV between the law at time t and the degree-proportional stationary law.

    ``noise_floor`` bounds the expected TV of a perfect sampler of the
    same size (sqrt(support / samples) / 2), so readings near it carry
    no signal.
    """
    comp = list(bfs_distances(ctx, start))
    deg = np.array([max(len(ctx.friendly_edges(c)), 0) for c in comp], dtype=float)
    pi = deg / deg.sum() if deg.sum() else np.full(len(comp), 1 / len(comp))
    index = {c: i for i, c in enumerate(comp)}
    counts = np.zeros(len(comp))
    for child in spawn_seeds(seed, samples):
        state = ChainState(ctx, start, 0, rng=make_rng(child))
        for _ in range(t):
            step(state)
        counts[index[state.current]] += 1
    tv = 0.5 * np.abs(counts / samples - pi).sum()
    return {"tv": float(tv), "samples": samples, "support": len(comp),
            "noise_floor": 0.5 * float(np.sqrt(len(comp) / samples))}
