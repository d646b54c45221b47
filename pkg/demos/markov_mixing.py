"""Lazy friends-and-strangers chain on FS(Cycle_n, Star_n).

Each component is an n(n-1)-cycle, so the lazy walk mixes in order
(n(n-1))^2 steps; the table shows the exact mixing time at TV 1/4.
"""

from fsgraph import markov
from fsgraph.fs_core import FsContext
from fsgraph.graph_core import make_named

print(" n  states  t_mix(1/4)")
for n in range(3, 7):
    ctx = FsContext(make_named("cycle", n), make_named("star", n))
    comp, _ = markov.component_matrix(ctx, tuple(range(n)))
    print(f"{n:2d}  {len(comp):6d}  {markov.mixing_estimate(ctx, comp):10d}")

ctx = FsContext(make_named("cycle", 4), make_named("star", 4))
for t in (0, 10, 40, 160):
    r = markov.empirical_tv(ctx, (0, 1, 2, 3), t, 4000, seed=5)
    print(f"empirical TV at t={t:3d}: {r['tv']:.3f} (noise floor {r['noise_floor']:.3f})")
