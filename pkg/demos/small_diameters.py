"""Exhaustive diameters of FS(Path_n, K_n) and FS(Cycle_n, K_n).

Path_n with a complete Y is bubble sort, so the diameter is C(n, 2);
Cycle_n allows wrap-around swaps and the diameter drops to floor(n^2/4).
"""

from fsgraph.explorer import max_component_diameter
from fsgraph.fs_core import FsContext
from fsgraph.graph_core import make_named

print(" n  path  C(n,2)  cycle  n^2/4")
for n in range(3, 7):
    K = make_named("complete", n)
    dp = max_component_diameter(FsContext(make_named("path", n), K))
    dc = max_component_diameter(FsContext(make_named("cycle", n), K))
    print(f"{n:2d}  {dp:4d}  {n * (n - 1) // 2:6d}  {dc:5d}  {n * n // 4:5d}")
