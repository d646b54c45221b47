"""Girth of FS(X, Star_n) against cycle and barbell walk lengths.

A k-cycle in X gives a closed walk of length k(k-1); a barbell gives
2(|C1|+|C2|) + 4*(path length).  The BFS oracle decides which is shorter.
"""

from fsgraph.girth_probe import barbell_graph, bowtie, conjecture_probe
from fsgraph.graph_core import SimpleGraph, make_named

cases = {
    "Cycle_5": make_named("cycle", 5),
    "bowtie": bowtie(),
    "two triangles + edge": barbell_graph(3, 3, 0),
    "two 5-cycles, shared": barbell_graph(5, 5, -1),
    "K_4": make_named("complete", 4),
    "C4 with chord": SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
}
for name, X in cases.items():
    rep = conjecture_probe(X)
    kinds = sorted({c["type"] for c in rep["candidates"]})
    print(f"{name:22s} girth={rep['oracle_girth']}  candidate min={rep['candidate_min']}  "
          f"agree={rep['agree']}  witness={rep['witness_subgraph_type']}  candidates={kinds}")
