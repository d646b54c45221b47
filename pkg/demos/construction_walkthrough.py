"""Build the layered pair (X_L, Y_L), run extraction programs and check
every invariant along them.

The level-L program performs one L-extraction of the starting
configuration; inside it sit 31 nested (L-1)-extractions, which is where
the 25^(L-1) lower bound on the distance comes from.
"""

from fsgraph import construction as C

for L in (1, 2):
    lc = C.build(L)
    print(f"L={L}: n={lc.n}, |E(X)|={lc.X.m}, |E(Y)|={lc.Y.m}, "
          f"distance bound 25^(L-1)={C.lower_bound(L)}")
    prog = C.l_extraction_program(lc, L, 1)
    W = C.trajectory(lc, prog.program)
    checks = {k: int((~v).sum()) for k, v in C.check_all(lc, W).items()}
    print(f"  program: {prog.length} swaps, checker failures {checks}")
    print(f"  endpoint is a level-{L} extraction: "
          f"{C.is_extraction(lc, lc.sigma_s, prog.endpoint, L)}")
    for ell in range(1, L + 1):
        print(f"  nested {ell}-extraction chain length: {C.count_extraction_chain(lc, W, ell)}")
    print(f"  rotation cover per segment: {C.segment_rotation_cover(lc, prog, W)}")

lc = C.build(1)
W = C.random_walk(lc, 50_000, seed=1)
bad = {k: int((~v).sum()) for k, v in C.check_all(lc, W).items()}
print(f"random 50000-step walk on L=1, checker failures {bad}")
