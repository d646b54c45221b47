import numpy as np
import pytest

from fsgraph import construction as C
from fsgraph.config import BudgetExceeded, InputError
from fsgraph.fs_core import FsContext, neighbors, validate_sequence


@pytest.fixture(scope="module")
def lc1():
    return C.build(1)


@pytest.fixture(scope="module")
def lc2():
    return C.build(2)


@pytest.fixture(scope="module")
def prog1(lc1):
    p = C.one_layer_extraction(lc1, 2)
    return p, C.trajectory(lc1, p.program)


@pytest.fixture(scope="module")
def prog2(lc2):
    p = C.l_extraction_program(lc2, 2, 1)
    return p, C.trajectory(lc2, p.program)


def _moved(sigma, a, b):
    s = list(sigma)
    s[a], s[b] = s[b], s[a]
    return tuple(s)


# ---------------------------------------------------------------- build

@pytest.mark.parametrize("L", range(1, 6))
def test_build_golden_counts(L):
    lc = C.build(L)
    assert lc.n == lc.Y.n == 58 * L + 2
    assert lc.X.m == 61 * L
    assert lc.Y.m == 313 * L
    assert lc.sigma_s == tuple(range(lc.n))


def test_build_sizes_from_text():
    assert C.build(1).n == 60
    assert C.build(3).n == 176
    with pytest.raises(InputError):
        C.build(0)


@pytest.mark.parametrize("L", [1, 2, 3])
def test_layer_shapes(L):
    lc = C.build(L)
    for lay in lc.layers:
        assert len(set(lay.cycle_a)) == len(set(lay.cycle_b)) == 16
        assert len(set(lay.path_a)) == 16 and len(set(lay.path_b)) == 15
        assert len(lay.leaves_a) == len(lay.leaves_b) == 14
        assert len(lay.K_a) == len(lay.K_b) == 15
        assert set(lay.cycle_a) & set(lay.cycle_b) == {lay.v}
        assert set(lay.cycle_a) & set(lay.path_a) == {lay.v_a}
        assert set(lay.cycle_b) & set(lay.path_b) == {lay.v_b}
    for up, down in zip(lc.layers, lc.layers[1:]):
        assert set(up.cycle_a) & set(down.cycle_a) == {lc.junction(up.index, "a")}
        assert set(up.cycle_b) & set(down.cycle_b) == {lc.junction(up.index, "b")}
        assert not set(up.cycle_a) & set(down.cycle_b)


def _inner_arcs(cycle, marks):
    """Inner-vertex counts of the arcs between consecutive marked indices."""
    idx = sorted(marks)
    return sorted((b - a - 1) % 16 for a, b in zip(idx, idx[1:] + idx[:1]))


@pytest.mark.parametrize("L", [1, 3])
def test_arc_lengths(L):
    lc = C.build(L)
    for lay in lc.layers:
        for side, cyc in (("a", lay.cycle_a), ("b", lay.cycle_b)):
            marks = {cyc.index(v) for v in C.boundary(lc, lay.index, side)}
            arcs = _inner_arcs(cyc, marks)
            if lay.index in (1, L):
                assert 7 in arcs
            assert all(a in (3, 7) for a in arcs)
            assert sum(a + 1 for a in arcs) == 16


def test_knob_placement(lc1, lc2):
    lay = lc1.layer(1)
    assert lay.knob_a == lay.cycle_a[4]     # middle of the 7-vertex upper arc
    l1, l2 = lc2.layer(1), lc2.layer(2)
    assert l2.knob_a in l1.K_a and l2.knob_a == l1.path_a[-1]
    assert lc2.sigma_s[l1.path_a[-1]] == l2.knob_a
    assert l2.knob_b in l1.K_b


@pytest.mark.parametrize("L", [1, 2])
def test_two_non_leaves_per_cycle(L):
    lc = C.build(L)
    for lay in lc.layers:
        for cyc, leaves in ((lay.cycle_a, lay.leaves_a), (lay.cycle_b, lay.leaves_b)):
            assert sum(lc.sigma_s[x] not in leaves for x in cyc) == 2


def test_boundary_examples(lc1, lc2):
    l1 = lc1.layer(1)
    assert C.boundary(lc1, 1, "a") == {l1.v_a, l1.v}
    lc3 = C.build(3)
    assert len(C.boundary(lc3, 2, "a")) == 4
    l2 = lc2.layer(2)
    assert C.boundary(lc2, 2, "b") == {l2.v_b, lc2.junction(1, "b"), l2.v}


# ---------------------------------------------------------------- knob rotations

def _companion_perm(lc, seq, cyc, start):
    end = validate_sequence(lc.ctx(), seq)
    ring = [x for x in cyc if x != start]
    pos = {seq.start[x]: i for i, x in enumerate(ring)}
    return [pos[end[x]] for x in ring]


def test_knob_rotation_examples(lc1):
    lay = lc1.layer(1)
    mu = lc1.sigma_s[lay.v_b]
    assert C.knob_rotation(lc1, lc1.sigma_s, "b", 1, mu, 0).swaps == []
    seq = C.knob_rotation(lc1, lc1.sigma_s, "b", 1, mu, 1)
    assert len(seq) == 16
    end = validate_sequence(lc1.ctx(), seq)
    assert end[lay.knob_b] == lay.knob_b


def test_knob_rotation_is_15_cycle_power(lc1):
    lay = lc1.layer(1)
    mu = lc1.sigma_s[lay.v_b]
    start = lay.cycle_b[12]
    p1 = _companion_perm(lc1, C.knob_rotation(lc1, lc1.sigma_s, "b", 1, mu, 1),
                         lay.cycle_b, start)
    # a single 15-cycle
    seen, i = set(), 0
    while i not in seen:
        seen.add(i)
        i = p1[i]
    assert len(seen) == 15
    for k in (2, 7, 15):
        pk = _companion_perm(lc1, C.knob_rotation(lc1, lc1.sigma_s, "b", 1, mu, k),
                             lay.cycle_b, start)
        q = list(range(15))
        for _ in range(k):
            q = [p1[j] for j in q]
        assert pk == q
    assert q == list(range(15))


def test_knob_rotation_occupancy_violation(lc1):
    lay = lc1.layer(1)
    with pytest.raises(C.ConstructionError):
        C.knob_rotation(lc1, lc1.sigma_s, "a", 1, lay.K_a[3], 1)


# ---------------------------------------------------------------- programs

def test_one_layer_extraction(lc1, prog1):
    p, W = prog1
    lay = lc1.layer(1)
    assert p.length == len(p.program) == 2 * 7905
    mid = tuple(W[p.checkpoints[1]].argsort())
    on_a = {mid[x] for x in lay.path_a}
    assert set(lay.K_b) <= on_a
    assert on_a - set(lay.K_b) <= set(lay.leaves_a)
    assert {mid[x] for x in lay.path_b} == set(lay.K_a)
    assert p.endpoint == lc1.sigma_s
    assert validate_sequence(lc1.ctx(), p.program) == p.endpoint


def test_program_checkpoints_are_extractions(lc1, prog1):
    p, W = prog1
    confs = [tuple(W[c].argsort()) for c in p.checkpoints]
    for s, t in zip(confs, confs[1:]):
        assert C.is_extraction(lc1, s, t, 1)


def test_rotation_cover(lc1, prog1, prog2, lc2):
    p, W = prog1
    assert all(C.segment_rotation_cover(lc1, p, W))
    p2, W2 = prog2
    assert all(C.segment_rotation_cover(lc2, p2, W2))


def test_l_extraction_delegates(lc1):
    a = C.l_extraction_program(lc1, 1, 1)
    b = C.one_layer_extraction(lc1, 1)
    assert a.program.swaps == b.program.swaps


def test_level_two_program(lc2, prog2):
    p, W = prog2
    assert p.length == 252960
    assert C.is_extraction(lc2, lc2.sigma_s, p.endpoint, 2)
    assert C.count_extraction_chain(lc2, W, 1) >= C.CHAIN_BOUND
    assert C.count_extraction_chain(lc2, W, 2) == 1


def test_program_budget(lc2):
    with pytest.raises(BudgetExceeded):
        C.l_extraction_program(lc2, 2, 1, limit=1000)
    with pytest.raises(InputError):
        C.l_extraction_program(lc2, 3)
    with pytest.raises(InputError):
        C.one_layer_extraction(lc2)


def test_streaming_matches_stored(lc1, prog1):
    got = []
    p = C.l_extraction_program(lc1, 1, 2, sink=got.append, store=False)
    assert p.program.swaps == [] and got == prog1[0].program.swaps
    assert C.sigma_f(lc1) == C.one_layer_extraction(lc1, 1).endpoint


def test_trajectory_rejects_bad_swap(lc1):
    from fsgraph.fs_core import SwapSequence
    with pytest.raises(C.ConstructionError):
        C.trajectory(lc1, SwapSequence(lc1.sigma_s, [(0, 1), (0, 1), (5, 40)]))


# ---------------------------------------------------------------- checkers

def test_checkers_at_start(lc1, lc2):
    for lc in (lc1, lc2):
        s = lc.sigma_s
        assert C.check_rule_of_two(lc, s)
        assert C.check_layer_independence(lc, s) == (True,) * 4
        assert C.check_path_images(lc, s)
        assert C.check_knob_extract(lc, s)


def test_checkers_along_programs(lc1, prog1, lc2, prog2):
    for lc, (p, W) in ((lc1, prog1), (lc2, prog2)):
        for name, ok in C.check_all(lc, W).items():
            assert ok.all(), name


def test_rule_of_two_violation(lc1):
    lay = lc1.layer(1)
    s = _moved(lc1.sigma_s, lay.cycle_a[1], lay.path_a[5])
    assert not C.check_rule_of_two(lc1, s)


def test_layer_independence_violation(lc1):
    lay = lc1.layer(1)
    s = _moved(lc1.sigma_s, lay.knob_a, lay.path_b[3])
    assert not C.check_layer_independence(lc1, s)[0]


def test_random_walk_invariants(lc2):
    W = C.random_walk(lc2, 20000, seed=3)
    for name, ok in C.check_all(lc2, W).items():
        assert ok.all(), name


def test_is_left_cases(lc1):
    lay = lc1.layer(1)
    s = list(lc1.sigma_s)
    mu1, mu2 = lay.K_b[0], lay.K_b[1]
    # mu1 onto path_a, mu2 stays on path_b
    a, b = lay.path_a[3], s.index(mu1)
    s[a], s[b] = s[b], s[a]
    assert C.is_left(lc1, tuple(s), mu1, mu2) is True
    assert C.is_left(lc1, tuple(s), mu2, mu1) is False
    assert C.is_left(lc1, lc1.sigma_s, lay.K_a[0], lay.K_b[0]) is None
    assert C.is_left(lc1, lc1.sigma_s, lay.K_a[0], lay.K_a[0]) is None


def test_order_invariance_matches_is_left(lc1, prog1):
    p, W = prog1
    lay = lc1.layer(1)
    rng = np.random.default_rng(0)
    ref = lc1.sigma_s
    for t in rng.choice(len(W), 40, replace=False):
        s = tuple(W[t].argsort())
        for part in (lay.K_a, lay.K_b):
            for i, m1 in enumerate(part):
                for m2 in part[i + 1:]:
                    got = C.is_left(lc1, s, m1, m2)
                    if got is not None:
                        assert got == C.is_left(lc1, ref, m1, m2)
    assert C.order_invariance(lc1, W).all()


def test_order_invariance_detects_swap(lc1):
    lay = lc1.layer(1)
    s = _moved(lc1.sigma_s, lay.path_a[2], lay.path_a[3])
    assert not C.order_invariance(lc1, s)[0]


def test_is_extraction_self(lc1, lc2):
    assert not C.is_extraction(lc1, lc1.sigma_s, lc1.sigma_s, 1)
    assert not C.is_extraction(lc2, lc2.sigma_s, lc2.sigma_s, 2)


# ---------------------------------------------------------------- bounds and padding

def test_lower_bound():
    assert C.lower_bound(1) == 1
    assert C.lower_bound(3) == 625
    assert C.lower_bound(5) == 390625
    assert C.lower_bound(40) == 25 ** 39
    with pytest.raises(OverflowError):
        C.lower_bound(20, native_bits=64)
    assert C.lower_bound(13, native_bits=64) == 25 ** 12


def test_padded(lc1):
    X, Y, s = C.padded(1, 60)
    assert (X.n, X.m, Y.m) == (60, lc1.X.m, lc1.Y.m)
    X, Y, s = C.padded(1, 61)
    assert X.n == Y.n == 61 and X.degree(60) == Y.degree(60) == 0
    assert s == tuple(range(61))
    big = FsContext(X, Y)
    small = lc1.ctx()
    W = C.random_walk(lc1, 50, seed=1)
    for row in W[::10]:
        sig = tuple(row.argsort())
        assert len(neighbors(big, sig + (60,))) == len(neighbors(small, sig))
    with pytest.raises(InputError):
        C.padded(2, 100)


def test_graphs_json_roundtrip(lc1):
    import json
    d = json.loads(C.graphs_json(lc1))
    assert d["X"]["n"] == 60 and len(d["Y"]["edges"]) == 313
    assert d["names"]["layers"][0]["knobA"] == lc1.layer(1).knob_a
