import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsgraph.fs_core import (FsContext, SwapError, SwapSequence, apply_swap, fs_edge_count,
                             from_word, identity, inverse, neighbors, parity_class, replay,
                             to_word, validate_sequence)
from fsgraph.graph_core import make_named

from conftest import graph_pairs


def ctx_of(x, y):
    return FsContext(make_named(*x), make_named(*y))


def test_apply_swap_examples():
    ctx = ctx_of(("path", 2), ("complete", 2))
    assert apply_swap(ctx, (0, 1), (0, 1)) == (1, 0)
    with pytest.raises(SwapError, match="not friends"):
        apply_swap(ctx_of(("path", 2), ("empty", 2)), (0, 1), (0, 1))
    with pytest.raises(SwapError, match="not an edge"):
        apply_swap(ctx_of(("path", 3), ("complete", 3)), (0, 1, 2), (0, 2))
    star = ctx_of(("star", 4), ("star", 4))
    moved = apply_swap(star, (0, 1, 2, 3), (0, 1))
    assert moved.index(0) == 1


@given(graph_pairs(), st.data())
def test_swap_is_an_involution(pair, data):
    ctx = FsContext(*pair)
    sigma = tuple(data.draw(st.permutations(range(ctx.n))))
    for tau in neighbors(ctx, sigma):
        e = tuple(x for x in range(ctx.n) if sigma[x] != tau[x])
        assert apply_swap(ctx, tau, e) == sigma


def test_neighbor_examples():
    assert len(neighbors(ctx_of(("path", 2), ("complete", 2)), (0, 1))) == 1
    assert len(neighbors(ctx_of(("path", 3), ("complete", 3)), (0, 1, 2))) == 2
    ctx = ctx_of(("cycle", 6), ("star", 6))
    assert all(len(neighbors(ctx, s)) == 2 for s in itertools.permutations(range(6)))


def test_edge_count_examples():
    assert fs_edge_count(ctx_of(("path", 3), ("complete", 3))) == 6
    assert fs_edge_count(ctx_of(("path", 2), ("complete", 2))) == 1
    ctx = ctx_of(("path", 4), ("complete", 4))
    brute = sum(1 for s, t in itertools.product(itertools.permutations(range(4)), repeat=2)
                if t in neighbors(ctx, s))
    assert brute == 2 * 36


def test_edge_count_is_exact_beyond_machine_words():
    ctx = ctx_of(("complete", 30), ("complete", 30))
    assert fs_edge_count(ctx) == 435 * 435 * math.factorial(28)


@settings(max_examples=40, deadline=None)
@given(graph_pairs(max_n=5))
def test_edge_count_matches_brute_force(pair):
    ctx = FsContext(*pair)
    brute = sum(len(neighbors(ctx, s)) for s in itertools.permutations(range(ctx.n))) // 2
    assert fs_edge_count(ctx) == brute


def test_parity_examples():
    assert parity_class(identity(5)) == "even"
    assert parity_class((1, 0, 2, 3)) == "odd"


@settings(max_examples=30, deadline=None)
@given(graph_pairs(max_n=5))
def test_bipartite_by_parity(pair):
    ctx = FsContext(*pair)
    for s in itertools.permutations(range(ctx.n)):
        for t in neighbors(ctx, s):
            assert parity_class(s) != parity_class(t)


@settings(max_examples=25, deadline=None)
@given(graph_pairs(max_n=5))
def test_fs_symmetric_under_inversion(pair):
    X, Y = pair
    a, b = FsContext(X, Y), FsContext(Y, X)
    for s in itertools.permutations(range(X.n)):
        assert {inverse(t) for t in neighbors(a, s)} == set(neighbors(b, inverse(s)))


def test_automorphism_preserves_degree():
    X, Y = make_named("cycle", 5), make_named("path", 5)
    ctx = FsContext(X, Y)
    rot = [1, 2, 3, 4, 0]
    for s in itertools.permutations(range(5)):
        moved = tuple(s[rot.index(x)] for x in range(5))
        assert len(neighbors(ctx, s)) == len(neighbors(ctx, moved))


def test_validate_sequence():
    ctx = ctx_of(("path", 4), ("complete", 4))
    assert validate_sequence(ctx, SwapSequence(identity(4))) == identity(4)
    seq = SwapSequence(identity(4), [(0, 1), (1, 2), (2, 3)])
    assert validate_sequence(ctx, seq) == (1, 2, 3, 0)
    bad = SwapSequence(identity(4), [(0, 1), (1, 2), (0, 3)])
    with pytest.raises(SwapError) as err:
        validate_sequence(ctx, bad)
    assert err.value.index == 2
    sparse = ctx_of(("path", 3), ("path", 3))
    with pytest.raises(SwapError) as err:
        validate_sequence(sparse, SwapSequence(identity(3), [(0, 1), (1, 2)]))
    assert err.value.index == 1


def test_serialization():
    seq = SwapSequence((2, 0, 1), [(0, 1)])
    assert SwapSequence.from_json(seq.to_json()) == seq
    assert from_word(to_word((2, 0, 1))) == (2, 0, 1)
    assert list(replay(ctx_of(("path", 3), ("complete", 3)), seq))[-1] == (0, 2, 1)
