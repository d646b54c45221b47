import itertools
import math

import pytest
from hypothesis import given, settings

from fsgraph.config import Budget, BudgetExceeded, set_budget, current_budget
from fsgraph.explorer import (bfs_distances, component_diameter, component_of, components,
                              diameter_two_sweep, distance, explore_report, fs_girth,
                              is_connected_fs, is_cycle_component, max_component_diameter)
from fsgraph.fs_core import FsContext, identity
from fsgraph.girth_probe import bowtie
from fsgraph.graph_core import SimpleGraph, make_named

from conftest import graphs


def ctx_of(x, y):
    return FsContext(make_named(*x), make_named(*y))


def test_component_examples():
    assert len(component_of(ctx_of(("path", 2), ("complete", 2)), (0, 1))) == 2
    assert len(component_of(ctx_of(("cycle", 4), ("star", 4)), (2, 0, 3, 1))) == 12
    assert component_of(ctx_of(("path", 3), ("empty", 3)), (0, 1, 2)) == {(0, 1, 2)}


def test_distance_examples():
    ctx = ctx_of(("path", 4), ("complete", 4))
    assert distance(ctx, identity(4), identity(4)) == 0
    assert distance(ctx, identity(4), (3, 2, 1, 0)) == 6
    assert distance(ctx_of(("path", 3), ("complete", 3)), (0, 1, 2), (2, 1, 0)) == 3
    assert distance(ctx_of(("path", 3), ("path", 3)), (0, 1, 2), (2, 1, 0)) == math.inf


def test_diameter_examples():
    assert max_component_diameter(ctx_of(("path", 4), ("complete", 4))) == 6
    assert max_component_diameter(ctx_of(("cycle", 5), ("complete", 5))) == 6
    assert component_diameter(ctx_of(("cycle", 4), ("star", 4)), identity(4)) == 6


def test_two_sweep_is_a_lower_bound():
    ctx = ctx_of(("cycle", 5), ("path", 5))
    for comp in components(ctx)[:5]:
        s = comp[0]
        assert diameter_two_sweep(ctx, s) <= component_diameter(ctx, s)


def test_threaded_eccentricities_agree():
    ctx = ctx_of(("path", 6), ("complete", 6))
    assert component_diameter(ctx, identity(6), threads=4) == 15


def test_girth_examples():
    assert fs_girth(ctx_of(("cycle", 4), ("star", 4))) == 12
    assert fs_girth(FsContext(bowtie(), make_named("star", 5))) == 6
    assert fs_girth(ctx_of(("path", 3), ("complete", 3))) == 6
    assert fs_girth(ctx_of(("path", 4), ("empty", 4))) == math.inf


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=5), graphs(min_n=2, max_n=5))
def test_girth_is_even(x, y):
    if x.n != y.n:
        return
    g = fs_girth(FsContext(x, y))
    assert g == math.inf or g % 2 == 0


def test_cycle_component_examples():
    ctx = ctx_of(("cycle", 5), ("star", 5))
    comp = component_of(ctx, identity(5))
    assert len(comp) == 20 and is_cycle_component(ctx, comp)
    k4 = ctx_of(("path", 4), ("complete", 4))
    assert not is_cycle_component(k4, component_of(k4, identity(4)))
    empty = ctx_of(("path", 3), ("empty", 3))
    assert not is_cycle_component(empty, {identity(3)})


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_star_components(n):
    ctx = ctx_of(("cycle", n), ("star", n))
    comps = components(ctx)
    assert len(comps) == math.factorial(n) // (n * (n - 1))
    assert all(len(c) == n * (n - 1) and is_cycle_component(ctx, c) for c in comps)


def test_connectivity_examples():
    assert is_connected_fs(ctx_of(("cycle", 4), ("complete", 4)))
    assert not is_connected_fs(ctx_of(("path", 3), ("path", 3)))
    disconnected = SimpleGraph(4, [(0, 1), (2, 3)])
    assert not is_connected_fs(FsContext(make_named("complete", 4), disconnected))


def test_components_partition():
    ctx = ctx_of(("path", 4), ("path", 4))
    comps = components(ctx)
    flat = [s for c in comps for s in c]
    assert len(flat) == len(set(flat)) == 24
    assert comps[0][0] == identity(4)


def test_budget_errors():
    old = current_budget()
    try:
        set_budget(Budget(max_n=3))
        with pytest.raises(BudgetExceeded):
            bfs_distances(ctx_of(("path", 4), ("complete", 4)), identity(4))
        set_budget(Budget(max_states=10))
        with pytest.raises(BudgetExceeded) as err:
            bfs_distances(ctx_of(("path", 4), ("complete", 4)), identity(4))
        assert err.value.visited > 10
    finally:
        set_budget(old)


def test_report_shape():
    rep = explore_report(ctx_of(("cycle", 4), ("star", 4)))
    assert rep["connected"] is False and rep["girth"] == 12
    assert [(c["size"], c["is_cycle"]) for c in rep["components"]] == [(12, True), (12, True)]


def test_distances_symmetric():
    ctx = ctx_of(("cycle", 5), ("path", 5))
    for s, t in itertools.islice(itertools.combinations(itertools.permutations(range(5)), 2), 0, 400, 37):
        assert distance(ctx, s, t) == distance(ctx, t, s)
