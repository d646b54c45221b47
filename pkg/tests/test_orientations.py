import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsgraph.explorer import component_of, components
from fsgraph.fs_core import FsContext, identity
from fsgraph.graph_core import SimpleGraph, all_graphs, complement, make_named
from fsgraph.orientations import (AcyclicOrientation, OrientationError, acyclic_orientations,
                                  cycle_component, cycle_connectivity_predicate,
                                  cycle_signature, double_flip, double_flip_class_id,
                                  double_flip_classes, flip_class, flip_equivalent, inflip,
                                  linear_extensions, orientation_from, outflip)

from conftest import graphs


def test_orientation_from_examples():
    P = make_named("path", 3)
    assert orientation_from(identity(3), P).arcs() == [(0, 1), (1, 2)]
    assert orientation_from((2, 1, 0), P).arcs() == [(1, 0), (2, 1)]


@given(graphs(max_n=6), st.data())
def test_sigma_is_an_extension_of_its_orientation(g, data):
    sigma = tuple(data.draw(st.permutations(range(g.n))))
    alpha = orientation_from(sigma, g)
    assert alpha.is_acyclic()
    assert sigma in linear_extensions(alpha)
    assert all(orientation_from(s, g) == alpha for s in linear_extensions(alpha))


def test_linear_extension_examples():
    assert len(linear_extensions(orientation_from(identity(3), make_named("empty", 3)))) == 6
    chain = AcyclicOrientation.from_arcs(SimpleGraph(3, [(0, 1), (1, 2), (0, 2)]),
                                         [(0, 1), (1, 2), (0, 2)])
    assert linear_extensions(chain) == [(0, 1, 2)]
    vee = AcyclicOrientation.from_arcs(make_named("path", 3), [(0, 1), (2, 1)])
    assert sorted(linear_extensions(vee)) == [(0, 2, 1), (2, 0, 1)]


def test_cycle_is_rejected():
    with pytest.raises(OrientationError):
        AcyclicOrientation.from_arcs(make_named("cycle", 3), [(0, 1), (1, 2), (2, 0)])


def test_flip_examples():
    edge = AcyclicOrientation.from_arcs(make_named("path", 2), [(0, 1)])
    assert inflip(edge, 0).arcs() == [(1, 0)]
    lone = orientation_from(identity(3), SimpleGraph(3, [(0, 1)]))
    assert inflip(lone, 2) == lone
    with pytest.raises(OrientationError):
        inflip(edge, 1)


@given(graphs(max_n=6), st.data())
def test_inflip_outflip_inverse(g, data):
    alpha = orientation_from(tuple(data.draw(st.permutations(range(g.n)))), g)
    for v in alpha.sources():
        beta = inflip(alpha, v)
        assert beta.is_acyclic() and outflip(beta, v) == alpha


def test_full_round_of_inflips_returns():
    g = make_named("cycle", 4)
    alpha = orientation_from((2, 0, 3, 1), g)
    beta = alpha
    for v in linear_extensions(alpha)[0]:
        beta = inflip(beta, v)
    assert beta == alpha


def test_double_flip_examples():
    two = orientation_from(identity(2), make_named("empty", 2))
    assert double_flip(two, 0, 1) == two
    disjoint = SimpleGraph(4, [(0, 1), (2, 3)])
    a = AcyclicOrientation.from_arcs(disjoint, [(0, 1), (2, 3)])
    assert sorted(double_flip(a, 0, 3).arcs()) == [(1, 0), (3, 2)]
    with pytest.raises(OrientationError):
        double_flip(AcyclicOrientation.from_arcs(make_named("path", 2), [(0, 1)]), 0, 1)


def test_flip_equivalence_examples():
    edge = make_named("path", 2)
    a = AcyclicOrientation.from_arcs(edge, [(0, 1)])
    assert flip_equivalent(a, a) == (True, [])
    ok, seq = flip_equivalent(a, AcyclicOrientation.from_arcs(edge, [(1, 0)]))
    assert ok and seq == [0]
    tri = make_named("cycle", 3)
    one = AcyclicOrientation.from_arcs(tri, [(0, 1), (2, 1), (0, 2)])
    two = AcyclicOrientation.from_arcs(tri, [(0, 1), (1, 2), (0, 2)])
    assert cycle_signature(one) != cycle_signature(two)
    assert flip_equivalent(one, two) == (False, None)


def _replay_inflips(alpha, seq):
    for v in seq:
        alpha = inflip(alpha, v)
    return alpha


@pytest.mark.parametrize("n", range(1, 6))
def test_flip_equivalence_matches_closure(n):
    for g in all_graphs(n):
        acyc = acyclic_orientations(g)
        classes = {}
        for a in acyc:
            classes.setdefault(frozenset(flip_class(a)), []).append(a)
        reps = [min(c) for c in classes]
        cls_of = {a: min(c) for c in classes for a in c}
        for a in acyc[:6]:
            for b in acyc:
                ok, seq = flip_equivalent(a, b)
                assert ok == (cls_of[a] == cls_of[b])
                if ok:
                    assert len(seq) <= math.comb(n, 2)
                    assert _replay_inflips(a, seq) == b
        assert len(reps) == len(classes)


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=6), st.data())
def test_signature_invariant_under_flips(g, data):
    alpha = orientation_from(tuple(data.draw(st.permutations(range(g.n)))), g)
    sig = cycle_signature(alpha)
    for v in alpha.sources():
        assert cycle_signature(inflip(alpha, v)) == sig
    for v in alpha.sinks():
        assert cycle_signature(outflip(alpha, v)) == sig


def test_double_flip_class_examples():
    assert len(double_flip_classes(make_named("empty", 3))) == 1
    assert len(double_flip_classes(complement(make_named("star", 4)))) == 2


@pytest.mark.parametrize("n", [4, 5])
def test_double_flip_classes_index_cycle_components(n):
    X = make_named("cycle", n)
    for Y in all_graphs(n):
        ctx = FsContext(X, Y)
        comps = components(ctx)
        assert len(comps) == len(double_flip_classes(complement(Y)))
        for comp in comps[:3]:
            assert set(comp) == cycle_component(Y, comp[0])


def test_connectivity_predicate_examples():
    assert cycle_connectivity_predicate(make_named("complete", 5))
    assert not cycle_connectivity_predicate(complement(SimpleGraph(4, [(0, 1), (2, 3)])))
    assert not cycle_connectivity_predicate(complement(SimpleGraph(5, [(0, 1), (1, 2), (0, 2)])))
    with pytest.raises(ValueError):
        cycle_connectivity_predicate(make_named("complete", 2))


def test_class_ids_are_canonical():
    g = complement(make_named("star", 5))
    for cls in double_flip_classes(g):
        assert {double_flip_class_id(a) for a in cls} == {cls[0]}
