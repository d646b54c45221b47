import itertools

import pytest
from hypothesis import strategies as st

from fsgraph.graph_core import SimpleGraph


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run slow oracle tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: needs --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SimpleGraph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def graph_pairs(draw, min_n=2, max_n=5):
    n = draw(st.integers(min_n, max_n))
    X = draw(graphs(n, n))
    Y = draw(graphs(n, n))
    return X, Y


@st.composite
def configurations(draw, n):
    return tuple(draw(st.permutations(range(n))))
