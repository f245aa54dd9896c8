import random

import pytest
from hypothesis import strategies as st

from antimagic import Graph


@st.composite
def simple_graphs(draw, max_vertices=7, max_edges=None, min_edges=0):
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)),
                           max_size=max_edges if max_edges is not None else len(pairs)))
    # random endpoint orientation; edge order is whatever the draw produced
    flips = draw(st.lists(st.booleans(), min_size=len(chosen), max_size=len(chosen)))
    edges = tuple((b, a) if f else (a, b) for (a, b), f in zip(chosen, flips))
    return Graph(n, edges)


@st.composite
def labeled_graphs(draw, **kw):
    g = draw(simple_graphs(**kw))
    labels = draw(st.permutations(range(1, g.edge_count + 1)))
    return g, tuple(labels)


def random_simple_graph(rng: random.Random, max_vertices: int = 8, p: float = 0.5) -> Graph:
    n = rng.randint(2, max_vertices)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    rng.shuffle(edges)
    return Graph(n, tuple(edges))


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
