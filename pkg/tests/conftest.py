import os
import random
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from onelap.graph import Graph, named_graph  # noqa: E402


@pytest.fixture
def G6():
    return named_graph("G6")


def random_connected(rng, n, p=None):
    """Random spanning tree plus extra edges; always connected."""
    p = rng.uniform(0.1, 0.7) if p is None else p
    order = list(range(1, n + 1))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < p:
                edges.add((i, j))
    return Graph(n, frozenset(edges))


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_connected(random.Random(seed), n)


def corpus(count=200, max_n=8, seed=2024):
    rng = random.Random(seed)
    return [random_connected(rng, rng.randint(2, max_n)) for _ in range(count)]
