import itertools
import random

import pytest
from hypothesis import strategies as st

from hadwigerlab.graphcore import Graph


def graph_from_bits(n, mask):
    pairs = list(itertools.combinations(range(n), 2))
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1)) if n > 1 else 0
    return graph_from_bits(n, mask)


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240601)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)
