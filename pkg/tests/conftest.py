import pytest
from hypothesis import HealthCheck, settings, strategies as st

from p7cover.graph import Graph, is_connected_mask
from p7cover.oracle import random_graph

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

EDGE_PROBS = (0.15, 0.3, 0.5, 0.7)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    prob = draw(st.sampled_from(EDGE_PROBS))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    return random_graph(n, prob, seed)


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    prob = draw(st.sampled_from(EDGE_PROBS))
    seed = draw(st.integers(min_value=0, max_value=10**6))
    g = random_graph(n, prob, seed)
    if not is_connected_mask(g, g.full_mask):
        extra = [(u, u + 1) for u in range(n - 1)]
        g = Graph.from_edges(g.edges() + extra, n=n)
    return g


@pytest.fixture
def p4() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def c4() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def k3() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (0, 2)])
