"""Hypothesis strategies for small random graphs."""

from hypothesis import assume
from hypothesis import strategies as st

from bolt.errors import EmptyGraphError

from bolt.generators import generate_ba, generate_er
from bolt.graph import build_graph


@st.composite
def small_graphs(draw, max_nodes=14, connected=False):
    """Arbitrary simple graphs, possibly disconnected, with at least one edge."""
    n = draw(st.integers(2, max_nodes))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                          min_size=1, max_size=3 * n))
    edges = [(a, b) for a, b in edges if a != b] or [(0, 1)]
    if connected:
        # chain everything together so all nodes are reachable
        edges += [(i, i + 1) for i in range(n - 1)]
    return build_graph(edges)


@st.composite
def random_model_graphs(draw, max_nodes=40):
    n = draw(st.integers(5, max_nodes))
    seed = draw(st.integers(0, 2**32 - 1))
    if draw(st.booleans()):
        p = draw(st.floats(0.05, 0.4))
        try:
            return generate_er(n, p, seed)
        except EmptyGraphError:
            assume(False)
    k = draw(st.integers(1, 4))
    return generate_ba(n, k, seed)
