from hypothesis import strategies as st

from ftreach import Digraph


@st.composite
def digraphs(draw, max_n: int = 6, max_m: int = 10, min_n: int = 2) -> Digraph:
    """Small loop-free multigraphs with ids 0..m-1."""
    n = draw(st.integers(min_n, max_n))
    edge = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    pairs = draw(st.lists(edge, max_size=max_m))
    return Digraph.from_pairs(n, pairs)


@st.composite
def graph_with_terminals(draw, max_n: int = 6, max_m: int = 10):
    g = draw(digraphs(max_n=max_n, max_m=max_m))
    s = draw(st.integers(0, g.n - 1))
    t = draw(st.integers(0, g.n - 1).filter(lambda v: v != s))
    return g, s, t
