import pytest
from hypothesis import strategies as st

from wheelsat.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    npairs = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << npairs) - 1))
    # an extra AND/OR mask skews density towards sparse or dense graphs
    mode = draw(st.sampled_from(("plain", "sparse", "dense")))
    if mode != "plain":
        other = draw(st.integers(0, (1 << npairs) - 1))
        mask = mask & other if mode == "sparse" else mask | other
    adj = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> k & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, tuple(adj))


@st.composite
def relabeled(draw, min_n=1, max_n=12):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, g.relabel(perm)


@pytest.fixture(scope="session")
def labeled_6():
    from oracles import labeled_graphs

    return list(labeled_graphs(6))
