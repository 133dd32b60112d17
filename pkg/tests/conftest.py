from __future__ import annotations

import networkx as nx
from hypothesis import strategies as st

from treestatus.graph import Graph, Tree
from treestatus.oracle import prufer_decode


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 14) -> Tree:
    """Uniform-ish labelled trees via random Pruefer codes."""
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return Tree(1, [])
    if n == 2:
        return Tree(2, [(0, 1)])
    code = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(code, n)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_statuses(g: Graph) -> list[int]:
    h = to_nx(g)
    return [sum(nx.single_source_shortest_path_length(h, v).values()) for v in range(g.n)]
