'''Small graph builders and hypothesis strategies shared by the test modules.'''

from hypothesis import strategies as st

from graph_core import EdgeColoredGraph


def path_graph(*colors: int) -> EdgeColoredGraph:
    '''Path 0-1-2-... whose consecutive edges get the given colors.'''
    return EdgeColoredGraph(len(colors) + 1, [(i, i + 1, color) for i, color in enumerate(colors)])


def monochromatic_star(leaves: int = 3, color: int = 7) -> EdgeColoredGraph:
    '''Star with center 0.'''
    return EdgeColoredGraph(leaves + 1, [(0, leaf, color) for leaf in range(1, leaves + 1)])


def monochromatic_complete(n: int, color: int = 0) -> EdgeColoredGraph:
    return EdgeColoredGraph(n, [(u, v, color) for u in range(n) for v in range(u + 1, n)])


@st.composite
def edge_colored_graphs(draw, min_n: int = 1, max_n: int = 7, max_colors: int = 8) -> EdgeColoredGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    kept = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    colors = draw(st.lists(st.integers(min_value=0, max_value=max_colors - 1), min_size=len(pairs), max_size=len(pairs)))
    return EdgeColoredGraph(n, [(u, v, color) for (u, v), keep, color in zip(pairs, kept, colors) if keep])


@st.composite
def graphs_with_vertex(draw, **kwargs) -> tuple[EdgeColoredGraph, int]:
    g = draw(edge_colored_graphs(**kwargs))
    return g, draw(st.integers(min_value=0, max_value=g.n - 1))
