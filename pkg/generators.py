'''
Description:
    Instance generators: rainbow complete graphs, the rainbow extremal family for the color neighborhood
    union condition, and seeded random edge-colored graphs.

    Extremal family for s >= 1: if s is even, the complete graph on (s+4)/2 vertices minus the edge {0, 1};
    if s is odd, the complete graph on (s+3)/2 vertices. Every edge gets its own color. The minimum color
    neighborhood union is exactly s and every longest heterochromatic path has length floor(s/2)+1.

    NOTE: Random instances use numpy's PCG64 bit generator seeded through numpy.random.SeedSequence(seed).
    Edges are visited in lexicographic order (0,1), (0,2), ..., (n-2,n-1); the generator first draws one
    uniform double per pair (edge kept if the draw is < p) and then one color per kept edge with
    Generator.integers(0, c). Equal (n, p, c, seed) therefore give byte-identical .ecg output.
'''

#import modules
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import networkx as nx
import numpy as np

from graph_core import EdgeColoredGraph, GraphDomainError


class GenKind(enum.Enum):
    RAINBOW_COMPLETE = 'rainbow-k'
    EXTREMAL_UNION = 'extremal'
    RANDOM = 'random'


@dataclass(frozen=True)
class GenSpec:
    '''A reproducible recipe for one generated graph.'''
    kind: GenKind
    n: Optional[int] = None
    s: Optional[int] = None
    p: Optional[float] = None
    c: Optional[int] = None
    seed: Optional[int] = None

    @classmethod
    def rainbow_complete(cls, n: int) -> GenSpec:
        return cls(GenKind.RAINBOW_COMPLETE, n=n)

    @classmethod
    def extremal_union(cls, s: int) -> GenSpec:
        return cls(GenKind.EXTREMAL_UNION, s=s)

    @classmethod
    def random(cls, n: int, p: float, c: int, seed: int) -> GenSpec:
        return cls(GenKind.RANDOM, n=n, p=p, c=c, seed=seed)

    def validate(self) -> None:
        if self.kind == GenKind.EXTREMAL_UNION:
            if self.s is None or self.s < 1:
                raise GraphDomainError(f"extremal graphs need s >= 1, got {self.s}")
            return
        if self.n is None or self.n < 1:
            raise GraphDomainError(f"generated graphs need n >= 1, got {self.n}")
        if self.kind == GenKind.RANDOM:
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise GraphDomainError(f"edge probability must be in [0, 1], got {self.p}")
            if self.c is None or self.c < 1:
                raise GraphDomainError(f"color count must be >= 1, got {self.c}")
            if self.seed is None or self.seed < 0:
                raise GraphDomainError(f"seed must be a nonnegative integer, got {self.seed}")

    def build(self) -> EdgeColoredGraph:
        self.validate()
        if self.kind == GenKind.RAINBOW_COMPLETE:
            return rainbow_complete(self.n)
        if self.kind == GenKind.EXTREMAL_UNION:
            return extremal_union(self.s)
        return random_colored(self.n, self.p, self.c, self.seed)

    def describe(self) -> str:
        '''The equivalent "gen" command line, echoed into .ecg comments and sweep records.'''
        if self.kind == GenKind.RAINBOW_COMPLETE:
            return f"gen rainbow-k --n {self.n}"
        if self.kind == GenKind.EXTREMAL_UNION:
            return f"gen extremal --s {self.s}"
        return f"gen random --n {self.n} --p {self.p!r} --c {self.c} --seed {self.seed}"

    def to_dict(self) -> dict:
        fields = {'kind': self.kind.value}
        for name in ('n', 's', 'p', 'c', 'seed'):
            value = getattr(self, name)
            if value is not None:
                fields[name] = value
        return fields


def _rainbow(graph: nx.Graph) -> EdgeColoredGraph:
    '''Colors the edges of a graph on nodes 0..n-1 with 0, 1, 2, ... in lexicographic edge order.'''
    edges = sorted((min(u, v), max(u, v)) for u, v in graph.edges())
    return EdgeColoredGraph(graph.number_of_nodes(), ((u, v, color) for color, (u, v) in enumerate(edges)))


def rainbow_complete(n: int) -> EdgeColoredGraph:
    '''
    Description:
        Complete graph K_n with n(n-1)/2 pairwise distinct colors 0..m-1 in lexicographic edge order.
    Input:
        n - number of vertices (>= 1)
    Output:
        the rainbow complete graph
    '''
    if n < 1:
        raise GraphDomainError(f"rainbow complete graphs need n >= 1, got {n}")
    return _rainbow(nx.complete_graph(n))


def extremal_union(s: int) -> EdgeColoredGraph:
    '''
    Description:
        Rainbow graph whose minimum color neighborhood union is exactly s and whose longest
        heterochromatic path has length floor(s/2)+1.
    Input:
        s - the color neighborhood union parameter (>= 1)
    Output:
        K_{(s+4)/2} minus the edge {0, 1} when s is even, K_{(s+3)/2} when s is odd, rainbow colored
    '''
    if s < 1:
        raise GraphDomainError(f"extremal graphs need s >= 1, got {s}")

    if s % 2 == 0:
        graph = nx.complete_graph((s + 4) // 2)
        graph.remove_edge(0, 1)
    else:
        graph = nx.complete_graph((s + 3) // 2)

    return _rainbow(graph)


def random_colored(n: int, p: float, c: int, seed: int) -> EdgeColoredGraph:
    '''
    Description:
        Erdos-Renyi style random graph: every vertex pair becomes an edge with probability p and every
        edge gets a color drawn uniformly from 0..c-1.
    Input:
        n - number of vertices (>= 1)
        p - edge probability in [0, 1]
        c - number of available colors (>= 1)
        seed - nonnegative integer seed; equal arguments always give the same graph
    Output:
        the random edge-colored graph
    '''
    GenSpec.random(n, p, c, seed).validate()

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]

    kept = rng.random(len(pairs)) < p
    chosen = [pair for pair, keep in zip(pairs, kept) if keep]
    colors = rng.integers(0, c, size=len(chosen))

    return EdgeColoredGraph(n, ((u, v, int(color)) for (u, v), color in zip(chosen, colors)))
