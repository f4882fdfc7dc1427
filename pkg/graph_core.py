'''
Description:
    Edge-colored graph model used by every other module. A graph is simple and undirected, every edge
    carries one nonnegative integer color, and the graph never changes after it is built.
    This module also reads and writes the .ecg text format:

        # comment lines start with a hash
        ecg <n> <m>
        <u> <v> <c>        (exactly m lines, 0 <= u < v < n, c >= 0)

    NOTE: Colors keep their on-disk labels for output, but they are re-indexed densely (0..c(G)-1, in
    ascending label order) when the graph is built so that color sets can be stored as integer bitmasks.
    NOTE: Vertex ids are always 0..n-1 with no gaps.
'''

#import modules
from __future__ import annotations

import os
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional

import networkx as nx


class GraphDomainError(ValueError):
    '''Raised when an operation is called with arguments outside its domain.'''


class EcgParseError(GraphDomainError):
    '''Raised when .ecg text cannot be parsed. The message always starts with the line number.'''

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class ColorSet:
    '''
    Description:
        Immutable set of colors of one graph, stored as a bitmask over the graph's dense color index.
        Iterating yields the original color labels in ascending order.
    '''

    __slots__ = ('_mask', '_palette')

    def __init__(self, mask: int, palette: tuple[int, ...]):
        self._mask = mask
        self._palette = palette

    @property
    def mask(self) -> int:
        return self._mask

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        mask = self._mask
        while mask:
            low = mask & -mask
            yield self._palette[low.bit_length() - 1]
            mask ^= low

    def __contains__(self, label: object) -> bool:
        for index, value in enumerate(self._palette):
            if value == label:
                return bool(self._mask >> index & 1)
        return False

    def _check_same_graph(self, other: ColorSet) -> None:
        if self._palette is not other._palette and self._palette != other._palette:
            raise GraphDomainError("color sets belong to graphs with different palettes")

    def union(self, other: ColorSet) -> ColorSet:
        self._check_same_graph(other)
        return ColorSet(self._mask | other._mask, self._palette)

    def difference(self, other: ColorSet) -> ColorSet:
        self._check_same_graph(other)
        return ColorSet(self._mask & ~other._mask, self._palette)

    def intersection(self, other: ColorSet) -> ColorSet:
        self._check_same_graph(other)
        return ColorSet(self._mask & other._mask, self._palette)

    __or__ = union
    __sub__ = difference
    __and__ = intersection

    def labels(self) -> frozenset[int]:
        return frozenset(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ColorSet):
            return self.labels() == other.labels()
        if isinstance(other, (set, frozenset)):
            return self.labels() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.labels())

    def __repr__(self) -> str:
        return f"ColorSet({sorted(self)})"


class GraphStats(NamedTuple):
    k: int  #minimum color degree
    s: Optional[int]  #minimum |CN(u) | CN(v)| over vertex pairs, None when n < 2
    c: int  #number of distinct colors


class EdgeColoredGraph:
    '''
    Description:
        Immutable simple undirected graph with one color per edge.
    Input:
        n - number of vertices (ids 0..n-1)
        edges - iterable of (u, v, color) triples, each unordered pair at most once
    '''

    __slots__ = ('_n', '_edges', '_palette', '_neighbors', '_color_index', '_cn_masks')

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]]):
        if n < 0:
            raise GraphDomainError(f"vertex count must be nonnegative, got {n}")

        edge_colors: dict[tuple[int, int], int] = {}
        for u, v, color in edges:
            if u == v:
                raise GraphDomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphDomainError(f"edge {{{u},{v}}} has a vertex outside 0..{n - 1}")
            if color < 0:
                raise GraphDomainError(f"edge {{{u},{v}}} has a negative color {color}")
            key = (u, v) if u < v else (v, u)
            if key in edge_colors:
                raise GraphDomainError(f"parallel edge {{{key[0]},{key[1]}}}")
            edge_colors[key] = color

        self._n = n
        self._edges = dict(sorted(edge_colors.items()))

        #dense color index in ascending label order
        self._palette = tuple(sorted(set(edge_colors.values())))
        dense = {label: index for index, label in enumerate(self._palette)}

        neighbors: list[list[int]] = [[] for _ in range(n)]
        color_index: list[dict[int, int]] = [{} for _ in range(n)]
        cn_masks = [0] * n
        for (u, v), label in self._edges.items():
            index = dense[label]
            neighbors[u].append(v)
            neighbors[v].append(u)
            color_index[u][v] = index
            color_index[v][u] = index
            cn_masks[u] |= 1 << index
            cn_masks[v] |= 1 << index

        self._neighbors = tuple(tuple(sorted(adjacent)) for adjacent in neighbors)
        self._color_index = tuple(color_index)
        self._cn_masks = tuple(cn_masks)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def palette(self) -> tuple[int, ...]:
        '''Distinct color labels in ascending order; position = dense color index.'''
        return self._palette

    @property
    def num_colors(self) -> int:
        return len(self._palette)

    def edges(self) -> Iterator[tuple[int, int, int]]:
        '''Yields (u, v, color) with u < v in lexicographic edge order.'''
        for (u, v), label in self._edges.items():
            yield u, v, label

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphDomainError(f"vertex {v} is outside 0..{self._n - 1}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._neighbors[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._color_index[u]

    def color(self, u: int, v: int) -> Optional[int]:
        '''Color label of edge {u, v}, or None if the edge does not exist.'''
        index = self.color_index(u, v)
        return None if index < 0 else self._palette[index]

    def color_index(self, u: int, v: int) -> int:
        '''Dense color index of edge {u, v}, or -1 if the edge does not exist.'''
        if not 0 <= u < self._n:
            return -1
        return self._color_index[u].get(v, -1)

    def adjacency_colors(self, v: int) -> Mapping[int, int]:
        '''Read-only view neighbor -> dense color index for vertex v.'''
        self.check_vertex(v)
        return self._color_index[v]

    def cn_mask(self, v: int) -> int:
        self.check_vertex(v)
        return self._cn_masks[v]

    def color_set(self, mask: int) -> ColorSet:
        return ColorSet(mask, self._palette)

    def relabel_colors(self, mapping: Mapping[int, int]) -> EdgeColoredGraph:
        '''Returns a new graph with every color label replaced by mapping[label].'''
        return EdgeColoredGraph(self._n, ((u, v, mapping[label]) for u, v, label in self.edges()))

    def to_networkx(self) -> nx.Graph:
        '''Exports to a networkx Graph with the color label stored in the "color" edge attribute.'''
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from((u, v, {'color': label}) for u, v, label in self.edges())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoredGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._edges.items())))

    def __repr__(self) -> str:
        return f"EdgeColoredGraph(n={self._n}, m={self.m}, colors={self.num_colors})"


def color_neighborhood(g: EdgeColoredGraph, v: int) -> ColorSet:
    '''
    Description:
        Returns CN(v), the set of colors on the edges incident with v.
    Input:
        g - the edge-colored graph
        v - a vertex of g
    Output:
        the color neighborhood as a ColorSet
    '''
    return g.color_set(g.cn_mask(v))


def color_degree(g: EdgeColoredGraph, v: int) -> int:
    return g.cn_mask(v).bit_count()


def cn_union(g: EdgeColoredGraph, u: int, v: int) -> int:
    '''Returns |CN(u) | CN(v)| for two distinct vertices.'''
    if u == v:
        raise GraphDomainError(f"cn_union needs two distinct vertices, got {u} twice")
    return (g.cn_mask(u) | g.cn_mask(v)).bit_count()


def graph_stats(g: EdgeColoredGraph) -> GraphStats:
    '''
    Description:
        Collects the hypotheses the bound checks work with.
    Input:
        g - the edge-colored graph (at least one vertex)
    Output:
        GraphStats(k, s, c) with k the minimum color degree, s the minimum color neighborhood union over
        all vertex pairs (None when n = 1) and c the number of distinct colors
    '''
    if g.n == 0:
        raise GraphDomainError("graph statistics need at least one vertex")

    masks = [g.cn_mask(v) for v in range(g.n)]
    k = min(mask.bit_count() for mask in masks)

    s = None
    if g.n >= 2:
        s = min((masks[u] | masks[v]).bit_count() for u in range(g.n) for v in range(u + 1, g.n))

    return GraphStats(k, s, g.num_colors)


def parse_ecg(text: str) -> EdgeColoredGraph:
    '''
    Description:
        Parses .ecg text into a graph. LF and CRLF line endings are both accepted.
    Input:
        text - the content of a .ecg file
    Output:
        the parsed EdgeColoredGraph
    Raises:
        EcgParseError with the offending line number for malformed headers or edge lines, duplicate
        edges, self-loops, vertices out of range and a wrong edge count
    '''

    header: Optional[tuple[int, int]] = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0

    #lines end at LF only (CRLF tolerated)
    lines = text.split('\n')
    if text.endswith('\n'):
        lines.pop()

    for line_number, raw_line in enumerate(lines, start=1):
        last_line = line_number
        line = raw_line.removesuffix('\r').strip()

        #skip blank lines and comments
        if not line or line.startswith('#'):
            continue

        fields = line.split()

        if header is None:
            if len(fields) != 3 or fields[0] != 'ecg':
                raise EcgParseError(line_number, f"expected header 'ecg <n> <m>', got {line!r}")
            n, m = _parse_counts(line_number, fields[1:])
            header = (n, m)
            continue

        if len(edges) == header[1]:
            raise EcgParseError(line_number, f"more than the {header[1]} edge lines declared in the header")
        if len(fields) != 3:
            raise EcgParseError(line_number, f"expected '<u> <v> <c>', got {line!r}")

        u, v, color = _parse_counts(line_number, fields)
        n = header[0]
        if u == v:
            raise EcgParseError(line_number, f"self-loop at vertex {u}")
        if u >= n or v >= n:
            raise EcgParseError(line_number, f"vertex out of range 0..{n - 1}")
        if u > v:
            raise EcgParseError(line_number, f"edge endpoints must be written u < v, got {u} {v}")
        if (u, v) in seen:
            raise EcgParseError(line_number, f"parallel edge {u} {v}")
        seen.add((u, v))
        edges.append((u, v, color))

    if header is None:
        raise EcgParseError(max(last_line, 1), "missing header 'ecg <n> <m>'")
    if len(edges) != header[1]:
        raise EcgParseError(max(last_line, 1), f"header declares {header[1]} edges but {len(edges)} were found")

    return EdgeColoredGraph(header[0], edges)


def _parse_counts(line_number: int, fields: list[str]) -> tuple[int, ...]:
    values = []
    for field in fields:
        if field.startswith('-') and field[1:].isascii() and field[1:].isdigit():
            raise EcgParseError(line_number, f"{field!r} is negative")
        #plain ASCII digits only: no signs, underscores or other scripts
        if not (field.isascii() and field.isdigit()):
            raise EcgParseError(line_number, f"{field!r} is not an integer")
        values.append(int(field))
    return tuple(values)


def serialize_ecg(g: EdgeColoredGraph, comments: Iterable[str] = ()) -> str:
    '''Serializes a graph to .ecg text (LF line endings, edges in lexicographic order).'''
    lines = [f"# {comment}" for comment in comments]
    lines.append(f"ecg {g.n} {g.m}")
    lines.extend(f"{u} {v} {label}" for u, v, label in g.edges())
    return '\n'.join(lines) + '\n'


def read_ecg(path: str) -> EdgeColoredGraph:
    with open(path, mode='rb') as file:
        data = file.read()

    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as error:
        raise EcgParseError(data.count(b'\n', 0, error.start) + 1, f"invalid UTF-8 byte at offset {error.start}") from None

    return parse_ecg(text)


def write_ecg(path: str, g: EdgeColoredGraph, comments: Iterable[str] = ()) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, mode='w', encoding='utf-8', newline='\n') as file:
        file.write(serialize_ecg(g, comments))
