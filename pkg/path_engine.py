'''
Description:
    Heterochromatic (rainbow) paths and the move catalog used to rearrange and extend them.
    A move builds a new vertex sequence out of the current path purely combinatorially, and the new
    sequence is kept only if it is still heterochromatic in the graph. Positions are 1-based: for a path
    u_1 u_2 ... u_{l+1}, x = 3 refers to u_3.

    Move templates on P = u_1 ... u_{l+1}:
        TailExtend(v)       u_1, ..., u_{l+1}, v
        HeadExtend(v)       v, u_1, ..., u_{l+1}
        Rotation(x)         u_{x-1}, ..., u_1, u_x, ..., u_{l+1}              (chord u_1 u_x, 3 <= x <= l+1)
        Detour(x, v)        u_1, ..., u_x, v, u_{x+2}, ..., u_{l+1}           (1 <= x <= l-1)
        Insertion(x)        u_2, ..., u_x, u_1, u_{x+1}, ..., u_{l+1}         (2 <= x <= l+1)
        CycleRotation(x)    u_x, ..., u_{l+1}, u_1, ..., u_{x-1}              (chord u_{l+1} u_1, 2 <= x <= l+1)

    NOTE: Only the two extends change the length (by +1). The "rotate then extend" patterns are a
    rearrangement followed by an extend, e.g. Rotation(x) then TailExtend(v), or CycleRotation(x) then
    HeadExtend(v).
'''

#import modules
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from graph_core import ColorSet, EdgeColoredGraph, GraphDomainError

logger = logging.getLogger(__name__)


class PathDefect(enum.Enum):
    NONE = 'none'
    EMPTY = 'empty'
    OUT_OF_RANGE = 'vertex out of range'
    REPEATED_VERTEX = 'repeated vertex'
    NON_ADJACENT = 'non-adjacent consecutive vertices'
    REPEATED_COLOR = 'repeated color'


class MoveKind(enum.IntEnum):
    #the ordinal is the tie-breaking order between moves
    TAIL_EXTEND = 0
    HEAD_EXTEND = 1
    ROTATION = 2
    DETOUR = 3
    INSERTION = 4
    CYCLE_ROTATION = 5


@dataclass(frozen=True, order=True)
class Move:
    '''
    A move template with its parameters. x is a 1-based path position (unused by the extends), v an
    external vertex (only used by the extends and by Detour).
    '''
    kind: MoveKind
    x: int = 0
    v: int = -1

    @classmethod
    def tail_extend(cls, v: int) -> Move:
        return cls(MoveKind.TAIL_EXTEND, v=v)

    @classmethod
    def head_extend(cls, v: int) -> Move:
        return cls(MoveKind.HEAD_EXTEND, v=v)

    @classmethod
    def rotation(cls, x: int) -> Move:
        return cls(MoveKind.ROTATION, x=x)

    @classmethod
    def detour(cls, x: int, v: int) -> Move:
        return cls(MoveKind.DETOUR, x=x, v=v)

    @classmethod
    def insertion(cls, x: int) -> Move:
        return cls(MoveKind.INSERTION, x=x)

    @classmethod
    def cycle_rotation(cls, x: int) -> Move:
        return cls(MoveKind.CYCLE_ROTATION, x=x)

    @property
    def is_extend(self) -> bool:
        return self.kind in (MoveKind.TAIL_EXTEND, MoveKind.HEAD_EXTEND)

    def __str__(self) -> str:
        name = self.kind.name.title().replace('_', '')
        if self.is_extend:
            return f"{name}(v={self.v})"
        if self.kind == MoveKind.DETOUR:
            return f"{name}(x={self.x}, v={self.v})"
        return f"{name}(x={self.x})"


@dataclass(frozen=True)
class HeteroPath:
    '''A heterochromatic path: its vertex sequence and the set of its edge colors.'''
    vertices: tuple[int, ...]
    colors: ColorSet

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def head(self) -> int:
        return self.vertices[0]

    @property
    def tail(self) -> int:
        return self.vertices[-1]

    def edge_colors(self, g: EdgeColoredGraph) -> list[int]:
        '''Color labels of the consecutive edges, in path order.'''
        return [g.color(a, b) for a, b in zip(self.vertices, self.vertices[1:])]

    def render(self, g: EdgeColoredGraph) -> str:
        '''Renders as "length <l>: v0 v1 ... vl" followed by a "colors: ..." line.'''
        vertices = ' '.join(str(v) for v in self.vertices)
        colors = ' '.join(str(c) for c in self.edge_colors(g))
        return f"length {self.length}: {vertices}\ncolors: {colors}".rstrip()


def sequence_color_mask(g: EdgeColoredGraph, seq: Sequence[int]) -> tuple[PathDefect, int]:
    '''
    Description:
        Walks a vertex sequence once and collects its edge colors as a dense bitmask.
    Input:
        g - the edge-colored graph
        seq - the vertex sequence to check
    Output:
        (defect, mask) - defect is PathDefect.NONE when seq is heterochromatic, mask holds the colors
        collected up to the first defect
    '''
    if not seq:
        return PathDefect.EMPTY, 0

    n = g.n
    seen = 0
    used = 0
    previous = -1
    for vertex in seq:
        if not 0 <= vertex < n:
            return PathDefect.OUT_OF_RANGE, used
        bit = 1 << vertex
        if seen & bit:
            return PathDefect.REPEATED_VERTEX, used
        seen |= bit
        if previous >= 0:
            index = g.color_index(previous, vertex)
            if index < 0:
                return PathDefect.NON_ADJACENT, used
            if used >> index & 1:
                return PathDefect.REPEATED_COLOR, used
            used |= 1 << index
        previous = vertex

    return PathDefect.NONE, used


def path_defect(g: EdgeColoredGraph, seq: Sequence[int]) -> PathDefect:
    '''Returns why seq is not a heterochromatic path in g, or PathDefect.NONE if it is one.'''
    return sequence_color_mask(g, seq)[0]


def is_heterochromatic(g: EdgeColoredGraph, seq: Sequence[int]) -> bool:
    return path_defect(g, seq) is PathDefect.NONE


def make_path(g: EdgeColoredGraph, seq: Sequence[int]) -> HeteroPath:
    '''Builds a HeteroPath from a vertex sequence, raising GraphDomainError if it is not heterochromatic.'''
    defect, mask = sequence_color_mask(g, seq)
    if defect is not PathDefect.NONE:
        raise GraphDomainError(f"{list(seq)} is not a heterochromatic path: {defect.value}")
    return HeteroPath(tuple(seq), g.color_set(mask))


def single_vertex_path(g: EdgeColoredGraph, start: int) -> HeteroPath:
    g.check_vertex(start)
    return HeteroPath((start,), g.color_set(0))


def candidate_sequence(path: HeteroPath, move: Move) -> tuple[int, ...]:
    '''
    Description:
        Builds the rearranged vertex sequence a move produces, without looking at the graph.
    Input:
        path - the current path u_1 ... u_{l+1}
        move - the move to apply (positions are 1-based)
    Output:
        the candidate vertex sequence
    Raises:
        GraphDomainError when the move position is out of range for the path
    '''
    u = path.vertices
    l = len(u) - 1
    kind, x = move.kind, move.x

    if kind == MoveKind.TAIL_EXTEND:
        return u + (move.v,)
    if kind == MoveKind.HEAD_EXTEND:
        return (move.v,) + u

    if kind == MoveKind.ROTATION:
        _check_position(move, 3, l + 1)
        #u_{x-1} P^-1 u_1, then u_x P u_{l+1}
        return u[x - 2::-1] + u[x - 1:]
    if kind == MoveKind.DETOUR:
        _check_position(move, 1, l - 1)
        return u[:x] + (move.v,) + u[x + 1:]
    if kind == MoveKind.INSERTION:
        _check_position(move, 2, l + 1)
        return u[1:x] + (u[0],) + u[x:]
    if kind == MoveKind.CYCLE_ROTATION:
        if l < 2:
            raise GraphDomainError(f"{move} needs a path of length at least 2, got {l}")
        _check_position(move, 2, l + 1)
        return u[x - 1:] + u[:x - 1]

    raise GraphDomainError(f"unknown move kind {kind!r}")


def _check_position(move: Move, low: int, high: int) -> None:
    if not low <= move.x <= high:
        raise GraphDomainError(f"{move}: position must be in {low}..{high}")


def apply_move(g: EdgeColoredGraph, path: HeteroPath, move: Move) -> Optional[HeteroPath]:
    '''
    Description:
        Applies a move and keeps the result only if it is a heterochromatic path of g.
    Input:
        g - the edge-colored graph
        path - a valid path of g
        move - the move to apply
    Output:
        the new path with recomputed colors, or None if the candidate sequence is not heterochromatic
    Raises:
        GraphDomainError for a position out of range or an external vertex outside the graph
    '''
    if move.is_extend or move.kind == MoveKind.DETOUR:
        g.check_vertex(move.v)

    sequence = candidate_sequence(path, move)
    defect, mask = sequence_color_mask(g, sequence)
    if defect is not PathDefect.NONE:
        return None
    return HeteroPath(sequence, g.color_set(mask))


def _extensions(g: EdgeColoredGraph, path: HeteroPath) -> list[Move]:
    '''All successful extends in catalog order (TailExtend before HeadExtend, ascending v).'''
    on_path = set(path.vertices)
    used = path.colors.mask
    moves = []
    for kind, end in ((MoveKind.TAIL_EXTEND, path.tail), (MoveKind.HEAD_EXTEND, path.head)):
        for v, index in sorted(g.adjacency_colors(end).items()):
            if v not in on_path and not used >> index & 1:
                moves.append(Move(kind, v=v))
    return moves


def _candidate_moves(g: EdgeColoredGraph, path: HeteroPath) -> list[Move]:
    '''Parameterizations of the non-extend templates worth validating, in catalog order.'''
    u = path.vertices
    l = len(u) - 1
    first = g.adjacency_colors(u[0])
    on_path = set(u)
    moves = []

    #rotation chords must leave u_1
    for x in range(3, l + 2):
        if u[x - 1] in first:
            moves.append(Move.rotation(x))

    #detour vertices must be adjacent to both u_x and u_{x+2}
    for x in range(1, l):
        left = g.adjacency_colors(u[x - 1])
        right = g.adjacency_colors(u[x + 1])
        for v in sorted(left.keys() & right.keys()):
            if v not in on_path:
                moves.append(Move.detour(x, v))

    #insertion needs u_1 adjacent to u_x (and to u_{x+1} unless u_1 goes to the end)
    for x in range(2, l + 2):
        if u[x - 1] in first and (x == l + 1 or u[x] in first):
            moves.append(Move.insertion(x))

    #cycle rotation needs the closing chord u_{l+1} u_1
    if l >= 2 and u[-1] in first:
        moves.extend(Move.cycle_rotation(x) for x in range(2, l + 2))

    return moves


def enumerate_moves(g: EdgeColoredGraph, path: HeteroPath) -> list[tuple[Move, int]]:
    '''
    Description:
        Lists every move of the catalog that succeeds on the path, paired with the resulting length.
    Input:
        g - the edge-colored graph
        path - a valid path of g
    Output:
        list of (move, new length) in deterministic order (kind, then ascending parameters)
    '''
    results = [(move, path.length + 1) for move in _extensions(g, path)]
    for move in _candidate_moves(g, path):
        if apply_move(g, path, move) is not None:
            results.append((move, path.length))
    results.sort(key=lambda item: item[0])
    return results


def greedy_extend(g: EdgeColoredGraph, path: HeteroPath) -> HeteroPath:
    '''Applies the first available extend until neither end of the path can be extended.'''
    while True:
        moves = _extensions(g, path)
        if not moves:
            return path
        path = apply_move(g, path, moves[0])


def local_search(g: EdgeColoredGraph, start: int, plateau_budget: Optional[int] = None) -> HeteroPath:
    '''
    Description:
        Heuristic longest heterochromatic path search built from the move catalog. Starting from the
        single vertex path at start, the path is extended greedily, then a first-improvement pass tries
        every equal-length move followed by an immediate extend. When no move leads to a longer path,
        the search steps to the first not yet visited equal-length rearrangement; at most plateau_budget
        such steps (default 2n) are taken in a row without a length gain.
    Input:
        g - the edge-colored graph
        start - the start vertex
        plateau_budget - maximum number of consecutive equal-length steps without a gain
    Output:
        the longest path found (its length never decreases during the run)
    '''
    path = greedy_extend(g, single_vertex_path(g, start))
    budget = 2 * g.n if plateau_budget is None else plateau_budget

    #no heterochromatic path can be longer than this
    ceiling = min(g.n - 1, g.num_colors)

    best = path
    visited = {path.vertices, path.vertices[::-1]}
    plateau = 0

    while best.length < ceiling:
        improved = None
        wander = None

        for move, length in enumerate_moves(g, path):
            candidate = apply_move(g, path, move)
            if length > path.length:
                improved = greedy_extend(g, candidate)
                break

            extended = greedy_extend(g, candidate)
            if extended.length > path.length:
                improved = extended
                break
            if wander is None and candidate.vertices not in visited:
                wander = candidate

        if improved is not None:
            logger.debug(f"local search from {start}: length {path.length} -> {improved.length}")
            path = improved
            plateau = 0
        elif wander is not None and plateau < budget:
            path = wander
            plateau += 1
        else:
            break

        visited.add(path.vertices)
        visited.add(path.vertices[::-1])
        if path.length > best.length:
            best = path

    return best


def best_local_search(g: EdgeColoredGraph, plateau_budget: Optional[int] = None) -> HeteroPath:
    '''Runs local_search from every vertex and keeps the longest result (earliest start on ties).'''
    best = None
    for start in range(g.n):
        found = local_search(g, start, plateau_budget)
        if best is None or found.length > best.length:
            best = found
    if best is None:
        raise GraphDomainError("local search needs a graph with at least one vertex")
    return best
