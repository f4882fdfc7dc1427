'''
Description:
    Exact longest heterochromatic path computation. The search is a depth-first branch and bound over
    states (current vertex, visited vertices, used colors, trail), with vertex and color sets kept as
    integer bitmasks. It is the ground truth for the bound checks and for judging the local search.

    NOTE: Starts and neighbors are tried in ascending order, so trails are produced in lexicographic
    order and the first trail reaching the best length is the lexicographically smallest one. Ties are
    therefore broken towards the smallest vertex sequence without extra work.
    NOTE: The per-start subtrees can be searched by a thread pool. In that mode a subtree is only cut
    against the shared incumbent when it cannot even tie it, so the combined result is identical to the
    single-threaded run.
'''

#import modules
from __future__ import annotations

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

import networkx as nx

from graph_core import EdgeColoredGraph, GraphDomainError
from path_engine import HeteroPath, is_heterochromatic, make_path

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8
DEFAULT_WIDTH_THRESHOLD = 64
EXHAUSTIVE_MAX_VERTICES = 10


class OracleRefusal(GraphDomainError):
    '''Raised when the pruning-free enumeration is asked to handle a graph that is too large.'''


class SearchState(NamedTuple):
    current: int
    visited: int  #vertex bitmask
    used: int  #dense color bitmask, |used| = len(trail) - 1
    trail: tuple[int, ...]


@dataclass(frozen=True)
class OracleResult:
    path: HeteroPath
    explored: int  #number of states expanded
    pruned: int  #number of states cut by the bound
    exact: bool  #False only when the node budget ran out

    @property
    def length(self) -> int:
        return self.path.length


class _SharedIncumbent:
    '''Best length seen by any worker; only ever grows.'''

    def __init__(self):
        self._lock = threading.Lock()
        self._length = -1

    @property
    def length(self) -> int:
        return self._length

    def offer(self, length: int) -> None:
        with self._lock:
            if length > self._length:
                self._length = length


class _Budget:
    '''Node budget shared by all subtrees of one call.'''

    def __init__(self, limit: int):
        self._lock = threading.Lock()
        self._limit = limit
        self.chunk = min(_BUDGET_CHUNK, limit)
        self.spent = 0
        self.exhausted = False

    def take(self) -> int:
        '''Reserves up to one chunk of nodes; returns 0 (and marks the budget exhausted) when none are left.'''
        with self._lock:
            granted = min(self.chunk, self._limit - self.spent)
            if granted <= 0:
                self.exhausted = True
                return 0
            self.spent += granted
            return granted

    def refund(self, amount: int) -> None:
        with self._lock:
            self.spent -= amount


#nodes are charged to the shared budget in batches of at most this size
_BUDGET_CHUNK = 4096


def _search_from(g: EdgeColoredGraph, start: int, incumbent: _SharedIncumbent, budget: _Budget,
                 memoize: bool, strict_shared: bool) -> tuple[tuple[int, ...], int, int]:
    '''
    Description:
        Depth-first branch and bound over all trails starting at one vertex.
    Input:
        g - the edge-colored graph
        start - the start vertex of every trail in this subtree
        incumbent - the best length found by any subtree so far
        budget - the node budget shared by all subtrees
        memoize - skip states (current, visited, used) that were already expanded
        strict_shared - cut against the shared incumbent only when the branch cannot tie it
    Output:
        (best trail of this subtree, explored count, pruned count)
    '''
    n = g.n
    color_count = g.num_colors
    adjacency = [sorted(g.adjacency_colors(v).items()) for v in range(n)]
    cn_masks = [g.cn_mask(v) for v in range(n)]
    all_vertices = (1 << n) - 1

    best_trail = (start,)
    best_length = 0
    explored = 0
    pruned = 0
    allowance = 0
    seen: Optional[set[tuple[int, int, int]]] = set() if memoize else None

    stack = [SearchState(start, 1 << start, 0, (start,))]
    while stack:
        state = stack.pop()
        length = len(state.trail) - 1

        if seen is not None:
            key = (state.current, state.visited, state.used)
            if key in seen:
                continue
            seen.add(key)

        if allowance == 0:
            allowance = budget.take()
            if allowance == 0:
                break
        allowance -= 1
        explored += 1

        if length > best_length:
            best_length = length
            best_trail = state.trail
            incumbent.offer(length)

        #remaining potential: every new edge consumes one unvisited vertex and one unused color
        #incident with an unvisited vertex
        unvisited = all_vertices & ~state.visited
        reachable_colors = 0
        rest = unvisited
        while rest:
            low = rest & -rest
            reachable_colors |= cn_masks[low.bit_length() - 1]
            rest ^= low
        potential = min(unvisited.bit_count(), color_count - state.used.bit_count(),
                        (reachable_colors & ~state.used).bit_count())

        shared = incumbent.length
        if length + potential <= best_length or (
                length + potential < shared if strict_shared else length + potential <= shared):
            pruned += 1
            continue

        #push in reverse so the smallest neighbor is expanded first
        for v, index in reversed(adjacency[state.current]):
            bit = 1 << v
            color_bit = 1 << index
            if state.visited & bit or state.used & color_bit:
                continue
            stack.append(SearchState(v, state.visited | bit, state.used | color_bit, state.trail + (v,)))

    budget.refund(allowance)
    return best_trail, explored, pruned


def longest_hetero_path(g: EdgeColoredGraph, budget: int = DEFAULT_BUDGET, threads: int = 1,
                        memoize: bool = False, width_threshold: int = DEFAULT_WIDTH_THRESHOLD) -> OracleResult:
    '''
    Description:
        Computes a longest heterochromatic path of g by branch and bound from every start vertex.
    Input:
        g - the edge-colored graph (at least one vertex)
        budget - maximum number of expanded states before giving up exactness
        threads - number of worker threads searching start vertices concurrently (1 = single-threaded)
        memoize - deduplicate repeated states; only used when c(G) <= width_threshold
        width_threshold - largest color count for which state deduplication is allowed
    Output:
        OracleResult with the lexicographically smallest longest path, the node statistics and whether
        the result is exact (False when the budget ran out; the path is then the best one found)
    '''
    if g.n == 0:
        raise GraphDomainError("the oracle needs a graph with at least one vertex")
    if budget <= 0:
        raise GraphDomainError(f"the node budget must be positive, got {budget}")

    memoize = memoize and g.num_colors <= width_threshold
    incumbent = _SharedIncumbent()
    shared_budget = _Budget(budget)
    ceiling = min(g.n - 1, g.num_colors)

    logger.debug(f"oracle start: {g!r}, budget {budget}, threads {threads}, memoize {memoize}")

    results = []
    if threads <= 1:
        for start in range(g.n):
            results.append(_search_from(g, start, incumbent, shared_budget, memoize, strict_shared=False))
            #nothing can beat a path that uses every vertex or every color
            if incumbent.length >= ceiling or shared_budget.exhausted:
                break
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            futures = [executor.submit(_search_from, g, start, incumbent, shared_budget, memoize, True)
                       for start in range(g.n)]
            results = [future.result() for future in futures]

    explored = sum(result[1] for result in results)
    pruned = sum(result[2] for result in results)

    #longest first, then the lexicographically smallest sequence
    trail = min((result[0] for result in results), key=lambda t: (-len(t), t))
    exact = not shared_budget.exhausted

    if not exact:
        logger.warning(f"oracle budget of {budget} nodes exhausted on {g!r}; best length so far {len(trail) - 1}")
    logger.debug(f"oracle done: length {len(trail) - 1}, explored {explored}, pruned {pruned}")

    return OracleResult(make_path(g, trail), explored, pruned, exact)


def all_longest_paths(g: EdgeColoredGraph, length: Optional[int] = None) -> Iterator[HeteroPath]:
    '''
    Description:
        Yields every oriented heterochromatic path of maximum length (each path appears once per
        direction), in lexicographic order.
    Input:
        g - the edge-colored graph
        length - the known optimum; computed with longest_hetero_path when omitted
    Output:
        generator of HeteroPath
    '''
    if length is None:
        length = longest_hetero_path(g).length

    n = g.n
    adjacency = [sorted(g.adjacency_colors(v).items()) for v in range(n)]
    all_vertices = (1 << n) - 1
    color_count = g.num_colors

    def extend(state: SearchState) -> Iterator[SearchState]:
        steps = len(state.trail) - 1
        if steps == length:
            yield state
            return
        unvisited = all_vertices & ~state.visited
        if steps + min(unvisited.bit_count(), color_count - state.used.bit_count()) < length:
            return
        for v, index in adjacency[state.current]:
            bit = 1 << v
            color_bit = 1 << index
            if state.visited & bit or state.used & color_bit:
                continue
            yield from extend(SearchState(v, state.visited | bit, state.used | color_bit, state.trail + (v,)))

    for start in range(n):
        for state in extend(SearchState(start, 1 << start, 0, (start,))):
            yield HeteroPath(state.trail, g.color_set(state.used))


def exhaustive_longest(g: EdgeColoredGraph) -> HeteroPath:
    '''
    Description:
        Pruning-free cross-check: enumerates every simple path with networkx and keeps the longest
        heterochromatic one (lexicographically smallest orientation on ties). Only meant for tests and
        for re-checking suspected counterexamples.
    Input:
        g - the edge-colored graph, at most 10 vertices
    Output:
        a longest heterochromatic path
    Raises:
        OracleRefusal when g has more than 10 vertices
    '''
    if g.n > EXHAUSTIVE_MAX_VERTICES:
        raise OracleRefusal(f"exhaustive enumeration is limited to {EXHAUSTIVE_MAX_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        raise GraphDomainError("the oracle needs a graph with at least one vertex")

    graph = g.to_networkx()
    best: tuple[int, ...] = (0,)

    for source in range(g.n):
        for target in range(source + 1, g.n):
            for simple_path in nx.all_simple_paths(graph, source, target):
                if not is_heterochromatic(g, simple_path):
                    continue
                for oriented in (tuple(simple_path), tuple(reversed(simple_path))):
                    if (-len(oriented), oriented) < (-len(best), best):
                        best = oriented

    return make_path(g, best)
