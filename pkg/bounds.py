'''
Description:
    Lower bounds on the length of a longest heterochromatic path, as pure functions of the minimum color
    degree k and of the minimum color neighborhood union s, plus the per-instance verdict (BoundReport).

    Known bounds under the color degree condition d^c(v) >= k for every vertex:
        prior_half      ceil((k+1)/2)          any k >= 1
        small_k         k-1                    3 <= k <= 7
        induction       ceil(3k/5)+1           k >= 8 (superseded by two_thirds)
        two_thirds      ceil(2k/3)+1           k >= 7 (for k = 7 it coincides with small_k: 6)
    Known bounds under the color neighborhood union condition |CN(u) | CN(v)| >= s for every pair:
        small_s         s for s in {1, 2}, 2 for s = 3
        prior_third     ceil(s/3)+1            s >= 4
        two_fifths      floor((2s+4)/5)        s >= 4
    degree_bound and union_bound return the maximum applicable value. Every entry is a proven bound, so
    the maximum is one as well.

    NOTE: floor((2s+4)/5) is below ceil(s/3)+1 for many s < 18 (e.g. s = 7 gives 3 against 4), so the
    union bound is usually decided by the older formula for small s.
'''

#import modules
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Optional

from graph_core import EdgeColoredGraph, GraphDomainError, graph_stats
from path_engine import HeteroPath


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def applicable_degree_bounds(k: int) -> dict[str, int]:
    '''Every known color degree bound whose hypothesis covers k, by name.'''
    if k < 0:
        raise GraphDomainError(f"k must be nonnegative, got {k}")

    bounds = {}
    if k >= 1:
        bounds['prior_half'] = _ceil_div(k + 1, 2)
    if 3 <= k <= 7:
        bounds['small_k'] = k - 1
    if k >= 8:
        bounds['induction'] = _ceil_div(3 * k, 5) + 1
    if k >= 7:
        bounds['two_thirds'] = _ceil_div(2 * k, 3) + 1
    return bounds


def applicable_union_bounds(s: int) -> dict[str, int]:
    '''Every known color neighborhood union bound whose hypothesis covers s, by name.'''
    if s < 0:
        raise GraphDomainError(f"s must be nonnegative, got {s}")

    bounds = {}
    if 1 <= s <= 3:
        bounds['small_s'] = s if s <= 2 else 2
    if s >= 4:
        bounds['prior_third'] = _ceil_div(s, 3) + 1
        bounds['two_fifths'] = (2 * s + 4) // 5
    return bounds


def degree_bound(k: int) -> int:
    '''
    Description:
        Guaranteed heterochromatic path length when every vertex has color degree at least k.
    Input:
        k - minimum color degree (>= 0)
    Output:
        0 for k = 0, ceil((k+1)/2) for k in {1, 2}, k-1 for 3 <= k <= 6, ceil(2k/3)+1 for k >= 7
    '''
    return max(applicable_degree_bounds(k).values(), default=0)


def union_bound(s: int) -> int:
    '''
    Description:
        Guaranteed heterochromatic path length when every vertex pair has a color neighborhood union of
        size at least s.
    Input:
        s - minimum pairwise color neighborhood union (>= 0)
    Output:
        0 for s = 0, s for s in {1, 2}, 2 for s = 3, max(floor((2s+4)/5), ceil(s/3)+1) for s >= 4
    '''
    return max(applicable_union_bounds(s).values(), default=0)


def extremal_length(s: int) -> int:
    '''Longest heterochromatic path length of the rainbow extremal graph for s; no bound in s can exceed it.'''
    return s // 2 + 1


@dataclass(frozen=True)
class BoundReport:
    k: int
    s: Optional[int]
    degree_bound: int
    union_bound: Optional[int]
    exact_length: int
    heuristic_length: int
    degree_ok: bool
    union_ok: bool
    tight: bool

    @property
    def all_ok(self) -> bool:
        return self.degree_ok and self.union_ok

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> BoundReport:
        return cls(**{name: data[name] for name in cls.__dataclass_fields__})


def check_instance(g: EdgeColoredGraph, exact: HeteroPath, heuristic: HeteroPath) -> BoundReport:
    '''
    Description:
        Compares the exact longest path length of a graph against every applicable lower bound.
    Input:
        g - the edge-colored graph
        exact - a longest heterochromatic path of g (from the oracle)
        heuristic - the path found by the local search
    Output:
        the BoundReport; degree_ok or union_ok being False means the instance contradicts a proven bound
    '''
    stats = graph_stats(g)
    by_degree = degree_bound(stats.k)
    by_union = None if stats.s is None else union_bound(stats.s)

    strongest = by_degree if by_union is None else max(by_degree, by_union)

    return BoundReport(
        k=stats.k,
        s=stats.s,
        degree_bound=by_degree,
        union_bound=by_union,
        exact_length=exact.length,
        heuristic_length=heuristic.length,
        degree_ok=exact.length >= by_degree,
        union_ok=by_union is None or exact.length >= by_union,
        tight=exact.length == strongest,
    )
