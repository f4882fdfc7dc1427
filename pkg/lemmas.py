'''
Description:
    Property checks for the exchange arguments behind the move catalog. Each check looks at the longest
    heterochromatic paths of a graph and reports every configuration in which one of the rearrangements
    would produce a longer path (or a better-placed repeated color). On a correct oracle none of them can
    fire, so a violation means a solver bug or a false lemma.

    For a longest path P = u_1 ... u_{l+1} with i_j = C(u_j u_{j+1}):
        rotation        3 <= x <= l, C(u_1 u_x) not in C(P)  =>  no v outside P has C(u_{l+1} v) = i_{x-1}
        detour          v outside P with C(u_{l+1} v) = i_1, 2 <= x <= l-2, C(u_x v) and C(u_{x+2} v) two
                        distinct colors outside C(P)  =>  no v' outside P has C(u_{l+1} v') in {i_x, i_{x+1}}
    For a longest path P and v_1 outside P with C(u_{l+1} v_1) = i_{j0}, j0 as small as possible over all
    longest paths and all such v_1:
        early chord     C(u_1 u_x) is in C(P) for every j0+1 <= x <= 2*j0 with u_1 u_x an edge
        insertion       for 2*j0+1 <= x <= l, C(u_1 u_x) and C(u_1 u_{x+1}) are not two distinct colors
                        outside C(P)

    NOTE: The last two checks need every longest path. When there are more than max_paths of them only the
    first two checks run and the report is marked incomplete.
'''

#import modules
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from graph_core import EdgeColoredGraph
from oracle import all_longest_paths, longest_hetero_path
from path_engine import HeteroPath

logger = logging.getLogger(__name__)

DEFAULT_MAX_PATHS = 50_000


class LemmaViolation(NamedTuple):
    lemma: str
    path: tuple[int, ...]
    detail: str


@dataclass
class LemmaReport:
    paths_checked: int = 0
    complete: bool = True
    violations: list[LemmaViolation] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.violations)

    def counts(self) -> dict[str, int]:
        counts = {'rotation': 0, 'detour': 0, 'early_chord': 0, 'insertion': 0}
        for violation in self.violations:
            counts[violation.lemma] += 1
        return counts


def _outside(g: EdgeColoredGraph, path: HeteroPath, vertex: int) -> list[tuple[int, int]]:
    '''(v, color index) for every neighbor v of vertex that is not on the path, ascending v.'''
    on_path = set(path.vertices)
    return sorted((v, index) for v, index in g.adjacency_colors(vertex).items() if v not in on_path)


def rotation_violations(g: EdgeColoredGraph, paths: list[HeteroPath]) -> list[LemmaViolation]:
    violations = []
    for path in paths:
        u = path.vertices
        l = len(u) - 1
        used = path.colors.mask
        outside_tail = _outside(g, path, u[-1])

        for x in range(3, l + 1):
            chord = g.color_index(u[0], u[x - 1])
            if chord < 0 or used >> chord & 1:
                continue
            dropped = g.color_index(u[x - 2], u[x - 1])
            for v, index in outside_tail:
                if index == dropped:
                    violations.append(LemmaViolation('rotation', u, f"x={x}, v={v}"))
    return violations


def detour_violations(g: EdgeColoredGraph, paths: list[HeteroPath]) -> list[LemmaViolation]:
    violations = []
    for path in paths:
        u = path.vertices
        l = len(u) - 1
        if l < 4:
            continue
        used = path.colors.mask
        first = g.color_index(u[0], u[1])
        outside_tail = _outside(g, path, u[-1])

        for v, index in outside_tail:
            if index != first:
                continue
            for x in range(2, l - 1):
                a = g.color_index(u[x - 1], v)
                b = g.color_index(u[x + 1], v)
                if a < 0 or b < 0 or a == b or used >> a & 1 or used >> b & 1:
                    continue
                replaced = {g.color_index(u[x - 1], u[x]), g.color_index(u[x], u[x + 1])}
                for w, w_index in outside_tail:
                    if w_index in replaced:
                        violations.append(LemmaViolation('detour', u, f"x={x}, v={v}, v'={w}"))
    return violations


def _repeat_positions(g: EdgeColoredGraph, paths: list[HeteroPath]) -> list[tuple[HeteroPath, int, int]]:
    '''(path, v_1, j) for every outside neighbor v_1 of the last vertex whose color is i_j on the path.'''
    found = []
    for path in paths:
        u = path.vertices
        position = {g.color_index(a, b): j for j, (a, b) in enumerate(zip(u, u[1:]), start=1)}
        for v, index in _outside(g, path, u[-1]):
            #a color outside C(P) would extend a longest path
            if index in position:
                found.append((path, v, position[index]))
    return found


def early_chord_violations(g: EdgeColoredGraph, paths: list[HeteroPath]) -> list[LemmaViolation]:
    repeats = _repeat_positions(g, paths)
    if not repeats:
        return []
    j0 = min(j for _, _, j in repeats)

    violations = []
    for path, v1, j in repeats:
        if j != j0:
            continue
        u = path.vertices
        l = len(u) - 1
        used = path.colors.mask
        for x in range(max(j0 + 1, 3), min(2 * j0, l + 1) + 1):
            chord = g.color_index(u[0], u[x - 1])
            if chord >= 0 and not used >> chord & 1:
                violations.append(LemmaViolation('early_chord', u, f"j0={j0}, v1={v1}, x={x}"))
    return violations


def insertion_violations(g: EdgeColoredGraph, paths: list[HeteroPath]) -> list[LemmaViolation]:
    repeats = _repeat_positions(g, paths)
    if not repeats:
        return []
    j0 = min(j for _, _, j in repeats)

    violations = []
    for path, v1, j in repeats:
        if j != j0:
            continue
        u = path.vertices
        l = len(u) - 1
        used = path.colors.mask
        for x in range(2 * j0 + 1, l + 1):
            a = g.color_index(u[0], u[x - 1])
            b = g.color_index(u[0], u[x])
            if a < 0 or b < 0 or a == b or used >> a & 1 or used >> b & 1:
                continue
            violations.append(LemmaViolation('insertion', u, f"j0={j0}, v1={v1}, x={x}"))
    return violations


def check_lemmas(g: EdgeColoredGraph, max_paths: int = DEFAULT_MAX_PATHS,
                 optimum: Optional[int] = None) -> LemmaReport:
    '''
    Description:
        Runs all four exchange checks on every longest heterochromatic path of g.
    Input:
        g - the edge-colored graph
        max_paths - stop collecting longest paths after this many (the minimal-j0 checks are then skipped)
        optimum - the longest path length if already known
    Output:
        LemmaReport with every violation found
    '''
    if optimum is None:
        optimum = longest_hetero_path(g).length

    paths = list(itertools.islice(all_longest_paths(g, optimum), max_paths + 1))
    report = LemmaReport(complete=len(paths) <= max_paths)
    paths = paths[:max_paths]
    report.paths_checked = len(paths)

    report.violations.extend(rotation_violations(g, paths))
    report.violations.extend(detour_violations(g, paths))
    if report.complete:
        report.violations.extend(early_chord_violations(g, paths))
        report.violations.extend(insertion_violations(g, paths))
    else:
        logger.info(f"{g!r} has more than {max_paths} longest paths; minimal-j0 checks skipped")

    for violation in report.violations:
        logger.error(f"{violation.lemma} exchange violated on path {list(violation.path)}: {violation.detail}")

    return report
