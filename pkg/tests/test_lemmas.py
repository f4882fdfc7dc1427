import numpy as np
import pytest
from hypothesis import given, settings

from generators import extremal_union, random_colored, rainbow_complete
from graph_core import EdgeColoredGraph
from lemmas import (LemmaReport, check_lemmas, detour_violations, early_chord_violations, insertion_violations,
                    rotation_violations)
from oracle import all_longest_paths
from path_engine import make_path
from graphs import edge_colored_graphs


def test_rotation_check_fires_on_non_longest_path(rotation_witness):
    #the 5-vertex path is not a longest one, so the exchange finds a longer path
    path = make_path(rotation_witness, (0, 1, 2, 3, 4))
    violations = rotation_violations(rotation_witness, [path])
    assert [(violation.lemma, violation.detail) for violation in violations] == [('rotation', 'x=3, v=5')]


def test_detour_check_fires_on_non_longest_path():
    #path 0-1-2-3-4 (colors 1,2,3,4); 5 hangs off the tail in color 1 and bridges 1 and 3 in fresh colors;
    #6 hangs off the tail in color 2, which the detour frees
    g = EdgeColoredGraph(7, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 4, 4), (4, 5, 1), (1, 5, 8), (3, 5, 9), (4, 6, 2)])
    path = make_path(g, (0, 1, 2, 3, 4))
    violations = detour_violations(g, [path])
    assert violations and all(violation.lemma == 'detour' for violation in violations)
    assert violations[0].detail == "x=2, v=5, v'=6"


def test_minimal_position_checks_fire_on_non_longest_paths():
    #0-1-2-3 colored 1,2,3 with the chord {0,2} colored 5 and 4 hanging off the tail in color 1
    g = EdgeColoredGraph(5, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 2, 5), (3, 4, 1)])
    path = make_path(g, (0, 1, 2, 3))
    assert early_chord_violations(g, [path]) == []
    assert insertion_violations(g, [path]) == []

    #tail color matches the second path edge, so the chord at x=3 lies in the early window
    g = EdgeColoredGraph(5, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 2, 5), (3, 4, 2)])
    path = make_path(g, (0, 1, 2, 3))
    assert [violation.lemma for violation in early_chord_violations(g, [path])] == ['early_chord']


def test_check_lemmas_on_rainbow_and_extremal_graphs():
    for g in (rainbow_complete(5), extremal_union(6), extremal_union(7)):
        report = check_lemmas(g)
        assert report.complete
        assert report.paths_checked > 0
        assert report.total == 0


def test_check_lemmas_on_random_graphs():
    for seed in range(40):
        g = random_colored(7, 0.5, 5, seed)
        report = check_lemmas(g)
        assert report.total == 0, report.violations


def test_max_paths_marks_report_incomplete():
    g = rainbow_complete(5)
    assert len(list(all_longest_paths(g))) > 3
    report = check_lemmas(g, max_paths=3)
    assert not report.complete
    assert report.paths_checked == 3


def test_report_counts():
    report = LemmaReport()
    assert report.counts() == {'rotation': 0, 'detour': 0, 'early_chord': 0, 'insertion': 0}
    assert report.total == 0


@settings(max_examples=40, deadline=None)
@given(edge_colored_graphs(max_n=7, max_colors=6))
def test_no_exchange_improves_a_longest_path(g):
    assert check_lemmas(g).total == 0


@pytest.mark.slow
def test_two_hundred_random_graphs_up_to_nine_vertices():
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(99)))
    for trial in range(200):
        n = int(rng.integers(2, 10))
        g = random_colored(n, float(rng.uniform(0.3, 0.9)), int(rng.integers(2, 12)), trial)
        report = check_lemmas(g)
        assert report.total == 0, (trial, report.violations)
