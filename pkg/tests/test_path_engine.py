import itertools

import numpy as np
import pytest
from hypothesis import given, settings

from generators import extremal_union, rainbow_complete, random_colored
from graph_core import EdgeColoredGraph, GraphDomainError
from oracle import longest_hetero_path
from path_engine import (HeteroPath, Move, MoveKind, PathDefect, apply_move, best_local_search, candidate_sequence,
                         enumerate_moves, greedy_extend, is_heterochromatic, local_search, make_path, path_defect,
                         single_vertex_path)
from graphs import graphs_with_vertex, monochromatic_star, path_graph


@pytest.fixture
def five_path():
    return make_path(rainbow_complete(5), (0, 1, 2, 3, 4))


def test_rainbow_permutations_are_heterochromatic(rainbow_k4):
    assert all(is_heterochromatic(rainbow_k4, order) for order in itertools.permutations(range(4)))


@pytest.mark.parametrize('sequence, defect', [
    ((0, 1, 2), PathDefect.REPEATED_COLOR),
    ((0, 1, 0), PathDefect.REPEATED_VERTEX),
    ((0, 2), PathDefect.NON_ADJACENT),
    ((0, 5), PathDefect.OUT_OF_RANGE),
    ((), PathDefect.EMPTY),
    ((1,), PathDefect.NONE),
])
def test_path_defects(sequence, defect):
    g = path_graph(1, 1)
    assert path_defect(g, sequence) is defect
    assert is_heterochromatic(g, sequence) == (defect is PathDefect.NONE)


def test_make_path_rejects_repeated_color():
    with pytest.raises(GraphDomainError):
        make_path(path_graph(1, 1), (0, 1, 2))


def test_path_colors_and_render():
    g = path_graph(4, 9)
    path = make_path(g, (0, 1, 2))
    assert path.length == 2
    assert path.colors == {4, 9}
    assert path.render(g) == "length 2: 0 1 2\ncolors: 4 9"


@pytest.mark.parametrize('move, expected', [
    (Move.rotation(3), (1, 0, 2, 3, 4)),
    (Move.rotation(5), (3, 2, 1, 0, 4)),
    (Move.detour(2, 9), (0, 1, 9, 3, 4)),
    (Move.insertion(3), (1, 2, 0, 3, 4)),
    (Move.insertion(5), (1, 2, 3, 4, 0)),
    (Move.cycle_rotation(3), (2, 3, 4, 0, 1)),
    (Move.tail_extend(7), (0, 1, 2, 3, 4, 7)),
    (Move.head_extend(7), (7, 0, 1, 2, 3, 4)),
])
def test_candidate_sequence(five_path, move, expected):
    assert candidate_sequence(five_path, move) == expected


@pytest.mark.parametrize('move', [
    Move.rotation(2),
    Move.rotation(6),
    Move.detour(0, 9),
    Move.detour(4, 9),
    Move.insertion(1),
    Move.cycle_rotation(1),
])
def test_candidate_sequence_position_out_of_range(five_path, move):
    with pytest.raises(GraphDomainError):
        candidate_sequence(five_path, move)


def test_cycle_rotation_needs_two_edges():
    path = make_path(path_graph(1), (0, 1))
    with pytest.raises(GraphDomainError):
        candidate_sequence(path, Move.cycle_rotation(2))


def test_apply_move_extends():
    g = rainbow_complete(5)
    extended = apply_move(g, make_path(g, (0, 1, 2, 3)), Move.tail_extend(4))
    assert extended.length == 4
    assert is_heterochromatic(g, extended.vertices)


def test_apply_move_color_clash():
    g = EdgeColoredGraph(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1)])
    assert apply_move(g, make_path(g, (0, 1, 2)), Move.tail_extend(3)) is None


def test_apply_move_vertex_outside_graph(five_path):
    with pytest.raises(GraphDomainError):
        apply_move(rainbow_complete(5), five_path, Move.tail_extend(5))


def test_rotation_then_extend(rotation_witness):
    path = make_path(rotation_witness, (0, 1, 2, 3, 4))
    assert apply_move(rotation_witness, path, Move.tail_extend(5)) is None

    rotated = apply_move(rotation_witness, path, Move.rotation(3))
    assert rotated.vertices == (1, 0, 2, 3, 4)
    longer = apply_move(rotation_witness, rotated, Move.tail_extend(5))
    assert longer.length == path.length + 1


def test_enumerate_moves_finds_rotation(rotation_witness):
    path = make_path(rotation_witness, (0, 1, 2, 3, 4))
    moves = enumerate_moves(rotation_witness, path)
    assert (Move.rotation(3), 4) in moves
    assert moves == sorted(moves, key=lambda item: item[0])


def test_enumerate_moves_on_hamiltonian_path():
    g = rainbow_complete(6)
    path = make_path(g, tuple(range(6)))
    assert all(length == path.length for _, length in enumerate_moves(g, path))


def test_enumerate_moves_single_edge():
    g = path_graph(3)
    moves = enumerate_moves(g, single_vertex_path(g, 0))
    assert [move for move, _ in moves] == [Move.tail_extend(1), Move.head_extend(1)]
    assert all(length == 1 for _, length in moves)


def test_move_order_follows_kind():
    assert Move.tail_extend(9) < Move.head_extend(0) < Move.rotation(3) < Move.detour(1, 0)
    assert Move.insertion(2) < Move.cycle_rotation(2)
    assert str(Move.detour(2, 5)) == "Detour(x=2, v=5)"
    assert Move.head_extend(1).is_extend and not Move.rotation(3).is_extend
    assert MoveKind.CYCLE_ROTATION == 5


def test_greedy_extend_stops_at_color_clash():
    g = path_graph(1, 2, 1)
    assert greedy_extend(g, single_vertex_path(g, 0)).vertices == (0, 1, 2)


@pytest.mark.parametrize('n', range(2, 10))
def test_local_search_rainbow_complete(n):
    g = rainbow_complete(n)
    assert all(local_search(g, start).length == n - 1 for start in range(n))


def test_local_search_monochromatic_star():
    assert local_search(monochromatic_star(), 0).length == 1
    assert local_search(monochromatic_star(), 2).length == 1


def test_local_search_extremal_six():
    assert best_local_search(extremal_union(6)).length == 4


def test_local_search_rotation_witness(rotation_witness):
    assert best_local_search(rotation_witness).length == 5


def test_local_search_zero_plateau_budget():
    g = extremal_union(9)
    assert local_search(g, 0, plateau_budget=0).length <= longest_hetero_path(g).length


@settings(max_examples=60, deadline=None)
@given(graphs_with_vertex(max_n=7))
def test_local_search_is_sound(graph_and_start):
    g, start = graph_and_start
    found = local_search(g, start)
    assert isinstance(found, HeteroPath)
    assert is_heterochromatic(g, found.vertices)
    assert found.length <= longest_hetero_path(g).length


@settings(max_examples=60, deadline=None)
@given(graphs_with_vertex(max_n=7))
def test_move_accounting(graph_and_start):
    g, start = graph_and_start
    path = greedy_extend(g, single_vertex_path(g, start))
    u = path.vertices

    for move, length in enumerate_moves(g, path):
        moved = apply_move(g, path, move)
        assert moved is not None and is_heterochromatic(g, moved.vertices)
        assert moved.length == length == path.length + (1 if move.is_extend else 0)

        old = path.colors.labels()
        if move.kind == MoveKind.ROTATION:
            x = move.x
            expected = old - {g.color(u[x - 2], u[x - 1])} | {g.color(u[0], u[x - 1])}
            assert moved.colors == expected
        elif move.kind == MoveKind.DETOUR:
            x, v = move.x, move.v
            removed = {g.color(u[x - 1], u[x]), g.color(u[x], u[x + 1])}
            expected = old - removed | {g.color(u[x - 1], v), g.color(v, u[x + 1])}
            assert moved.colors == expected


def _random_move(rng: np.random.Generator, path: HeteroPath, n: int) -> Move:
    l = path.length
    kinds = [MoveKind.TAIL_EXTEND, MoveKind.HEAD_EXTEND]
    if l >= 1:
        kinds.append(MoveKind.INSERTION)
    if l >= 2:
        kinds.extend([MoveKind.ROTATION, MoveKind.DETOUR, MoveKind.CYCLE_ROTATION])
    kind = kinds[int(rng.integers(len(kinds)))]
    v = int(rng.integers(n))
    if kind == MoveKind.TAIL_EXTEND:
        return Move.tail_extend(v)
    if kind == MoveKind.HEAD_EXTEND:
        return Move.head_extend(v)
    if kind == MoveKind.ROTATION:
        return Move.rotation(int(rng.integers(3, l + 2)))
    if kind == MoveKind.DETOUR:
        return Move.detour(int(rng.integers(1, l)), v)
    if kind == MoveKind.INSERTION:
        return Move.insertion(int(rng.integers(2, l + 2)))
    return Move.cycle_rotation(int(rng.integers(2, l + 2)))


def test_ten_thousand_random_moves_are_sound():
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(17)))
    calls = 0
    for seed in range(100):
        n = int(rng.integers(3, 10))
        g = random_colored(n, float(rng.uniform(0.4, 1.0)), int(rng.integers(2, 15)), seed)
        path = greedy_extend(g, single_vertex_path(g, int(rng.integers(n))))

        for _ in range(100):
            move = _random_move(rng, path, n)
            moved = apply_move(g, path, move)
            calls += 1
            if moved is None:
                continue

            assert is_heterochromatic(g, moved.vertices)
            assert moved.length == path.length + (1 if move.is_extend else 0)
            u = path.vertices
            if move.kind == MoveKind.ROTATION:
                x = move.x
                expected = path.colors.labels() - {g.color(u[x - 2], u[x - 1])} | {g.color(u[0], u[x - 1])}
                assert moved.colors == expected
            elif move.kind == MoveKind.DETOUR:
                x, v = move.x, move.v
                removed = {g.color(u[x - 1], u[x]), g.color(u[x], u[x + 1])}
                expected = path.colors.labels() - removed | {g.color(u[x - 1], v), g.color(v, u[x + 1])}
                assert moved.colors == expected
            else:
                assert moved.colors.labels() == set(moved.edge_colors(g))
            path = moved

    assert calls == 10_000
