import hashlib

import pytest

from generators import GenKind, GenSpec, extremal_union, rainbow_complete, random_colored
from graph_core import GraphDomainError, cn_union, color_degree, graph_stats, serialize_ecg
from oracle import longest_hetero_path

RANDOM_8_07_12_42_SHA256 = '7038890d03a44a2b1cd2684539c7f28c3b39f7cc9b700314e153228d41200e07'


def test_rainbow_k3():
    g = rainbow_complete(3)
    assert g.m == 3
    assert g.palette == (0, 1, 2)
    assert all(color_degree(g, v) == 2 for v in range(3))


def test_rainbow_k6():
    g = rainbow_complete(6)
    assert all(color_degree(g, v) == 5 for v in range(6))
    assert longest_hetero_path(g).length == 5


def test_rainbow_k1():
    g = rainbow_complete(1)
    assert g.n == 1 and g.m == 0


@pytest.mark.parametrize('n', range(2, 9))
def test_rainbow_stats(n):
    assert graph_stats(rainbow_complete(n))[:2] == (n - 1, 2 * n - 3)


def test_extremal_even_removes_first_edge():
    g = extremal_union(4)
    assert g.n == 4 and g.m == 5
    assert not g.has_edge(0, 1)
    assert len(g.palette) == 5


def test_extremal_odd_is_rainbow_complete():
    assert extremal_union(5) == rainbow_complete(4)


def test_extremal_eight():
    g = extremal_union(8)
    assert g.n == 6 and g.m == 14
    assert longest_hetero_path(g).length == 5


@pytest.mark.parametrize('s', range(1, 17))
def test_extremal_union_is_exact(s):
    g = extremal_union(s)
    assert min(cn_union(g, u, v) for u in range(g.n) for v in range(u + 1, g.n)) == s


@pytest.mark.parametrize('s', range(1, 17))
def test_extremal_longest_path(s):
    assert longest_hetero_path(extremal_union(s)).length == s // 2 + 1


def test_random_without_edges():
    for seed in range(5):
        assert random_colored(7, 0.0, 5, seed).m == 0


def test_random_single_color_complete():
    g = random_colored(6, 1.0, 1, 3)
    assert g.m == 15
    assert g.palette == (0,)
    assert longest_hetero_path(g).length == 1


def test_random_is_reproducible():
    first = serialize_ecg(random_colored(8, 0.7, 12, 42))
    assert serialize_ecg(random_colored(8, 0.7, 12, 42)) == first
    assert serialize_ecg(random_colored(8, 0.7, 12, 43)) != first


def test_random_golden_digest():
    #PCG64 stream contract: this digest is also listed in the README
    text = serialize_ecg(random_colored(8, 0.7, 12, 42))
    assert text.startswith('ecg 8 ')
    assert hashlib.sha256(text.encode('utf-8')).hexdigest() == RANDOM_8_07_12_42_SHA256


def test_random_colors_in_range():
    g = random_colored(12, 0.9, 4, 11)
    assert set(g.palette) <= {0, 1, 2, 3}


@pytest.mark.parametrize('spec', [
    GenSpec.rainbow_complete(0),
    GenSpec.extremal_union(0),
    GenSpec.random(5, 1.5, 3, 1),
    GenSpec.random(5, 0.5, 0, 1),
    GenSpec.random(5, 0.5, 3, -1),
    GenSpec(GenKind.RANDOM, n=5, p=0.5, c=3),
])
def test_invalid_specs(spec):
    with pytest.raises(GraphDomainError):
        spec.build()


def test_spec_description_and_build():
    spec = GenSpec.random(9, 0.6, 14, 7)
    assert spec.describe() == "gen random --n 9 --p 0.6 --c 14 --seed 7"
    assert spec.build() == random_colored(9, 0.6, 14, 7)
    assert spec.to_dict() == {'kind': 'random', 'n': 9, 'p': 0.6, 'c': 14, 'seed': 7}
    assert GenSpec.extremal_union(10).describe() == "gen extremal --s 10"
    assert GenSpec.rainbow_complete(4).build() == rainbow_complete(4)
