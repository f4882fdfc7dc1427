import pytest

from generators import extremal_union, rainbow_complete
from graph_core import EdgeColoredGraph


@pytest.fixture
def g4():
    '''Rainbow K4 minus the edge {0, 1}: s = 4, longest path 3.'''
    return extremal_union(4)


@pytest.fixture
def rainbow_k4():
    return rainbow_complete(4)


@pytest.fixture
def rotation_witness():
    '''
    Path 0-1-2-3-4 colored 1,2,3,4 with the chord {0,2} in the fresh color 5 and an outside vertex 5
    hanging off the tail in color 2 (the color of {1,2}). Rotating at x=3 frees color 2 for the tail.
    '''
    return EdgeColoredGraph(6, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 4, 4), (0, 2, 5), (4, 5, 2)])


@pytest.fixture
def ecg_file(tmp_path):
    '''Writes .ecg text to a temporary file and returns its path.'''
    def write(text: str, name: str = 'graph.ecg') -> str:
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
