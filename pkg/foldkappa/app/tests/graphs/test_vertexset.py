"""
FoldKappa app tests graphs test_vertexset module
"""

import pytest

from foldkappa.app.core.exceptions import InputError
from foldkappa.app.graphs.vertexset import VertexSet


def test_vertex_set_construction():
    """Test constructing vertex sets"""
    a = VertexSet.from_labels(4, [3, 0, 3])
    assert a.to_list() == [0, 3]
    assert len(a) == 2
    assert a.bits == 0b1001
    assert 3 in a and 1 not in a and -1 not in a
    assert list(a) == [0, 3]
    assert repr(a) == 'VertexSet(n=4, [0, 3])'
    assert not VertexSet.empty(4)
    assert len(VertexSet.full(4)) == 16
    with pytest.raises(InputError):
        VertexSet.from_labels(4, [16])
    with pytest.raises(InputError):
        VertexSet.from_labels(4, [True])
    with pytest.raises(InputError):
        VertexSet(2, 1 << 4)


def test_vertex_set_algebra():
    """Test set operations between vertex sets"""
    a = VertexSet.from_labels(3, [0, 1, 2])
    b = VertexSet.from_labels(3, [2, 3])
    assert (a | b).to_list() == [0, 1, 2, 3]
    assert (a & b).to_list() == [2]
    assert (a - b).to_list() == [0, 1]
    assert a.complement().to_list() == [3, 4, 5, 6, 7]
    assert a.with_label(7).to_list() == [0, 1, 2, 7]
    assert a.without_label(1).to_list() == [0, 2]
    assert VertexSet.from_labels(3, [1]).issubset(a)
    assert not b.issubset(a)
    assert VertexSet.from_labels(3, [5]).isdisjoint(a)
    assert a == VertexSet.from_labels(3, [2, 1, 0])
    assert a != VertexSet.from_labels(4, [0, 1, 2])
    assert len({a, VertexSet.from_labels(3, [0, 1, 2])}) == 1
    with pytest.raises(InputError):
        # mismatched dimensions
        a | VertexSet.from_labels(4, [0])
