import json

import pytest

import elimtree as et


@pytest.fixture
def p3():
    return et.Graph(3, [(0, 1), (1, 2)])


def test_graph_basics(p3):
    assert p3.n == 3
    assert p3.edges() == [(0, 1), (1, 2)]
    assert p3.neighbors(1) == [0, 2]
    assert p3.is_connected()
    assert et.generate("path", 3) == p3


def test_tree_and_rotation(p3):
    chain = et.ElimTree([-1, 0, 1])
    assert chain.root == 0
    assert et.validate(p3, chain) == (True, "")
    ok, why = et.validate(p3, et.ElimTree([-1, 0, 0]))
    assert not ok and "{1,2}" in why
    star = et.rotate(p3, chain, 0, 1)
    assert star.parents == [1, -1, 1]
    assert et.rotate(p3, star, 1, 0) == chain
    assert et.from_ordering(p3, [1, 0, 2]) == star


def test_distance_and_decide(p3):
    a = et.ElimTree([-1, 0, 1])
    b = et.ElimTree([1, 2, -1])
    assert et.bfs_distance(p3, a, b) == 2
    assert et.bfs_distance(p3, a, b, cap=1) is None
    assert len(et.bfs_path(p3, a, b)) == 2

    no = et.decide(p3, a, b, 1)
    assert not no
    yes = et.decide(p3, a, b, 2)
    assert yes.yes and len(yes.witness) == 2
    assert et.apply_sequence(p3, a, yes.witness) == b
    assert set(v for e in yes.witness for v in e) <= set(yes.marked)
    assert json.loads(yes.explain)["verdict"] == "YES"


def test_enumeration():
    trees, adjacency = et.enumerate_trees(et.generate("path", 4))
    assert len(trees) == 14 and len(adjacency) == 14
    assert et.diameter(et.generate("complete", 3)) == 3


def test_errors(p3):
    with pytest.raises(et.ElimTreeError, match="InvalidTree"):
        et.ElimTree([-1, -1])
    with pytest.raises(et.ElimTreeError, match="NotATreeEdge"):
        et.rotate(p3, et.ElimTree([-1, 0, 1]), 0, 2)
    with pytest.raises(ValueError):
        et.Graph(2, [(0, 5)])
    with pytest.raises(et.ElimTreeError, match="InstanceTooLarge"):
        et.enumerate_trees(et.generate("path", 11))
