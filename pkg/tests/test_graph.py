"""Graph value type and structural utilities."""

from fractions import Fraction

import pytest

from helpers import complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from isect.errors import DisconnectedGraph, MalformedModel, NotSubgraph
from isect.graph import (
    Graph,
    bfs_apsp,
    cut_vertices_and_blocks,
    hinge_vertices,
    is_tree_t_spanner,
    metrics,
)


def test_build_normalizes_edges():
    g = Graph.build(3, [(3, 1), (2, 3)])
    assert g.sorted_edges() == [(1, 3), (2, 3)]
    assert g.has_edge(1, 3) and g.has_edge(3, 1)
    assert not g.has_edge(1, 2)


def test_build_rejects_bad_edges():
    with pytest.raises(MalformedModel):
        Graph.build(3, [(1, 1)])
    with pytest.raises(MalformedModel):
        Graph.build(3, [(1, 4)])
    with pytest.raises(MalformedModel):
        Graph.build(3, [(0, 2)])


def test_build_rejects_negative_weight():
    with pytest.raises(MalformedModel):
        Graph.build(2, [(1, 2)], weights={1: -1})


def test_weights_default_to_one():
    g = Graph.build(2, [(1, 2)], weights={1: Fraction(5, 2)})
    assert g.weight(1) == Fraction(5, 2)
    assert g.weight(2) == 1


def test_complement_of_path():
    assert path_graph(4).complement().sorted_edges() == [(1, 3), (1, 4), (2, 4)]


def test_induced_relabels_and_maps_back():
    g = cycle_graph(5)
    sub, back = g.induced([2, 3, 5])
    assert sub.n == 3
    assert sub.sorted_edges() == [(1, 2)]  # only (2,3) survives
    assert back == {1: 2, 2: 3, 3: 5}


def test_components_and_connectivity():
    g = Graph.build(5, [(1, 2), (4, 5)])
    comps = sorted(tuple(sorted(c)) for c in g.components())
    assert comps == [(1, 2), (3,), (4, 5)]
    assert not g.is_connected()
    assert cycle_graph(4).is_connected()
    assert empty_graph(1).is_connected()


def test_bfs_apsp_path():
    assert bfs_apsp(path_graph(4)) == [
        [0, 1, 2, 3],
        [1, 0, 1, 2],
        [2, 1, 0, 1],
        [3, 2, 1, 0],
    ]


def test_bfs_apsp_marks_unreachable_with_none():
    d = bfs_apsp(empty_graph(2))
    assert d == [[0, None], [None, 0]]


def test_bfs_apsp_single_vertex():
    assert bfs_apsp(empty_graph(1)) == [[0]]


def test_metrics_c5():
    m = metrics(cycle_graph(5))
    assert set(m.ecc.values()) == {2}
    assert m.radius == 2 and m.diameter == 2
    assert m.center == frozenset({1, 2, 3, 4, 5})
    assert m.mean_distance == Fraction(3, 2)


def test_metrics_p4():
    m = metrics(path_graph(4))
    assert m.ecc == {1: 3, 2: 2, 3: 2, 4: 3}
    assert m.radius == 2 and m.diameter == 3
    assert m.center == frozenset({2, 3})
    assert m.mean_distance == Fraction(5, 3)


def test_metrics_requires_connected():
    with pytest.raises(DisconnectedGraph):
        metrics(empty_graph(2))
    with pytest.raises(MalformedModel):
        metrics(empty_graph(0))


def test_hinge_vertices():
    assert hinge_vertices(path_graph(3)) == frozenset({2})
    assert hinge_vertices(cycle_graph(4)) == frozenset()
    assert hinge_vertices(path_graph(5)) == frozenset({2, 3, 4})
    # C5 plus a chord: removing a chord endpoint stretches some pair
    g = Graph.build(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)])
    assert hinge_vertices(g) == frozenset({2, 5})


def test_cut_vertices_and_blocks_path():
    cuts, blocks = cut_vertices_and_blocks(path_graph(3))
    assert cuts == frozenset({2})
    assert sorted(tuple(sorted(b)) for b in blocks) == [(1, 2), (2, 3)]


def test_cut_vertices_and_blocks_cycle():
    cuts, blocks = cut_vertices_and_blocks(cycle_graph(4))
    assert cuts == frozenset()
    assert [tuple(sorted(b)) for b in blocks] == [(1, 2, 3, 4)]


def test_blocks_two_triangles_sharing_vertex():
    g = Graph.build(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    cuts, blocks = cut_vertices_and_blocks(g)
    assert cuts == frozenset({3})
    assert sorted(tuple(sorted(b)) for b in blocks) == [(1, 2, 3), (3, 4, 5)]


def test_blocks_cover_isolated_vertices():
    cuts, blocks = cut_vertices_and_blocks(empty_graph(2))
    assert cuts == frozenset()
    assert sorted(tuple(sorted(b)) for b in blocks) == [(1,), (2,)]


def test_blocks_cover_all_edges_random_shape():
    g = Graph.build(7, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (6, 4), (6, 7)])
    cuts, blocks = cut_vertices_and_blocks(g)
    assert cuts == frozenset({3, 4, 6})
    covered = set()
    for b in blocks:
        for u in b:
            for v in b:
                if u < v and g.has_edge(u, v):
                    covered.add((u, v))
    assert covered == set(g.sorted_edges())


def test_tree_spanner_checks():
    c4 = cycle_graph(4)
    tree = Graph.build(4, [(1, 2), (2, 3), (3, 4)])
    assert is_tree_t_spanner(c4, tree, 3)
    assert not is_tree_t_spanner(c4, tree, 2)
    assert is_tree_t_spanner(path_graph(4), path_graph(4), 1)


def test_tree_spanner_rejects_foreign_edge():
    with pytest.raises(NotSubgraph):
        is_tree_t_spanner(path_graph(4), Graph.build(4, [(1, 2), (2, 3), (1, 4)]), 3)


def test_tree_spanner_rejects_non_tree():
    c4 = cycle_graph(4)
    triangle_plus_isolated = Graph.build(4, [(1, 2), (2, 3), (1, 3)])
    with pytest.raises(NotSubgraph):
        # (1,3) is not an edge of C4
        is_tree_t_spanner(c4, triangle_plus_isolated, 3)
    k4 = complete_graph(4)
    assert not is_tree_t_spanner(k4, Graph.build(4, [(1, 2), (2, 3), (1, 3)]), 3)


def test_tree_spanner_accepts_fraction_stretch():
    star = star_graph(3)
    assert is_tree_t_spanner(star, star, Fraction(3, 2))
