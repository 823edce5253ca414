import pytest

from horadam.errors import ParameterError, ResourceLimitError
from horadam.graph import adjacent, bfs_distances, build_graph, color_of, degree_histogram, two_coloring
from horadam.sequences import edge_count, vertex_count
from horadam.words import Params


def test_adjacent_examples():
    assert adjacent((0, 0, 1, 0), (0, 0, 2, 0))
    assert adjacent((0, 4, 1), (0, 4, 2))
    assert not adjacent((0, 0, 2), (0, 2, 0))
    assert not adjacent((0, 0), (0, 2))
    assert not adjacent((1, 1), (1, 1))
    with pytest.raises(ParameterError):
        adjacent((0, 1), (0,))


@pytest.mark.parametrize("abn, nv, ne", [((3, 2, 1), 3, 2), ((1, 2, 3), 5, 4), ((2, 2, 4), 44, 88)])
def test_build_examples(abn, nv, ne):
    g = build_graph(Params(*abn))
    assert (g.num_vertices, g.num_edges) == (nv, ne)


def test_graph_invariants_on_grid():
    for a in range(1, 5):
        for b in range(1, 5):
            for n in range(0, 9):
                p = Params(a, b, n)
                if vertex_count(p) > 20000:
                    continue
                g = build_graph(p)
                assert g.num_vertices == vertex_count(p)
                assert g.num_edges == edge_count(p)
                for i, nb in enumerate(g.adjacency):
                    assert list(nb) == sorted(set(nb))
                    assert i not in nb
                    assert all(i in g.adjacency[j] for j in nb)


def test_build_cap():
    with pytest.raises(ResourceLimitError):
        build_graph(Params(3, 3, 12), cap=10_000)


def test_degree_histogram_examples():
    assert degree_histogram(build_graph(Params(3, 2, 2))) == {1: 1, 2: 4, 3: 5, 4: 1}
    assert degree_histogram(build_graph(Params(1, 2, 1))) == {0: 1}
    assert degree_histogram(build_graph(Params(3, 2, 3))) == {2: 4, 3: 10, 4: 16, 5: 8, 6: 1}


def test_two_coloring():
    assert color_of((0, 1, 0, 1)) == 0
    assert color_of((0, 1, 0, 0)) == 1
    assert color_of(()) == 0
    g = build_graph(Params(2, 2, 4))
    colors = two_coloring(g)
    assert all(colors[i] != colors[j] for i, j in g.edges())


def test_bfs_examples():
    g = build_graph(Params(3, 2, 1))
    assert bfs_distances(g, 0) == [0, 1, 2]
    j = build_graph(Params(1, 2, 4))
    d = bfs_distances(j, j.index((0, 2, 0, 2)))
    assert d[j.index((0, 0, 0, 0))] == 4
    assert d[j.index((0, 2, 0, 2))] == 0
    with pytest.raises(ParameterError):
        bfs_distances(g, 7)


def test_distance_at_least_letter_difference():
    p = Params(3, 2, 4)
    g = build_graph(p)
    for s in range(0, g.num_vertices, 7):
        d = bfs_distances(g, s)
        for t, w in enumerate(g.vertices):
            assert d[t] >= sum(abs(x - y) for x, y in zip(g.vertices[s], w))


def test_index_and_membership():
    g = build_graph(Params(1, 2, 3))
    assert (0, 2, 0) in g
    assert (2, 0, 0) not in g
    assert g.index((0, 2, 0)) == 4
    with pytest.raises(ParameterError):
        g.index((2, 0, 0))
