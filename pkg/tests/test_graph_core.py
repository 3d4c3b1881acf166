import pytest
from oracles import rank_fraction

from ci_toric import (
    Graph,
    PreconditionError,
    bipartite_components,
    contract_deg2,
    delete_vertices,
    height,
    incidence_matrix,
    integer_rank,
    parse_graph,
)
from ci_toric.families import complete, contraejemplo, cycle, fig4, fig5, path, three_triangles
from ci_toric.graph import blocks, count_bipartite, is_two_connected


def test_triangle_parse():
    g = parse_graph("1 2\n2 3\n1 3")
    assert (g.num_vertices, g.num_edges) == (3, 3)


def test_fig5_sizes_and_height():
    g = fig5()
    assert (g.num_vertices, g.num_edges) == (7, 9)
    assert height(g) == 2


def test_isolated_vertices_preserved():
    g = parse_graph("vertices: 1 2\n")
    assert (g.num_vertices, g.num_edges) == (2, 0)
    assert height(g) == 0


@pytest.mark.parametrize(
    "g, comps, b",
    [(cycle(4), 1, 1), (complete(4), 1, 0), (three_triangles(), 1, 0)],
)
def test_bipartite_components(g, comps, b):
    info = bipartite_components(g)
    assert (info.count_components, info.b) == (comps, b)


def test_colorings_are_proper():
    g = Graph(6, [(0, 1), (1, 2), (3, 4)])
    info = bipartite_components(g)
    assert info.b == 3  # two paths and an isolated vertex
    for col in info.colorings:
        for u, v in g.edges:
            if u in col and v in col:
                assert col[u] != col[v]


def test_three_triangles_shape():
    g = three_triangles()
    assert (g.num_vertices, g.num_edges) == (9, 11)


@pytest.mark.parametrize("g, h", [(cycle(4), 1), (complete(4), 2), (fig5(), 2)])
def test_height(g, h):
    assert height(g) == h


def test_height_ignores_isolated():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert height(g) == 1


def test_delete_vertices():
    k4 = complete(4)
    t = delete_vertices(k4, {0})
    assert (t.num_vertices, t.num_edges) == (3, 3)
    g = fig5()
    h = delete_vertices(g, {g.vertex("v7")})
    assert (h.num_vertices, h.num_edges) == (6, 7)
    assert set(h.edge_ids) == set(range(7))
    same = delete_vertices(g, set())
    assert set(same.edge_ids) == set(g.edge_ids)
    for e in h.edge_ids:
        assert h.endpoints(e) == g.endpoints(e)


def test_contract_path():
    g = path(3)
    c = contract_deg2(g, 1)
    assert (c.num_vertices, c.num_edges) == (1, 0)


def test_contract_square_merges_parallel_edges():
    g = cycle(4)  # v1 v2 v3 v4
    c = contract_deg2(g, g.vertex("v1"))
    assert (c.num_vertices, c.num_edges) == (2, 1)
    assert "v2+v4" in c.labels and "v3" in c.labels


def test_contract_fig4():
    g = fig4()
    c = contract_deg2(g, g.vertex("v"))
    assert (c.num_vertices, c.num_edges) == (6, 7)
    assert "u1+u2" in c.labels


def test_contract_preconditions():
    with pytest.raises(PreconditionError, match="triangle"):
        contract_deg2(complete(3), 0)
    with pytest.raises(PreconditionError, match="degree"):
        contract_deg2(complete(4), 0)


def test_contract_preserves_bipartiteness():
    for g in (cycle(6), cycle(7), fig4(), contraejemplo()):
        for v in g.vertices:
            if g.degree(v) == 2 and not g.has_edge(*g.neighbors(v)):
                c = contract_deg2(g, v)
                assert (bipartite_components(g).b > 0) == (bipartite_components(c).b > 0)


def test_incidence_matrix():
    assert incidence_matrix(Graph(2, [(0, 1)])) == [[1], [1]]
    tri = incidence_matrix(complete(3))
    assert all(sum(row[j] for row in tri) == 2 for j in range(3))
    c4 = incidence_matrix(cycle(4))
    assert integer_rank(c4) == 3 == rank_fraction(c4)


def test_rank_formula_on_small_graphs(small_corpus):
    for g in small_corpus:
        a = incidence_matrix(g)
        assert integer_rank(a) == g.num_vertices - bipartite_components(g).b


def test_degree_observation(small_corpus):
    for g in small_corpus:
        b = count_bipartite(g)
        for v in g.vertices:
            d = count_bipartite(g, (v,)) - b
            if g.degree(v) == 2:
                assert d in (0, 1)
            elif g.degree(v) == 1:
                assert d == 0


def test_rejects_loops_and_duplicates():
    with pytest.raises(PreconditionError):
        Graph(2, [(0, 0)])
    with pytest.raises(PreconditionError):
        Graph(2, [(0, 1), (1, 0)])


def test_blocks():
    g = three_triangles()
    bl, cuts = blocks(g)
    assert len(bl) == 5
    assert {g.label(c) for c in cuts} == {"t1a", "t2a", "t3a"}
    assert is_two_connected(cycle(5)) and not is_two_connected(path(4))
