import pytest

from coronaspectra import (BlockProfile, Graph, IntMatrix, UNARY_KINDS,
                           adjacency, block_profile, complement, complete,
                           complete_bipartite, cycle, degree_matrix,
                           empty_graph, from_edge_list, generate,
                           graph_from_json, graph_matrix, graph_to_json,
                           incidence, join, laplacian, line_graph, path,
                           semiregular_params, signless_laplacian, unary_op)
from coronaspectra.coronal import table_profile, unary_inserted_count
from coronaspectra.graphs import TAG_INSERTED, TAG_ORIGINAL, block_row_sums


def test_complete_generator():
    g = complete(3)
    assert g.n == 3 and g.m == 3


def test_complete_bipartite_tags():
    g = complete_bipartite(2, 3)
    assert g.m == 6
    assert g.tagged("X") == (0, 1)
    assert g.tagged("Y") == (2, 3, 4)


def test_cycle_regular():
    g = cycle(4)
    assert g.m == 4
    assert all(g.degree(v) == 2 for v in range(4))


def test_generator_rejects_empty():
    for bad in (lambda: complete(0), lambda: path(0), lambda: cycle(2),
                lambda: empty_graph(0), lambda: complete_bipartite(0, 2)):
        with pytest.raises(ValueError):
            bad()


def test_from_edge_list_validation():
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 3)])


def test_generate_dispatch():
    assert generate("path", n=4).m == 3
    with pytest.raises(ValueError):
        generate("nonsense", n=1)


def test_laplacian_k2():
    assert laplacian(complete(2)).to_rows() == [[1, -1], [-1, 1]]


def test_signless_k2():
    assert signless_laplacian(complete(2)).to_rows() == [[1, 1], [1, 1]]


def test_incidence_column_sums():
    b = incidence(complete(3))
    for j in range(b.cols):
        assert sum(b.at(i, j) for i in range(b.rows)) == 2


def test_incidence_identity():
    for g in (complete(4), cycle(5), path(4), complete_bipartite(2, 3)):
        b = incidence(g)
        assert b @ b.transpose() == adjacency(g) + degree_matrix(g)


def test_line_graph_identity():
    for g in (complete(4), cycle(5), path(4)):
        b = incidence(g)
        lg = line_graph(g)
        expect = adjacency(lg) + IntMatrix.identity(g.m).scale(2)
        assert b.transpose() @ b == expect


def test_graph_matrix_dispatch():
    g = cycle(4)
    assert graph_matrix(g, "laplacian") == laplacian(g)
    with pytest.raises(ValueError):
        graph_matrix(g, "nope")


def test_subdivision_of_c4_is_c8():
    s = unary_op("subdivision", cycle(4))
    assert s.n == 8 and s.m == 8
    assert all(s.degree(v) == 2 for v in range(8))
    # connected 2-regular on 8 vertices -> the 8-cycle
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in s.neighbors(v):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    assert seen == set(range(8))


def test_total_of_k2_is_k3():
    t = unary_op("total", complete(2))
    assert t.n == 3 and t.m == 3


def test_duplication_of_k2():
    d = unary_op("duplication", complete(2))
    assert d.n == 4
    assert sorted(d.edges) == [(0, 3), (1, 2)]


def test_unary_tags_and_counts():
    g = cycle(4)
    for kind in UNARY_KINDS:
        r = unary_op(kind, g)
        inserted = unary_inserted_count(kind, g.n, g.m)
        assert r.n == g.n + inserted
        assert r.tagged(TAG_ORIGINAL) == tuple(range(g.n))
        assert r.tagged(TAG_INSERTED) == tuple(range(g.n, r.n))


def test_subdivision_counts():
    for g in (complete(4), path(5), complete_bipartite(2, 3)):
        s = unary_op("subdivision", g)
        assert s.n == g.n + g.m
        assert s.m == 2 * g.m


def test_unary_on_edgeless_graph():
    s = unary_op("subdivision", empty_graph(3))
    assert s.n == 3 and s.m == 0
    d = unary_op("duplication", empty_graph(2))
    assert d.n == 4 and d.m == 0


def test_unknown_unary_kind():
    with pytest.raises(ValueError):
        unary_op("spin", complete(2))


def test_complement_involution():
    for g in (complete(4), cycle(5), path(4)):
        assert complement(complement(g)) == g
    assert complement(complete(4)).m == 0


def test_line_graph_of_path():
    lg = line_graph(path(3))
    assert lg.n == 2 and lg.m == 1


def test_join_star():
    star = join(complete(1), empty_graph(3))
    assert star.n == 4 and star.m == 3
    assert star.degree(0) == 3


def test_semiregular_detection():
    assert semiregular_params(complete_bipartite(2, 3)) is not None
    p = semiregular_params(complete_bipartite(2, 3))
    assert (p.n1, p.n2, p.r1, p.r2) == (2, 3, 3, 2)
    c = semiregular_params(cycle(6))
    assert (c.n1, c.n2, c.r1, c.r2) == (3, 3, 2, 2)
    assert semiregular_params(complete(3)) is None
    assert semiregular_params(cycle(5)) is None


def test_block_profile_examples():
    s = adjacency(unary_op("subdivision", cycle(4)))
    assert block_profile(s, 4).values() == (0, 2, 2, 0)
    k4 = adjacency(complete(4))
    assert block_profile(k4, 2).values() == (1, 2, 2, 1)
    t = adjacency(unary_op("total", cycle(4)))
    assert block_profile(t, 4).values() == (2, 2, 2, 2)


def test_block_profile_not_constant():
    p3 = adjacency(path(3))
    assert block_profile(p3, 2) is None
    sums = block_row_sums(p3, 2)
    assert sums[0] is not None and sums[1] is None


def test_block_profile_bad_split():
    with pytest.raises(ValueError):
        block_profile(adjacency(complete(3)), 0)
    with pytest.raises(ValueError):
        block_profile(adjacency(complete(3)), 3)


def test_table_values_reproduced_on_regular_bases():
    # every catalog operation applied to a regular base must reproduce the
    # tabulated block row sums, with the line-graph complement degree read
    # as m - 2r + 1
    for base in (cycle(4), complete(4)):
        n, m = base.n, base.m
        r = base.degree(0)
        for kind in UNARY_KINDS:
            got = block_profile(adjacency(unary_op(kind, base)), n)
            assert got is not None, kind
            assert got.values() == table_profile(kind, n, m, r), kind


def test_block_profile_reversed():
    prof = BlockProfile(1, 2, 3, 4, 2, 5)
    rev = prof.reversed()
    assert rev.values() == (4, 3, 2, 1)
    assert (rev.n1, rev.n2) == (5, 2)


def test_graph_json_roundtrip():
    g = complete_bipartite(2, 2).with_root(1)
    data = graph_to_json(g)
    assert graph_from_json(data) == g


def test_graph_json_generators():
    assert graph_from_json({"gen": "complete", "n": 5}) == complete(5)
    assert graph_from_json({"gen": "cycle", "n": 6}) == cycle(6)
    got = graph_from_json({"gen": "unary", "op": "subdivision",
                           "of": {"gen": "path", "n": 3}})
    assert got == unary_op("subdivision", path(3))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(ValueError):
        Graph(2, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph(2, root=5)
