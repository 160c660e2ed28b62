import random

import pytest

from coronaspectra import (CoronaSpec, IndexSet, build, complete, cycle,
                           empty_graph, oracle_charpoly, path,
                           spec_from_json, spec_to_json, theorem_charpoly,
                           unary_op)
from coronaspectra.corona import (cluster, corona, corona_edge_subdivision,
                                  corona_vertex_subdivision, generalized,
                                  unary_variant)


def test_build_k1_with_k2_gives_triangle():
    spec = corona(complete(1), complete(2))
    g = build(spec)
    assert g.n == 3 and g.m == 3


def test_build_k2_with_k1_gives_path4():
    spec = corona(complete(2), complete(1))
    g = build(spec)
    assert g.n == 4
    assert sorted(g.edges) == [(0, 1), (0, 2), (1, 3)]


def test_build_cluster_gives_path6():
    spec = cluster(complete(2), complete(2).with_root(0))
    g = build(spec)
    assert g.n == 6 and g.m == 5
    degs = sorted(g.degree(v) for v in range(6))
    assert degs == [1, 1, 2, 2, 2, 2]


def test_vertex_counts():
    rng = random.Random(13)
    for _ in range(10):
        base = cycle(rng.randint(3, 5))
        copies = []
        for _ in range(base.n):
            h = complete(rng.randint(1, 4))
            t = IndexSet.of(rng.sample(range(h.n), rng.randint(0, h.n)), h.n)
            copies.append((h, t))
        spec = CoronaSpec(base, tuple(copies))
        g = build(spec)
        assert g.n == base.n + sum(h.n for h, _ in copies)
        assert g.m == base.m + sum(h.m for h, _ in copies) + \
            sum(t.size for _, t in copies)


def test_corona_degree_property():
    base = cycle(4)
    h = complete(3)
    g = build(corona(base, h))
    for v in range(base.n):
        assert g.degree(v) == base.degree(v) + h.n


def test_empty_attachment_allowed():
    spec = CoronaSpec(complete(1), ((complete(3), IndexSet.empty(3)),))
    g = build(spec)
    assert g.n == 4 and g.m == 3


def test_spec_validation():
    with pytest.raises(ValueError):
        CoronaSpec(complete(2), ((complete(2), IndexSet.full(2)),))
    with pytest.raises(ValueError):
        CoronaSpec(complete(1), ((complete(2), IndexSet.full(3)),))


def test_cluster_needs_root():
    with pytest.raises(ValueError):
        cluster(complete(2), complete(2))


def test_generalized_lengths():
    spec = generalized(path(3), [complete(1), complete(2), complete(3)])
    assert [h.n for h, _ in spec.copies] == [1, 2, 3]
    assert all(t.is_full for _, t in spec.copies)
    with pytest.raises(ValueError):
        generalized(path(3), [complete(1)])


def test_corona_vertex_and_edge_subdivision():
    vs = corona_vertex_subdivision(complete(2), path(3))
    es = corona_edge_subdivision(complete(2), path(3))
    for spec, expect_t in ((vs, (0, 1, 2)), (es, (3, 4))):
        for h, t in spec.copies:
            assert h.n == 5  # P3 subdivided: 3 originals + 2 inserted
            assert t.indices == expect_t


def test_edge_subdivision_of_edgeless_copy():
    spec = corona_edge_subdivision(complete(2), empty_graph(2))
    assert all(t.is_empty for _, t in spec.copies)
    build(spec)


def test_unary_variant():
    spec = unary_variant(path(3), complete(3), "duplication", "I")
    for h, t in spec.copies:
        assert h.n == 6
        assert t.indices == (3, 4, 5)
    with pytest.raises(ValueError):
        unary_variant(path(3), complete(3), "duplication", "W")
    with pytest.raises(ValueError):
        unary_variant(path(3), [complete(3)], "duplication", "V")


def test_duplication_attachment_sides_are_cospectral():
    # attaching at the originals of a duplication or at its inserted copies
    # yields isomorphic compositions; the spectra must agree exactly
    base = path(3)
    v_spec = unary_variant(base, complete(3), "duplication", "V")
    i_spec = unary_variant(base, complete(3), "duplication", "I")
    for kind in ("adjacency", "laplacian", "signless"):
        assert theorem_charpoly(v_spec, kind) == theorem_charpoly(i_spec, kind)
        assert oracle_charpoly(v_spec, kind) == oracle_charpoly(i_spec, kind)


def test_spec_json_roundtrip():
    spec = cluster(complete(2), complete(2).with_root(0))
    data = spec_to_json(spec)
    assert spec_from_json(data) == spec


def test_spec_json_subset_forms():
    sh = unary_op("subdivision", path(3))
    data = {
        "base": {"gen": "complete", "n": 2},
        "copies": [
            {"h": {"gen": "unary", "op": "subdivision", "of": {"gen": "path", "n": 3}},
             "t": "tag:V"},
            {"h": {"gen": "complete", "n": 2}, "t": "all"},
        ],
    }
    spec = spec_from_json(data)
    assert spec.copies[0][0] == sh
    assert spec.copies[0][1].indices == (0, 1, 2)
    assert spec.copies[1][1].is_full
    data["copies"][1]["t"] = []
    assert spec_from_json(data).copies[1][1].is_empty
    data["copies"][1]["t"] = "tag:W"
    with pytest.raises(ValueError):
        spec_from_json(data)
