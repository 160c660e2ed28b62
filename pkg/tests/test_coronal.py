import random
from fractions import Fraction

import pytest

from coronaspectra import (BlockProfile, IndexSet, IntMatrix, Poly, RatFun,
                           adjacency, charpoly_and_adjugate, complete,
                           complete_bipartite, coronal_constrained_partitioned,
                           coronal_equal_rowsum, coronal_generic,
                           coronal_kpq_subsets, coronal_partitioned,
                           coronal_schur_reduction, coronal_unary_table,
                           cycle, join, semiregular_params, table_check,
                           unary_op)
from coronaspectra.graphs import TAG_INSERTED, TAG_ORIGINAL


def test_index_set_validation():
    s = IndexSet.of([3, 1], 4)
    assert s.indices == (1, 3)
    with pytest.raises(ValueError):
        IndexSet.of([1, 1], 4)
    with pytest.raises(ValueError):
        IndexSet.of([4], 4)
    assert IndexSet.empty(3).is_empty
    assert IndexSet.full(3).is_full
    assert IndexSet.of([0, 2], 4).complement().indices == (1, 3)


def test_generic_one_by_one():
    g = coronal_generic(IntMatrix.from_rows([[0]]), IndexSet.full(1))
    assert g == RatFun(Poly([1]), Poly([0, 1]))


def test_generic_k2_single_vertex():
    g = coronal_generic(adjacency(complete(2)), IndexSet.of([0], 2))
    assert g == RatFun(Poly([0, 1]), Poly([-1, 0, 1]))


def test_generic_c4_full():
    g = coronal_generic(adjacency(cycle(4)), IndexSet.full(4))
    assert g == RatFun(Poly([4]), Poly([-2, 1]))


def test_generic_empty_subset_is_zero():
    for mat in (adjacency(complete(3)), adjacency(cycle(5))):
        assert coronal_generic(mat, IndexSet.empty(mat.rows)).is_zero


def test_equal_rowsum_examples():
    assert coronal_equal_rowsum(3, 2) == RatFun(Poly([3]), Poly([-2, 1]))
    assert coronal_equal_rowsum(1, 0) == RatFun(Poly([1]), Poly([0, 1]))


def test_equal_rowsum_matches_generic():
    for n in range(3, 9):
        got = coronal_equal_rowsum(n, 2)
        assert got == coronal_generic(adjacency(cycle(n)), IndexSet.full(n))
    for n in range(1, 9):
        got = coronal_equal_rowsum(n, n - 1)
        assert got == coronal_generic(adjacency(complete(n)), IndexSet.full(n))


def test_partitioned_k4():
    prof = BlockProfile(1, 2, 2, 1, 2, 2)
    got = coronal_partitioned(prof)
    assert got == coronal_generic(adjacency(complete(4)), IndexSet.full(4))
    assert got == RatFun(Poly([4]), Poly([-3, 1]))


def test_partitioned_join_formula():
    # join of an r1-regular and an r2-regular graph
    g = join(complete(2), cycle(4))
    n1, r1, n2, r2 = 2, 1, 4, 2
    prof = BlockProfile(r1, n2, n1, r2, n1, n2)
    expect = RatFun(
        Poly([n1 * (n2 - r2) + n2 * (n1 - r1), n1 + n2]),
        Poly([r1 * r2 - n1 * n2, -(r1 + r2), 1]))
    assert coronal_partitioned(prof) == expect
    assert expect == coronal_generic(adjacency(g), IndexSet.full(6))


def test_partitioned_semiregular():
    # bipartite with constant side degrees: ((n1+n2) x + 2 n1 r1) / (x^2 - r1 r2)
    for g in (complete_bipartite(2, 3), cycle(6)):
        p = semiregular_params(g)
        prof = BlockProfile(0, p.r1, p.r2, 0, p.n1, p.n2)
        expect = RatFun(Poly([2 * p.n1 * p.r1, p.n1 + p.n2]),
                        Poly([-p.r1 * p.r2, 0, 1]))
        assert coronal_partitioned(prof) == expect
        order = _bipartite_order(g)
        a = adjacency(g).submatrix(order, order)
        assert expect == coronal_generic(a, IndexSet.full(g.n))


def _bipartite_order(g):
    p = semiregular_params(g)
    # recolor the same way semiregular_params does
    color = [None] * g.n
    for start in range(g.n):
        if color[start] is not None:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if color[w] is None:
                    color[w] = 1 - color[v]
                    stack.append(w)
    return [v for v in range(g.n) if color[v] == 0] + \
        [v for v in range(g.n) if color[v] == 1]


def test_constrained_semiregular():
    # n1 x / (x^2 - r1 r2) for the side-X constraint
    for g in (complete_bipartite(2, 3), cycle(6)):
        p = semiregular_params(g)
        prof = BlockProfile(0, p.r1, p.r2, 0, p.n1, p.n2)
        got = coronal_constrained_partitioned(prof)
        assert got == RatFun(Poly([0, p.n1]), Poly([-p.r1 * p.r2, 0, 1]))
        order = _bipartite_order(g)
        a = adjacency(g).submatrix(order, order)
        assert got == coronal_generic(a, IndexSet.of(range(p.n1), g.n))


def test_constrained_complete_subsets():
    # t (x - n + t + 1) / ((x+1)(x - n + 1)) for t vertices of the complete graph
    for n in range(1, 7):
        a = adjacency(complete(n))
        for t in range(1, n + 1):
            prof = BlockProfile(t - 1, n - t, t, n - t - 1, t, max(n - t, 1)) \
                if t < n else None
            got = (coronal_constrained_partitioned(prof) if prof
                   else coronal_equal_rowsum(n, n - 1))
            expect = RatFun(Poly([t * (t + 1 - n), t]) * Fraction(1),
                            Poly([1 - n, 2 - n, 1]))
            assert got == expect
            assert got == coronal_generic(a, IndexSet.of(range(t), n))


def test_constrained_k4_example():
    got = coronal_generic(adjacency(complete(4)), IndexSet.of([0, 1], 4))
    assert got == RatFun(Poly([-2, 2]), Poly([-3, -2, 1]))


def test_kpq_subsets_exhaustive():
    for p in range(1, 5):
        for q in range(1, 5):
            a = adjacency(complete_bipartite(p, q))
            for s1 in range(p + 1):
                for s2 in range(q + 1):
                    chosen = list(range(s1)) + list(range(p, p + s2))
                    got = coronal_kpq_subsets(p, q, s1, s2)
                    assert got == coronal_generic(a, IndexSet.of(chosen, p + q))


def test_kpq_full_reduces_to_join_form():
    for p, q in ((1, 1), (2, 3), (3, 4)):
        got = coronal_kpq_subsets(p, q, p, q)
        expect = RatFun(Poly([2 * p * q, p + q]), Poly([-p * q, 0, 1]))
        assert got == expect


def test_kpq_empty():
    assert coronal_kpq_subsets(2, 3, 0, 0).is_zero


def test_kpq_bad_sizes():
    with pytest.raises(ValueError):
        coronal_kpq_subsets(2, 3, 3, 0)


def test_schur_reduction_examples():
    a = adjacency(complete(2))
    got = coronal_schur_reduction(a, IndexSet.of([0], 2))
    assert got == RatFun(Poly([0, 1]), Poly([-1, 0, 1]))
    c4 = adjacency(cycle(4))
    alpha = IndexSet.of([0, 2], 4)
    assert coronal_schur_reduction(c4, alpha) == coronal_generic(c4, alpha)


def test_schur_reduction_rejects_trivial_subsets():
    a = adjacency(complete(3))
    with pytest.raises(ValueError):
        coronal_schur_reduction(a, IndexSet.full(3))
    with pytest.raises(ValueError):
        coronal_schur_reduction(a, IndexSet.empty(3))


def test_schur_reduction_random():
    rng = random.Random(23)
    for _ in range(15):
        n = rng.randint(2, 5)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                rows[i][j] = rows[j][i] = rng.randint(-2, 2)
        for i in range(n):
            rows[i][i] = rng.randint(-2, 2)
        m = IntMatrix.from_rows(rows)
        size = rng.randint(1, n - 1)
        alpha = IndexSet.of(rng.sample(range(n), size), n)
        assert coronal_schur_reduction(m, alpha) == coronal_generic(m, alpha)


def test_permutation_invariance():
    rng = random.Random(29)
    for _ in range(15):
        n = rng.randint(2, 6)
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        m = IntMatrix.from_rows(rows)
        alpha = IndexSet.of(rng.sample(range(n), rng.randint(0, n)), n)
        perm = list(range(n))
        rng.shuffle(perm)
        permuted = m.submatrix(perm, perm)
        # vertex i of the original sits at position perm.index(i)
        moved = IndexSet.of([perm.index(i) for i in alpha.indices], n)
        assert coronal_generic(permuted, moved) == coronal_generic(m, alpha)


def test_coronal_shape_invariants():
    rng = random.Random(31)
    for _ in range(10):
        n = rng.randint(1, 6)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                v = rng.randint(-2, 2)
                rows[i][j] = rows[j][i] = v
        m = IntMatrix.from_rows(rows)
        alpha = IndexSet.of(rng.sample(range(n), rng.randint(1, n)), n)
        got = coronal_generic(m, alpha)
        assert got.num.degree < got.den.degree
        p = charpoly_and_adjugate(m)[0]
        assert (p % got.den).is_zero


def test_unary_table_examples():
    got = coronal_unary_table("subdivision", "V", 4, 4, 2)
    assert got == RatFun(Poly([0, 4]), Poly([-4, 0, 1]))
    total_i = coronal_unary_table("total", "I", 4, 4, 2)
    prof = BlockProfile(2, 2, 2, 2, 4, 4)
    assert total_i == coronal_constrained_partitioned(prof)


def test_unary_table_against_generic_on_c4():
    from coronaspectra import UNARY_KINDS
    base = cycle(4)
    n, m, r = 4, 4, 2
    for kind in UNARY_KINDS:
        gp = unary_op(kind, base)
        a = adjacency(gp)
        v_set = IndexSet.of(gp.tagged(TAG_ORIGINAL), gp.n)
        i_set = IndexSet.of(gp.tagged(TAG_INSERTED), gp.n)
        assert coronal_unary_table(kind, "all", n, m, r) == \
            coronal_generic(a, IndexSet.full(gp.n)), kind
        assert coronal_unary_table(kind, "V", n, m, r) == \
            coronal_generic(a, v_set), kind
        assert coronal_unary_table(kind, "I", n, m, r) == \
            coronal_generic(a, i_set), kind


def test_unary_table_bad_inputs():
    with pytest.raises(ValueError):
        coronal_unary_table("spin", "all", 4, 4, 2)
    with pytest.raises(ValueError):
        coronal_unary_table("total", "W", 4, 4, 2)


def test_table_check_c4():
    report = table_check(cycle(4))
    assert report.all_match
    assert len(report.rows) == 36
    seventeen = [n for n in report.notes if n.row == 17]
    assert len(seventeen) == 1
    assert seventeen[0].kind == "complete_central"
    assert not seventeen[0].match_as_printed
    assert any(n.row == 0 for n in report.notes)  # the m' reading note


def test_table_check_needs_regular_base():
    from coronaspectra import path
    with pytest.raises(ValueError):
        table_check(path(3))
