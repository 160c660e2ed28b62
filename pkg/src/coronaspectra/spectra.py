"""Characteristic polynomials of corona-style compositions.

For a composition with base G and copies (H_i, T_i), the characteristic
polynomial of the adjacency matrix factors through a block determinant:

    P(x) = prod_i P_{H_i}(x) * det( xI_n - A(G) - diag(Gamma_i(x)) ),

where Gamma_i is the coronal of A(H_i) constrained by T_i.  The Laplacian and
signless Laplacian versions replace A(G) by L(G)/Q(G) shifted by diag(|T_i|)
and the copy matrices by L(H_i)+R_{T_i} / Q(H_i)+R_{T_i}, with R_T the 0-1
diagonal indicator of T.

Everything here is exact.  The determinant with rational-function entries is
cleared row by row (each reduced coronal denominator divides its constituent
characteristic polynomial), keeping the whole pipeline inside polynomial
arithmetic.  ``oracle_charpoly`` is the independent check: it builds the
composition explicitly and runs the characteristic-polynomial recurrence on
the integer matrix.  Closed-form fast paths never overwrite the general
answer; reports carry both sides of every comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import corona as corona_mod
from . import graphs
from .corona import CoronaSpec, build
from .coronal import IndexSet, coronal_constrained_partitioned, coronal_partitioned
from .graphs import Graph
from .polyrat import (ONE, Poly, PolyMatrix, RatFun, IntMatrix,
                      charpoly_and_adjugate, poly_to_json, polymatrix_det)

MATRIX_KINDS = ("adjacency", "laplacian", "signless")

#: Vertex ceiling for the explicit-matrix oracle.
DEFAULT_ORACLE_LIMIT = 64
#: Vertex ceiling for the block-determinant path.
DEFAULT_THEOREM_LIMIT = 256


class SizeLimitError(RuntimeError):
    """Raised when a computation would exceed the configured vertex bound."""


@dataclass(frozen=True)
class PerturbedLaplacian:
    """L(H) + R_T for a copy graph H and attachment subset T."""

    h: Graph
    t: IndexSet

    def __post_init__(self):
        if self.t.source_n != self.h.n:
            raise ValueError("subset does not match the graph")

    @property
    def matrix(self) -> IntMatrix:
        return _plus_indicator(graphs.laplacian(self.h), self.t)


def _plus_indicator(m: IntMatrix, t: IndexSet) -> IntMatrix:
    ent = list(m.entries)
    for v in t.indices:
        ent[v * m.cols + v] += 1
    return IntMatrix(m.rows, m.cols, ent)


def _copy_matrix(h: Graph, t: IndexSet, kind: str) -> IntMatrix:
    if kind == "adjacency":
        return graphs.adjacency(h)
    if kind == "laplacian":
        return _plus_indicator(graphs.laplacian(h), t)
    if kind == "signless":
        return _plus_indicator(graphs.signless_laplacian(h), t)
    raise ValueError(f"unknown matrix kind {kind!r}")


def _base_matrix(g: Graph, kind: str) -> IntMatrix:
    if kind == "adjacency":
        return graphs.adjacency(g)
    if kind == "laplacian":
        return graphs.laplacian(g)
    if kind == "signless":
        return graphs.signless_laplacian(g)
    raise ValueError(f"unknown matrix kind {kind!r}")


def _copy_coronal(h: Graph, t: IndexSet, kind: str):
    """(constituent charpoly, coronal) for one copy under the given matrix."""
    mat = _copy_matrix(h, t, kind)
    p, adj = charpoly_and_adjugate(mat)
    total = Poly()
    for i in t.indices:
        for j in t.indices:
            total = total + adj.at(i, j)
    return p, RatFun(total, p)


def copy_coronal(h: Graph, t: IndexSet, kind: str) -> RatFun:
    """Coronal of the copy matrix (A, L+R_T or Q+R_T) constrained by T."""
    return _copy_coronal(h, t, kind)[1]


def _shift(t: IndexSet, kind: str) -> int:
    return 0 if kind == "adjacency" else t.size


def _theorem_charpoly(spec: CoronaSpec, kind: str) -> Poly:
    base = _base_matrix(spec.base, kind)
    n = spec.base.n
    rows = []
    result_scale = ONE
    for i, (h, t) in enumerate(spec.copies):
        p_i, gamma = _copy_coronal(h, t, kind)
        q_i, num_i = gamma.den, gamma.num
        result_scale = result_scale * p_i.exact_div(q_i)
        shift = _shift(t, kind)
        row = []
        for j in range(n):
            if i == j:
                row.append(q_i * Poly([-shift - base.at(i, i), 1]) - num_i)
            else:
                row.append(q_i * Fraction(-base.at(i, j)))
        rows.append(row)
    det = polymatrix_det(PolyMatrix.from_rows(rows))
    result = result_scale * det
    _check_charpoly_shape(result, spec.total_vertices)
    return result


def _check_charpoly_shape(p: Poly, degree: int):
    if p.degree != degree or not p.is_monic or not p.has_integer_coeffs():
        raise ArithmeticError("block-determinant pipeline produced a malformed "
                              "characteristic polynomial")


def adjacency_charpoly(spec: CoronaSpec) -> Poly:
    """Characteristic polynomial of the adjacency matrix, block-determinant path."""
    return _theorem_charpoly(spec, "adjacency")


def laplacian_charpoly(spec: CoronaSpec) -> Poly:
    """Characteristic polynomial of the Laplacian matrix, block-determinant path."""
    return _theorem_charpoly(spec, "laplacian")


def signless_charpoly(spec: CoronaSpec) -> Poly:
    """Characteristic polynomial of the signless Laplacian, block-determinant path."""
    return _theorem_charpoly(spec, "signless")


def theorem_charpoly(spec: CoronaSpec, kind: str) -> Poly:
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    return _theorem_charpoly(spec, kind)


def oracle_charpoly(spec: CoronaSpec, kind: str,
                    max_vertices: int = DEFAULT_ORACLE_LIMIT) -> Poly:
    """Independent check: build the composition and take the characteristic
    polynomial of the explicit integer matrix."""
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    if spec.total_vertices > max_vertices:
        raise SizeLimitError(
            f"{spec.total_vertices} vertices exceed the oracle bound {max_vertices}")
    g = build(spec)
    mat = _base_matrix(g, kind)
    return charpoly_and_adjugate(mat)[0]


# ---------------------------------------------------------------------------
# closed-form fast paths


def compose_charpoly_with_ratfun(char: Poly, num: Poly, den: Poly) -> Poly:
    """den^deg(char) * char(num/den), i.e. prod_j (num - lambda_j den) over the
    roots lambda_j of char.  Evaluated by Horner, exactly."""
    if char.is_zero:
        raise ValueError("cannot compose with the zero polynomial")
    n = int(char.degree)
    acc = Poly([char.coefficient(n)])
    dp = ONE
    for k in range(n - 1, -1, -1):
        dp = dp * den
        acc = acc * num + char.coefficient(k) * dp
    return acc


def _substitution_charpoly(base: IntMatrix, shift, gamma: RatFun,
                           constituents) -> Poly:
    """prod_i P_i(x) * prod_j (x - shift - mu_j - Gamma(x)) for the eigenvalues
    mu_j of the base matrix, assembled without eigenvalues: the shared coronal
    is substituted into the base characteristic polynomial and the denominators
    cancel against the constituent polynomials."""
    char_base = charpoly_and_adjugate(base)[0]
    q, p_num = gamma.den, gamma.num
    u = q * Poly([-Fraction(shift), 1]) - p_num
    result = compose_charpoly_with_ratfun(char_base, u, q)
    for p_i in constituents:
        result = result * p_i.exact_div(q)
    return result


def equal_coronal_charpoly(spec: CoronaSpec, kind: str) -> Poly:
    """Fast path for copies whose constrained coronals all coincide.

    The n x n determinant collapses to a product over the base eigenvalues:
    prod_i P_i(x) * prod_j (x - shift - mu_j(base) - Gamma(x)).  For the
    Laplacian and signless kinds the attachment sizes |T_i| must also agree.
    """
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    pairs = [_copy_coronal(h, t, kind) for h, t in spec.copies]
    gammas = [g for _, g in pairs]
    if any(g != gammas[0] for g in gammas[1:]):
        raise ValueError("copy coronals are not all equal")
    shift = _shift(spec.copies[0][1], kind)
    if kind != "adjacency":
        if any(t.size != spec.copies[0][1].size for _, t in spec.copies):
            raise ValueError("attachment sizes are not all equal")
    result = _substitution_charpoly(_base_matrix(spec.base, kind), shift,
                                    gammas[0], [p for p, _ in pairs])
    _check_charpoly_shape(result, spec.total_vertices)
    return result


def _permuted_adjacency(h: Graph, t: IndexSet) -> IntMatrix:
    order = list(t.indices) + list(t.complement().indices)
    return graphs.adjacency(h).submatrix(order, order)


def block_structured_charpoly(spec: CoronaSpec, variant: str,
                              split: int | None = None) -> Poly:
    """Adjacency fast path for copies with a shared 2x2 block profile.

    variant "full": every copy is fully attached (T_i = everything) and its
    adjacency matrix, split at `split`, has constant block row sums; the
    shared full coronal comes from the partitioned closed form.

    variant "induced_subset": the copies are attached at T_i; with T_i
    permuted to the front of each adjacency matrix the blocks must have
    constant row sums, shared across copies; the constrained closed form
    supplies the coronal.
    """
    if variant not in ("full", "induced_subset"):
        raise ValueError(f"unknown variant {variant!r}")
    profiles = []
    for h, t in spec.copies:
        if variant == "full":
            if not t.is_full:
                raise ValueError('variant "full" needs fully attached copies')
            if split is None:
                raise ValueError('variant "full" needs an explicit split')
            prof = graphs.block_profile(graphs.adjacency(h), split)
        else:
            if t.is_empty or t.is_full:
                raise ValueError("attachment subsets must be nonempty and proper")
            prof = graphs.block_profile(_permuted_adjacency(h, t), t.size)
        if prof is None:
            raise ValueError("copy blocks do not have constant row sums")
        profiles.append(prof)
    if any(p != profiles[0] for p in profiles[1:]):
        raise ValueError("heterogeneous copy profiles")
    prof = profiles[0]
    gamma = coronal_partitioned(prof) if variant == "full" \
        else coronal_constrained_partitioned(prof)
    constituents = [charpoly_and_adjugate(graphs.adjacency(h))[0]
                    for h, _ in spec.copies]
    result = _substitution_charpoly(_base_matrix(spec.base, "adjacency"), 0,
                                    gamma, constituents)
    _check_charpoly_shape(result, spec.total_vertices)
    return result


def laplacian_block_corollary(spec: CoronaSpec) -> Poly:
    """Laplacian fast path for copies attached along subsets of equal size t
    whose off-diagonal adjacency block (T first) lies in RC(a2, a3).

    The copy coronal collapses to t (x - a3) / (x^2 - s x + a3) with
    s = a2 + a3 + 1, which is substituted into the shifted base Laplacian
    characteristic polynomial.
    """
    t_size = spec.copies[0][1].size
    shared = None
    for h, t in spec.copies:
        if t.size != t_size:
            raise ValueError("attachment sizes are not all equal")
        if t.is_empty or t.is_full:
            raise ValueError("attachment subsets must be nonempty and proper")
        sums = graphs.block_row_sums(_permuted_adjacency(h, t), t.size)
        a2, a3 = sums[1], sums[2]
        if a2 is None or a3 is None:
            raise ValueError("off-diagonal copy block lacks constant row or "
                             "column sums")
        if shared is None:
            shared = (a2, a3)
        elif shared != (a2, a3):
            raise ValueError("heterogeneous copy profiles")
    a2, a3 = shared
    s = a2 + a3 + 1
    gamma = RatFun(Poly([-t_size * a3, t_size]), Poly([a3, -s, 1]))
    constituents = [lht_charpoly(h, t) for h, t in spec.copies]
    result = _substitution_charpoly(_base_matrix(spec.base, "laplacian"),
                                    t_size, gamma, constituents)
    _check_charpoly_shape(result, spec.total_vertices)
    return result


# ---------------------------------------------------------------------------
# perturbed-Laplacian characteristic polynomials


def lht_charpoly(h: Graph, t: IndexSet) -> Poly:
    """Characteristic polynomial of L(H) + R_T."""
    return charpoly_and_adjugate(PerturbedLaplacian(h, t).matrix)[0]


@dataclass(frozen=True)
class LhtParams:
    """Shape data for the closed-form perturbed-Laplacian polynomial.

    The copy has n vertices, |T| = t, the off-diagonal adjacency block (T
    first) lies in RC(a2, a3) with a3 nonzero, and the non-attached block
    decomposes as t1 I + t2 J + t3 A2^T A2.
    """

    n: int
    t: int
    a2: Fraction
    a3: Fraction
    t1: Fraction = Fraction(0)
    t2: Fraction = Fraction(0)
    t3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a2", "a3", "t1", "t2", "t3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a3 == 0:
            raise ValueError("a3 must be nonzero")

    @property
    def c(self) -> Fraction:
        return self.t2 * (self.n - self.t) + self.t3 * self.a2 * self.a3 + self.a3


def lht_closed_form(params: LhtParams, paired_eigs) -> Poly:
    """Closed form for the characteristic polynomial of L(H) + R_T when the
    attached-side Laplacian commutes with A2 A2^T.

    The caller supplies the t-1 eigenvalue pairs (mu_i of the attached-side
    Laplacian, lambda_i of A2 A2^T) for the shared eigenvectors orthogonal to
    the all-ones vector; the all-ones pair (0, a2 a3) is built in.  The result
    is (x-c)^(n-2t) times one quadratic per shared eigenvector; for t > n/2
    the negative power cancels exactly against the product.
    """
    pairs = [(Fraction(mu), Fraction(lam)) for mu, lam in paired_eigs]
    if len(pairs) != params.t - 1:
        raise ValueError("need exactly t-1 eigenvalue pairs")
    c, a2, a3 = params.c, params.a2, params.a3
    b = params.t2 * (params.n - params.t) + a3 \
        - params.t2 * params.t * a2 / a3
    prod = Poly([(a2 + 1) * b - a2 * a3, -(b + a2 + 1), 1])
    for mu, lam in pairs:
        alpha = c + params.t3 * lam
        beta = a2 + mu + 1
        prod = prod * Poly([alpha * beta - lam, -(alpha + beta), 1])
    exponent = params.n - 2 * params.t
    linear = Poly([-c, 1])
    if exponent >= 0:
        return linear ** exponent * prod
    return prod.exact_div(linear ** (-exponent))


# ---------------------------------------------------------------------------
# cluster


def cluster_charpolys(g: Graph, h: Graph):
    """(adjacency, Laplacian) characteristic polynomials of the cluster of g
    and a rooted h: every base vertex is joined to the root of its copy."""
    if h.root is None:
        raise ValueError("cluster needs a rooted copy graph")
    root = IndexSet.of((h.root,), h.n)
    n = g.n
    p_h, gamma_a = _copy_coronal(h, root, "adjacency")
    adj = _substitution_charpoly(graphs.adjacency(g), 0, gamma_a, [p_h] * n)
    l_h, gamma_l = _copy_coronal(h, root, "laplacian")
    lap = _substitution_charpoly(graphs.laplacian(g), 1, gamma_l, [l_h] * n)
    total = n + n * h.n
    _check_charpoly_shape(adj, total)
    _check_charpoly_shape(lap, total)
    return adj, lap


# ---------------------------------------------------------------------------
# roots, reports, cospectral families


@dataclass(frozen=True)
class Root:
    value: float
    mult: int


def numeric_roots(p: Poly, tol: float = 1e-8) -> list:
    """Approximate roots with multiplicities, for display only.

    Rational root candidates suggested by the float approximation are
    confirmed by repeated exact division, so their multiplicities are exact;
    whatever remains is clustered within tol.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    found = []
    remaining = p
    if remaining.degree > 0:
        approx = np.roots([float(c) for c in reversed(remaining.coeffs)])
        candidates = []
        for z in approx:
            cand = Fraction(float(z.real)).limit_denominator(1000)
            if cand not in candidates:
                candidates.append(cand)
        for cand in sorted(candidates):
            mult = 0
            factor = Poly([-cand, 1])
            while not remaining.is_zero and remaining(cand) == 0:
                remaining = remaining.exact_div(factor)
                mult += 1
            if mult:
                found.append(Root(float(cand), mult))
    if remaining.degree > 0:
        approx = sorted(float(z.real) for z in
                        np.roots([float(c) for c in reversed(remaining.coeffs)]))
        cluster = [approx[0]]
        for v in approx[1:]:
            if abs(v - cluster[-1]) <= tol:
                cluster.append(v)
            else:
                found.append(Root(sum(cluster) / len(cluster), len(cluster)))
                cluster = [v]
        found.append(Root(sum(cluster) / len(cluster), len(cluster)))
    return sorted(found, key=lambda r: r.value)


@dataclass(frozen=True)
class CharPolyReport:
    """Theorem-path polynomial next to its checks, never overwriting either."""

    matrix_kind: str
    theorem_poly: Poly
    oracle_poly: Poly | None = None
    corollary_poly: Poly | None = None
    roots: tuple | None = None

    @property
    def verdict(self) -> str:
        for other in (self.oracle_poly, self.corollary_poly):
            if other is not None and other != self.theorem_poly:
                return "mismatch"
        return "match"

    @property
    def diff(self):
        if self.oracle_poly is not None and self.oracle_poly != self.theorem_poly:
            return self.theorem_poly - self.oracle_poly
        if self.corollary_poly is not None and self.corollary_poly != self.theorem_poly:
            return self.theorem_poly - self.corollary_poly
        return None

    def to_json(self) -> dict:
        out = {
            "kind": self.matrix_kind,
            "theorem": poly_to_json(self.theorem_poly),
            "oracle": poly_to_json(self.oracle_poly) if self.oracle_poly is not None else None,
            "verdict": self.verdict,
        }
        if self.corollary_poly is not None:
            out["corollary"] = poly_to_json(self.corollary_poly)
        if self.diff is not None:
            out["diff"] = poly_to_json(self.diff)
        if self.roots is not None:
            out["roots"] = [{"value": r.value, "mult": r.mult} for r in self.roots]
        return out


def charpoly_report(spec: CoronaSpec, kind: str, with_oracle: bool = False,
                    with_roots: bool = False,
                    max_oracle_vertices: int = DEFAULT_ORACLE_LIMIT) -> CharPolyReport:
    theorem = theorem_charpoly(spec, kind)
    oracle = None
    if with_oracle:
        oracle = oracle_charpoly(spec, kind, max_oracle_vertices)
    corollary = None
    try:
        corollary = equal_coronal_charpoly(spec, kind)
    except ValueError:
        pass
    roots = tuple(numeric_roots(theorem)) if with_roots else None
    return CharPolyReport(kind, theorem, oracle, corollary, roots)


@dataclass(frozen=True)
class CospectralReport:
    matrix_kind: str
    charpoly: Poly
    permutations_checked: int
    all_equal: bool
    family: tuple

    def to_json(self) -> dict:
        return {
            "kind": self.matrix_kind,
            "charpoly": poly_to_json(self.charpoly),
            "permutations_checked": self.permutations_checked,
            "all_equal": self.all_equal,
            "family": [graphs.graph_to_json(g) for g in self.family],
        }


def cospectral_family(spec: CoronaSpec, kind: str, max_permutations: int = 24,
                      max_family: int = 6) -> CospectralReport:
    """Check that permuting the copy sequence leaves the polynomial unchanged.

    Valid only when the copy coronals (and, for the Laplacian kinds, the
    attachment sizes) all agree; the permuted compositions then form a family
    sharing one spectrum, and pairwise non-isomorphic members are cospectral
    mates.  All permutations are checked when there are at most
    max_permutations of them, otherwise a deterministic sample is taken.
    """
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    gammas = [copy_coronal(h, t, kind) for h, t in spec.copies]
    if any(g != gammas[0] for g in gammas[1:]):
        raise ValueError("copy coronals are not all equal")
    if kind != "adjacency":
        if any(t.size != spec.copies[0][1].size for _, t in spec.copies):
            raise ValueError("attachment sizes are not all equal")
    reference = theorem_charpoly(spec, kind)
    perms = itertools.islice(itertools.permutations(range(spec.base.n)),
                             max_permutations)
    family = []
    checked = 0
    all_equal = True
    for perm in perms:
        permuted = CoronaSpec(spec.base, tuple(spec.copies[i] for i in perm))
        checked += 1
        if theorem_charpoly(permuted, kind) != reference:
            all_equal = False
        if len(family) < max_family:
            family.append(build(permuted))
    return CospectralReport(kind, reference, checked, all_equal, tuple(family))


# ---------------------------------------------------------------------------
# printed-form discrepancy reports


@dataclass(frozen=True)
class PrintedFormReport:
    """Comparison of a closed form as printed in the source catalog against
    the general path and the explicit-matrix oracle."""

    description: str
    params: dict
    general_poly: Poly
    printed_poly: Poly
    oracle_poly: Poly

    @property
    def general_matches_oracle(self) -> bool:
        return self.general_poly == self.oracle_poly

    @property
    def printed_matches_oracle(self) -> bool:
        return self.printed_poly == self.oracle_poly

    def to_json(self) -> dict:
        return {
            "description": self.description,
            "params": self.params,
            "general": poly_to_json(self.general_poly),
            "printed": poly_to_json(self.printed_poly),
            "oracle": poly_to_json(self.oracle_poly),
            "general_matches_oracle": self.general_matches_oracle,
            "printed_matches_oracle": self.printed_matches_oracle,
        }


def complete_copies_laplacian_report(g: Graph, m: int, t: int) -> PrintedFormReport:
    """Laplacian spectrum of complete copies K_m attached along t vertices:
    the general substitution path versus the specialized form as printed.

    The printed specialization carries the per-base-eigenvalue cubic
    x^3 - (t + mu + m + 1) x^2 - (m+1)(t + mu) x - t mu, whose linear term's
    sign disagrees with direct substitution into the general form; both are
    evaluated here and compared against the oracle.
    """
    if not (1 <= t <= m):
        raise ValueError("need 1 <= t <= m")
    n = g.n
    h = graphs.complete(m)
    subset = IndexSet.of(range(t), m)
    spec = CoronaSpec(g, tuple((h, subset) for _ in range(n)))
    general = laplacian_block_corollary(spec)
    oracle = oracle_charpoly(spec, "laplacian")
    char_l = charpoly_and_adjugate(graphs.laplacian(g))[0]
    f = Poly([0, -(m + 1) * t, -(t + m + 1), 1])
    q = Poly([t, m + 1, 1])
    printed = (Poly([-m, 1]) ** (n * (m - t - 1))
               * Poly([-m - 1, 1]) ** (n * (t - 1))
               * compose_charpoly_with_ratfun(char_l, f, q))
    return PrintedFormReport(
        "complete copies, Laplacian: printed per-eigenvalue cubic vs general path",
        {"base_n": n, "m": m, "t": t}, general, printed, oracle)


def bipartite_copies_laplacian_report(g: Graph, p: int, q: int) -> PrintedFormReport:
    """Laplacian spectrum of complete bipartite copies attached along one
    side: the general substitution path versus the specialized form as
    printed (fixed eigenvalues p+1 and q with multiplicities p-1 and q-1,
    cubics with constant term -q mu)."""
    n = g.n
    h = graphs.complete_bipartite(p, q)
    subset = IndexSet.of(range(p), p + q)
    spec = CoronaSpec(g, tuple((h, subset) for _ in range(n)))
    general = laplacian_block_corollary(spec)
    oracle = oracle_charpoly(spec, "laplacian")
    char_l = charpoly_and_adjugate(graphs.laplacian(g))[0]
    f = Poly([0, (p + q + 1) * p, -(2 * p + q + 1), 1])
    qq = Poly([q, -(p + q + 1), 1])
    printed = (Poly([-(p + 1), 1]) ** (n * (p - 1))
               * Poly([-q, 1]) ** (n * (q - 1))
               * compose_charpoly_with_ratfun(char_l, f, qq))
    return PrintedFormReport(
        "complete bipartite copies attached along one side, Laplacian: "
        "printed multiplicities and cubic vs general path",
        {"base_n": n, "p": p, "q": q}, general, printed, oracle)


# ---------------------------------------------------------------------------
# built-in verification suite


def _suite_graphs() -> dict:
    return {
        "K1": graphs.complete(1),
        "K2": graphs.complete(2),
        "K3": graphs.complete(3),
        "P3": graphs.path(3),
        "C4": graphs.cycle(4),
        "K12": graphs.complete_bipartite(1, 2),
        "K23": graphs.complete_bipartite(2, 3),
        "SP3": graphs.unary_op("subdivision", graphs.path(3)),
        "SK3": graphs.unary_op("subdivision", graphs.complete(3)),
    }


def _suite_subset(h: Graph, kind: str) -> IndexSet:
    if kind == "all":
        return IndexSet.full(h.n)
    if kind == "empty":
        return IndexSet.empty(h.n)
    if kind == "single":
        return IndexSet.of((0,), h.n)
    if kind == "tagV":
        return IndexSet.of(h.tagged(graphs.TAG_ORIGINAL), h.n)
    if kind == "tagI":
        return IndexSet.of(h.tagged(graphs.TAG_INSERTED), h.n)
    raise ValueError(kind)


_SUITE_UNIFORM = (
    ("K1", "K2", "all"), ("K1", "K1", "all"), ("K1", "K3", "all"),
    ("K1", "K23", "all"), ("K1", "SP3", "tagV"), ("K1", "SK3", "tagI"),
    ("K2", "K2", "single"), ("K2", "K1", "all"), ("K2", "K3", "single"),
    ("K2", "P3", "all"), ("K2", "K12", "empty"), ("K2", "C4", "all"),
    ("K2", "SP3", "tagI"), ("K2", "K23", "single"),
    ("P3", "K1", "all"), ("P3", "K2", "single"), ("P3", "K3", "empty"),
    ("P3", "K12", "all"), ("P3", "SP3", "tagV"), ("P3", "C4", "single"),
    ("C4", "K1", "all"), ("C4", "K2", "all"), ("C4", "P3", "single"),
    ("C4", "K12", "empty"), ("C4", "SK3", "tagV"),
    ("K3", "K2", "all"), ("K3", "K23", "all"), ("K3", "SP3", "tagI"),
    ("K3", "K1", "single"), ("K3", "C4", "empty"),
)

_SUITE_MIXED = (
    ("K2", (("K2", "all"), ("K3", "single"))),
    ("P3", (("K1", "all"), ("K2", "single"), ("P3", "empty"))),
    ("C4", (("K2", "all"), ("K2", "all"), ("C4", "single"), ("K12", "empty"))),
    ("P3", (("SP3", "tagV"), ("SP3", "tagI"), ("K23", "all"))),
    ("K3", (("K3", "all"), ("K12", "single"), ("SK3", "tagV"))),
)


def small_suite() -> list:
    """Deterministic desk-scale suite of compositions for verification."""
    pool = _suite_graphs()
    out = []
    for base_key, copy_key, t_kind in _SUITE_UNIFORM:
        base = pool[base_key]
        h = pool[copy_key]
        t = _suite_subset(h, t_kind)
        spec = CoronaSpec(base, tuple((h, t) for _ in range(base.n)))
        out.append((f"{base_key} * ({copy_key}:{t_kind})", spec))
    for base_key, copy_descr in _SUITE_MIXED:
        base = pool[base_key]
        copies = []
        label = []
        for copy_key, t_kind in copy_descr:
            h = pool[copy_key]
            copies.append((h, _suite_subset(h, t_kind)))
            label.append(f"{copy_key}:{t_kind}")
        spec = CoronaSpec(base, tuple(copies))
        out.append((f"{base_key} * ({', '.join(label)})", spec))
    return out


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    ok: bool


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list:
        return [c.name for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "checks": [{"name": c.name, "ok": c.ok} for c in self.checks],
            "total": len(self.checks),
            "failures": self.failures,
            "ok": self.ok,
        }


def verify_small_suite(kinds=MATRIX_KINDS,
                       max_oracle: int = DEFAULT_ORACLE_LIMIT) -> VerifyReport:
    """Run the built-in suite (theorem vs oracle for every matrix kind) plus
    one exercise of every closed-form fast path."""
    checks = []
    for name, spec in small_suite():
        for kind in kinds:
            ok = theorem_charpoly(spec, kind) == oracle_charpoly(spec, kind, max_oracle)
            checks.append(VerifyCheck(f"theorem=oracle [{kind}] {name}", ok))

    pool = _suite_graphs()
    k2, k3, p3, c4, k23 = (pool[k] for k in ("K2", "K3", "P3", "C4", "K23"))

    cluster_spec = corona_mod.cluster(k2, k2.with_root(0))
    for kind in ("adjacency", "laplacian"):
        ok = equal_coronal_charpoly(cluster_spec, kind) == \
            theorem_charpoly(cluster_spec, kind)
        checks.append(VerifyCheck(f"equal-coronal fast path [{kind}]", ok))

    adj_p6, lap_p6 = cluster_charpolys(k2, k2.with_root(0))
    ok = adj_p6 == oracle_charpoly(cluster_spec, "adjacency") and \
        lap_p6 == oracle_charpoly(cluster_spec, "laplacian")
    checks.append(VerifyCheck("cluster closed form", ok))

    km_spec = CoronaSpec(k2, ((k3, IndexSet.of((0,), 3)),) * 2)
    ok = block_structured_charpoly(km_spec, "induced_subset") == \
        adjacency_charpoly(km_spec)
    checks.append(VerifyCheck("block-structured fast path [induced_subset]", ok))

    semi_spec = CoronaSpec(k2, ((k23, IndexSet.full(5)),) * 2)
    ok = block_structured_charpoly(semi_spec, "full", split=2) == \
        adjacency_charpoly(semi_spec)
    checks.append(VerifyCheck("block-structured fast path [full]", ok))

    ok = laplacian_block_corollary(km_spec) == laplacian_charpoly(km_spec)
    checks.append(VerifyCheck("laplacian block corollary fast path", ok))

    params = LhtParams(n=4, t=2, a2=2, a3=2, t1=-1, t2=1, t3=0)
    ok = lht_closed_form(params, [(2, 0)]) == \
        lht_charpoly(graphs.complete(4), IndexSet.of((0, 1), 4))
    checks.append(VerifyCheck("perturbed-Laplacian closed form", ok))

    from .coronal import (coronal_equal_rowsum, coronal_generic,
                          coronal_kpq_subsets, coronal_schur_reduction,
                          coronal_unary_table, table_check)
    a_c4 = graphs.adjacency(c4)
    ok = coronal_equal_rowsum(4, 2) == coronal_generic(a_c4, IndexSet.full(4))
    checks.append(VerifyCheck("coronal closed form [equal row sum]", ok))
    ok = coronal_kpq_subsets(2, 3, 1, 1) == coronal_generic(
        graphs.adjacency(k23), IndexSet.of((0, 2), 5))
    checks.append(VerifyCheck("coronal closed form [complete bipartite subsets]", ok))
    ok = coronal_schur_reduction(a_c4, IndexSet.of((0, 2), 4)) == \
        coronal_generic(a_c4, IndexSet.of((0, 2), 4))
    checks.append(VerifyCheck("coronal closed form [schur reduction]", ok))
    sc4 = graphs.unary_op("subdivision", c4)
    ok = coronal_unary_table("subdivision", "V", 4, 4, 2) == coronal_generic(
        graphs.adjacency(sc4), IndexSet.of(sc4.tagged(graphs.TAG_ORIGINAL), 8))
    checks.append(VerifyCheck("coronal closed form [catalog table]", ok))

    report = table_check(c4)
    checks.append(VerifyCheck("catalog table check", report.all_match and
                              len(report.notes) >= 2))

    fam_spec = corona_mod.cluster(p3, k2.with_root(0))
    for kind in ("adjacency", "laplacian"):
        ok = cospectral_family(fam_spec, kind).all_equal
        checks.append(VerifyCheck(f"cospectral family [{kind}]", ok))

    km_report = complete_copies_laplacian_report(k2, 3, 1)
    checks.append(VerifyCheck(
        "printed complete-copies Laplacian form: general matches oracle, "
        "printed form does not",
        km_report.general_matches_oracle and not km_report.printed_matches_oracle))
    kpq_report = bipartite_copies_laplacian_report(k2, 1, 2)
    checks.append(VerifyCheck(
        "printed bipartite-copies Laplacian form: general matches oracle, "
        "printed form does not",
        kpq_report.general_matches_oracle and not kpq_report.printed_matches_oracle))

    return VerifyReport(tuple(checks))
