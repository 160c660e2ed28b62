"""Graph model, standard matrices, generators, and the unary-operation catalog.

Graphs are simple and undirected, with vertices 0..n-1.  Operations that
insert new vertices (one per edge, or one per vertex) tag the result so the
original vertex set "V" and the inserted set "I" stay identifiable; complete
bipartite generators tag the two sides "X" and "Y".  Inserted vertices are
numbered after the originals, in lexicographic edge order, which also pins
down the incidence-matrix column order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .polyrat import IntMatrix

TAG_ORIGINAL = "V"
TAG_INSERTED = "I"
TAG_SIDE_X = "X"
TAG_SIDE_Y = "Y"


@dataclass(frozen=True)
class Graph:
    """Labeled simple undirected graph with optional root and vertex tags."""

    n: int
    edges: frozenset = frozenset()
    root: int | None = None
    tags: dict | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.root is not None and not (0 <= self.root < self.n):
            raise ValueError("root out of range")
        if self.tags is not None:
            for v in self.tags:
                if not (0 <= v < self.n):
                    raise ValueError("tagged vertex out of range")
            object.__setattr__(self, "tags", dict(self.tags))

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list:
        """Edges in lexicographic order; fixes inserted-vertex numbering."""
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> set:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def tagged(self, tag: str) -> tuple:
        """Vertices carrying the given tag, ascending."""
        if not self.tags:
            return ()
        return tuple(sorted(v for v, t in self.tags.items() if t == tag))

    def with_root(self, root: int) -> "Graph":
        return Graph(self.n, self.edges, root, self.tags)


@dataclass(frozen=True)
class SemiRegularParams:
    """Bipartite graph with part sizes n1, n2 and constant part degrees r1, r2."""

    n1: int
    n2: int
    r1: int
    r2: int

    def __post_init__(self):
        if self.n1 * self.r1 != self.n2 * self.r2:
            raise ValueError("inconsistent semi-regular parameters")


@dataclass(frozen=True)
class BlockProfile:
    """Constant row sums (a1, a2, a3, a4) of a 2x2-partitioned square matrix.

    Row sums are exact rationals so the same profile type also serves
    Laplacian-style blocks with negative entries.
    """

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    n1: int
    n2: int

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("block sizes must be at least 1")

    def values(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4)

    def reversed(self) -> "BlockProfile":
        """Profile of the same matrix with the two index blocks swapped."""
        return BlockProfile(self.a4, self.a3, self.a2, self.a1, self.n2, self.n1)


# ---------------------------------------------------------------------------
# generators


def _check_size(n: int):
    if n < 1:
        raise ValueError("graphs must have at least one vertex")


def empty_graph(n: int) -> Graph:
    _check_size(n)
    return Graph(n)


def complete(n: int) -> Graph:
    _check_size(n)
    return Graph(n, frozenset(combinations(range(n), 2)))


def path(n: int) -> Graph:
    _check_size(n)
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least three vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_bipartite(p: int, q: int) -> Graph:
    _check_size(p)
    _check_size(q)
    edges = frozenset((i, p + j) for i in range(p) for j in range(q))
    tags = {i: TAG_SIDE_X for i in range(p)}
    tags.update({p + j: TAG_SIDE_Y for j in range(q)})
    return Graph(p + q, edges, None, tags)


def from_edge_list(n: int, edges, root=None, tags=None) -> Graph:
    _check_size(n)
    seen = set()
    for e in edges:
        u, v = e
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
    return Graph(n, frozenset(seen), root, tags)


_GENERATORS = {
    "complete": lambda **kw: complete(kw["n"]),
    "complete_bipartite": lambda **kw: complete_bipartite(kw["p"], kw["q"]),
    "path": lambda **kw: path(kw["n"]),
    "cycle": lambda **kw: cycle(kw["n"]),
    "empty": lambda **kw: empty_graph(kw["n"]),
    "from_edge_list": lambda **kw: from_edge_list(kw["n"], kw["edges"],
                                                  kw.get("root"), kw.get("tags")),
}


def generate(kind: str, **params) -> Graph:
    if kind not in _GENERATORS:
        raise ValueError(f"unknown generator {kind!r}")
    return _GENERATORS[kind](**params)


# ---------------------------------------------------------------------------
# standard matrices


def adjacency(g: Graph) -> IntMatrix:
    n = g.n
    ent = [0] * (n * n)
    for u, v in g.edges:
        ent[u * n + v] = 1
        ent[v * n + u] = 1
    return IntMatrix(n, n, ent)


def incidence(g: Graph) -> IntMatrix:
    n, m = g.n, g.m
    ent = [0] * (n * m)
    for k, (u, v) in enumerate(g.edge_list()):
        ent[u * m + k] = 1
        ent[v * m + k] = 1
    return IntMatrix(n, m, ent)


def degree_matrix(g: Graph) -> IntMatrix:
    n = g.n
    ent = [0] * (n * n)
    for u, v in g.edges:
        ent[u * n + u] += 1
        ent[v * n + v] += 1
    return IntMatrix(n, n, ent)


def laplacian(g: Graph) -> IntMatrix:
    return degree_matrix(g) - adjacency(g)


def signless_laplacian(g: Graph) -> IntMatrix:
    return degree_matrix(g) + adjacency(g)


_MATRICES = {
    "adjacency": adjacency,
    "incidence": incidence,
    "degree": degree_matrix,
    "laplacian": laplacian,
    "signless": signless_laplacian,
}


def graph_matrix(g: Graph, kind: str) -> IntMatrix:
    if kind not in _MATRICES:
        raise ValueError(f"unknown matrix kind {kind!r}")
    return _MATRICES[kind](g)


# ---------------------------------------------------------------------------
# binary / unary operations


def complement(g: Graph) -> Graph:
    edges = frozenset((u, v) for u, v in combinations(range(g.n), 2)
                      if not g.has_edge(u, v))
    return Graph(g.n, edges, g.root, g.tags)


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of g; two edge-vertices adjacent iff the edges share
    an endpoint."""
    edges = g.edge_list()
    adj = frozenset((i, j) for i, j in combinations(range(len(edges)), 2)
                    if set(edges[i]) & set(edges[j]))
    return Graph(len(edges), adj)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts; g1 vertices first."""
    n1 = g1.n
    edges = set(g1.edges)
    edges.update((n1 + u, n1 + v) for u, v in g2.edges)
    edges.update((u, n1 + w) for u in range(n1) for w in range(g2.n))
    return Graph(n1 + g2.n, frozenset(edges))


# Each catalog entry is (rule for edges among originals,
#                        rule for original-to-inserted edges,
#                        rule for edges among inserted vertices).
# "incidence" inserts one vertex per edge, joined to its endpoints;
# "identity"/"neighbors" insert one vertex per original vertex.
_UNARY_RECIPES = {
    "subdivision": ("none", "incidence", "none"),
    "r_graph": ("graph", "incidence", "none"),
    "q_graph": ("none", "incidence", "line"),
    "central": ("complement", "incidence", "none"),
    "total": ("graph", "incidence", "line"),
    "quasi_total": ("complement", "incidence", "line"),
    "duplication": ("none", "neighbors", "none"),
    "c_graph": ("graph", "identity", "none"),
    "n_graph": ("graph", "neighbors", "none"),
    "point_complete_subdivision": ("complete", "incidence", "none"),
    "q_complemented": ("none", "incidence", "line_complement"),
    "total_complemented": ("graph", "incidence", "line_complement"),
    "quasitotal_complemented": ("complement", "incidence", "line_complement"),
    "complete_q_complemented": ("complete", "incidence", "line_complement"),
    "complete_subdivision": ("none", "incidence", "complete"),
    "complete_r_graph": ("graph", "incidence", "complete"),
    "complete_central": ("complement", "incidence", "complete"),
    "fully_complete_subdivision": ("complete", "incidence", "complete"),
}

UNARY_KINDS = tuple(_UNARY_RECIPES)


def unary_inserts_per_edge(kind: str) -> bool:
    """True when the operation inserts one vertex per edge (else per vertex)."""
    if kind not in _UNARY_RECIPES:
        raise ValueError(f"unknown unary operation {kind!r}")
    return _UNARY_RECIPES[kind][1] == "incidence"


def unary_op(kind: str, g: Graph) -> Graph:
    """Apply a catalog operation; result tags originals "V" and inserted "I"."""
    if kind not in _UNARY_RECIPES:
        raise ValueError(f"unknown unary operation {kind!r}")
    orig_rule, cross_rule, ins_rule = _UNARY_RECIPES[kind]
    n = g.n
    edges = g.edge_list()
    k = len(edges) if cross_rule == "incidence" else n

    out = set()
    if orig_rule == "graph":
        out.update(g.edges)
    elif orig_rule == "complement":
        out.update((u, v) for u, v in combinations(range(n), 2) if not g.has_edge(u, v))
    elif orig_rule == "complete":
        out.update(combinations(range(n), 2))

    if cross_rule == "incidence":
        for idx, (u, v) in enumerate(edges):
            out.add((u, n + idx))
            out.add((v, n + idx))
    elif cross_rule == "identity":
        out.update((v, n + v) for v in range(n))
    elif cross_rule == "neighbors":
        for u, v in edges:
            out.add((u, n + v))
            out.add((v, n + u))

    if ins_rule in ("line", "line_complement"):
        share = {(i, j) for i, j in combinations(range(k), 2)
                 if set(edges[i]) & set(edges[j])}
        pairs = share if ins_rule == "line" else \
            {(i, j) for i, j in combinations(range(k), 2) if (i, j) not in share}
        out.update((n + i, n + j) for i, j in pairs)
    elif ins_rule == "complete":
        out.update((n + i, n + j) for i, j in combinations(range(k), 2))

    tags = {v: TAG_ORIGINAL for v in range(n)}
    tags.update({n + i: TAG_INSERTED for i in range(k)})
    return Graph(n + k, frozenset(out), g.root, tags)


# ---------------------------------------------------------------------------
# structure detection


def semiregular_params(g: Graph):
    """Detect a semi-regular bipartite structure by 2-coloring.

    Returns SemiRegularParams or None when the graph is not bipartite or the
    part degrees are not constant.  Side X is the side containing the lowest
    vertex of each component.
    """
    color = [None] * g.n
    for start in range(g.n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.neighbors(v):
                if color[w] is None:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side_x = [v for v in range(g.n) if color[v] == 0]
    side_y = [v for v in range(g.n) if color[v] == 1]
    if not side_x or not side_y:
        return None
    deg_x = {g.degree(v) for v in side_x}
    deg_y = {g.degree(v) for v in side_y}
    if len(deg_x) != 1 or len(deg_y) != 1:
        return None
    return SemiRegularParams(len(side_x), len(side_y), deg_x.pop(), deg_y.pop())


def regular_degree(g: Graph):
    """Common vertex degree, or None when the graph is not regular."""
    degs = {g.degree(v) for v in range(g.n)}
    return degs.pop() if len(degs) == 1 else None


def _constant_row_sum(m: IntMatrix, rows, cols):
    sums = {sum(m.at(i, j) for j in cols) for i in rows}
    return Fraction(sums.pop()) if len(sums) == 1 else None


def block_row_sums(m: IntMatrix, split: int) -> tuple:
    """Per-block constant row sums of the 2x2 partition at `split`.

    Returns a 4-tuple (a1, a2, a3, a4); entries are None for blocks whose
    rows do not share a common sum.
    """
    if not m.is_square:
        raise ValueError("block profile of a non-square matrix")
    if not 0 < split < m.rows:
        raise ValueError("split must be strictly inside the matrix")
    top = range(split)
    bot = range(split, m.rows)
    return (_constant_row_sum(m, top, top), _constant_row_sum(m, top, bot),
            _constant_row_sum(m, bot, top), _constant_row_sum(m, bot, bot))


def block_profile(m: IntMatrix, split: int):
    """BlockProfile of the 2x2 partition at `split`, or None when some block
    lacks constant row sums."""
    sums = block_row_sums(m, split)
    if any(s is None for s in sums):
        return None
    return BlockProfile(*sums, split, m.rows - split)


# ---------------------------------------------------------------------------
# JSON


def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edge_list()]}
    if g.root is not None:
        out["root"] = g.root
    if g.tags:
        out["tags"] = {str(v): t for v, t in sorted(g.tags.items())}
    return out


def graph_from_json(data) -> Graph:
    """Parse a graph object or an inline generator form ({"gen": ...})."""
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    if "gen" in data:
        kind = data["gen"]
        if kind == "unary":
            return unary_op(data["op"], graph_from_json(data["of"]))
        params = {k: v for k, v in data.items() if k != "gen"}
        return generate(kind, **params)
    tags = None
    if data.get("tags"):
        tags = {int(v): str(t) for v, t in data["tags"].items()}
    return from_edge_list(data["n"], [tuple(e) for e in data.get("edges", [])],
                          data.get("root"), tags)
