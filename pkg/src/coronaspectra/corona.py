"""Corona-style compositions: one base graph plus one attached copy per base
vertex, with each base vertex joined to a chosen subset of its copy.

``CoronaSpec`` is the explicit description (base, then one (copy, subset)
pair per base vertex); ``build`` realizes it as a concrete graph.  The named
constructors cover the classical special cases: corona (subset = everything),
cluster (subset = the copy's root), and the subdivision / unary-operation
variants whose subsets are the original or inserted vertices of the
transformed copy.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graphs
from .coronal import IndexSet
from .graphs import Graph, TAG_INSERTED, TAG_ORIGINAL


@dataclass(frozen=True)
class CoronaSpec:
    """Base graph plus one (copy, attachment subset) pair per base vertex."""

    base: Graph
    copies: tuple

    def __post_init__(self):
        copies = tuple((h, t) for h, t in self.copies)
        if len(copies) != self.base.n:
            raise ValueError("need exactly one copy per base vertex")
        for h, t in copies:
            if not isinstance(h, Graph) or not isinstance(t, IndexSet):
                raise TypeError("copies must be (Graph, IndexSet) pairs")
            if h.n < 1:
                raise ValueError("copies must have at least one vertex")
            if t.source_n != h.n:
                raise ValueError("attachment subset does not match its copy")
        object.__setattr__(self, "copies", copies)

    @property
    def total_vertices(self) -> int:
        return self.base.n + sum(h.n for h, _ in self.copies)


def build(spec: CoronaSpec) -> Graph:
    """Realize the composition: base vertices first, then each copy's block."""
    edges = set(spec.base.edges)
    offset = spec.base.n
    for i, (h, t) in enumerate(spec.copies):
        edges.update((offset + u, offset + v) for u, v in h.edges)
        edges.update((i, offset + u) for u in t.indices)
        offset += h.n
    return Graph(offset, frozenset(edges))


# ---------------------------------------------------------------------------
# named special cases


def corona(g: Graph, h: Graph) -> CoronaSpec:
    """Every base vertex joined to all vertices of its copy of h."""
    return CoronaSpec(g, tuple((h, IndexSet.full(h.n)) for _ in range(g.n)))


def cluster(g: Graph, h: Graph) -> CoronaSpec:
    """Every base vertex joined to the root of its copy of h."""
    if h.root is None:
        raise ValueError("cluster needs a rooted copy graph")
    return CoronaSpec(g, tuple((h, IndexSet.of((h.root,), h.n)) for _ in range(g.n)))


def generalized(g: Graph, hs) -> CoronaSpec:
    """Per-vertex copies, each fully joined to its base vertex."""
    hs = list(hs)
    if len(hs) != g.n:
        raise ValueError("need exactly one copy per base vertex")
    return CoronaSpec(g, tuple((h, IndexSet.full(h.n)) for h in hs))


def corona_vertex_subdivision(g: Graph, h: Graph) -> CoronaSpec:
    """Copies are subdivisions of h, attached at the original vertices."""
    sh = graphs.unary_op("subdivision", h)
    t = IndexSet.of(sh.tagged(TAG_ORIGINAL), sh.n)
    return CoronaSpec(g, tuple((sh, t) for _ in range(g.n)))


def corona_edge_subdivision(g: Graph, h: Graph) -> CoronaSpec:
    """Copies are subdivisions of h, attached at the inserted vertices."""
    sh = graphs.unary_op("subdivision", h)
    t = IndexSet.of(sh.tagged(TAG_INSERTED), sh.n)
    return CoronaSpec(g, tuple((sh, t) for _ in range(g.n)))


def unary_variant(g: Graph, hs, op: str, subset: str) -> CoronaSpec:
    """Copies are U(h_i) for a catalog operation U, attached at the original
    ("V") or inserted ("I") vertices of each transformed copy."""
    if subset not in (TAG_ORIGINAL, TAG_INSERTED):
        raise ValueError('subset must be "V" or "I"')
    if isinstance(hs, Graph):
        hs = [hs] * g.n
    else:
        hs = list(hs)
    if len(hs) != g.n:
        raise ValueError("need exactly one copy per base vertex")
    copies = []
    for h in hs:
        uh = graphs.unary_op(op, h)
        copies.append((uh, IndexSet.of(uh.tagged(subset), uh.n)))
    return CoronaSpec(g, tuple(copies))


# ---------------------------------------------------------------------------
# JSON


def spec_to_json(spec: CoronaSpec) -> dict:
    return {
        "base": graphs.graph_to_json(spec.base),
        "copies": [{"h": graphs.graph_to_json(h), "t": list(t.indices)}
                   for h, t in spec.copies],
    }


def _subset_from_json(h: Graph, value) -> IndexSet:
    if value == "all":
        return IndexSet.full(h.n)
    if value == "tag:V":
        return IndexSet.of(h.tagged(TAG_ORIGINAL), h.n)
    if value == "tag:I":
        return IndexSet.of(h.tagged(TAG_INSERTED), h.n)
    if isinstance(value, list):
        return IndexSet.of(value, h.n)
    raise ValueError(f"bad attachment subset {value!r}")


def spec_from_json(data) -> CoronaSpec:
    base = graphs.graph_from_json(data["base"])
    copies = []
    for entry in data["copies"]:
        h = graphs.graph_from_json(entry["h"])
        copies.append((h, _subset_from_json(h, entry["t"])))
    return CoronaSpec(base, tuple(copies))
