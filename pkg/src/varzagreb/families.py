"""Extremal graph families for degree-constrained index minimization.

For minimum degree d and maximum degree D the relevant families are:

  G  -- edge-minimal graphs on D+1 vertices (four parity cases; the complete
        graph K_{D+1} when d = D).  Extremal for non-decreasing rules.
  H  -- the unique graph on D+1 vertices with degree counts
        {d x1, (D-1) x (D-d), D x d}: K_D plus a vertex w joined to d of it.
  K  -- graphs on D+2 vertices: one vertex of degree d and, for even d, D+1
        vertices of degree D (unique graph); for odd d, D vertices of degree D
        plus one of degree D-1 (two graphs, K1 with the deficient vertex not
        adjacent to w and K2 with it adjacent).
  L  -- graphs on D+3 vertices (dD odd): one vertex of degree d, D+2 of
        degree D; built from a cycle complement.

Families are characterized by their degree multisets; membership defaults to
the multiset test.  Constructors fix a deterministic labeling (w is always the
last label, v1..vk are 0..k-1) so emitted graph6 strings are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    canonical_form,
    complete_graph,
    cycle_complement,
    degree_profile,
    realize_degree_sequence,
)
from .indices import Numeric, VertexIndexSpec, eval_on_degrees

__all__ = [
    "FamilyId",
    "FamilyGraph",
    "FAMILY_KINDS",
    "parse_family_id",
    "build_family",
    "build_G",
    "build_H",
    "build_K",
    "build_K1",
    "build_K2",
    "build_L",
    "family_degree_multiset",
    "family_J_value",
    "is_member",
]

FAMILY_KINDS = ("G", "H", "K", "K1", "K2", "L")


@dataclass(frozen=True)
class FamilyId:
    """A family kind with its (delta, Delta) parameters, e.g. H:2,4."""

    kind: str
    delta: int
    Delta: int

    def __post_init__(self):
        k, d, D = self.kind, self.delta, self.Delta
        if k not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {k!r}")
        if d < 1 or D < d:
            raise ValueError(f"{self}: need 1 <= delta <= Delta")
        if k != "G" and d >= D:
            raise ValueError(f"{self}: family {k} requires delta < Delta")
        if k == "K" and d % 2:
            raise ValueError(f"{self}: family K requires even delta")
        if k in ("K1", "K2") and d % 2 == 0:
            raise ValueError(f"{self}: family {k} requires odd delta")
        if k == "K2" and d < 3:
            raise ValueError(
                f"{self}: K2 requires delta >= 3 (no graph in the class has the "
                "deficient vertex adjacent to w when delta = 1)"
            )
        if k == "L" and (d * D) % 2 == 0:
            raise ValueError(f"{self}: family L requires delta * Delta odd")

    def __str__(self) -> str:
        return f"{self.kind}:{self.delta},{self.Delta}"


def parse_family_id(text: str) -> FamilyId:
    """Parse "H:2,4" / "K1:3,5" / "G:2,5" style identifiers."""
    kind, sep, params = text.strip().partition(":")
    parts = params.split(",") if sep else []
    if kind not in FAMILY_KINDS or len(parts) != 2:
        raise ValueError(
            f"bad family id {text!r}; expected KIND:delta,Delta with KIND one of "
            f"{', '.join(FAMILY_KINDS)}"
        )
    try:
        d, D = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"bad family id {text!r}: non-integer parameters") from None
    return FamilyId(kind, d, D)


@dataclass(frozen=True)
class FamilyGraph:
    """A constructed family representative with its contracted degree multiset."""

    id: FamilyId
    graph: Graph
    expected_degrees: tuple[int, ...]


def family_degree_multiset(fid: FamilyId) -> tuple[int, ...]:
    """The family's defining degree multiset, non-increasing."""
    d, D = fid.delta, fid.Delta
    if fid.kind == "G":
        if d == D:
            counts = [D] * (D + 1)
        elif D * (d + 1) % 2 == 0:
            counts = [D] + [d] * D
        elif d < D - 1:
            counts = [D, d + 1] + [d] * (D - 1)
        else:
            counts = [D, D] + [d] * (D - 1)
        return tuple(sorted(counts, reverse=True))
    if fid.kind == "H":
        return tuple(sorted([D] * d + [D - 1] * (D - d) + [d], reverse=True))
    if fid.kind == "K":
        return tuple(sorted([D] * (D + 1) + [d], reverse=True))
    if fid.kind in ("K1", "K2"):
        return tuple(sorted([D] * D + [D - 1, d], reverse=True))
    # L
    return tuple(sorted([D] * (D + 2) + [d], reverse=True))


def _finish(fid: FamilyId, graph: Graph) -> FamilyGraph:
    expected = family_degree_multiset(fid)
    got = degree_profile(graph).multiset()
    if got != expected:
        raise AssertionError(
            f"constructor defect for {fid}: degrees {got}, expected {expected}"
        )
    return FamilyGraph(fid, graph, expected)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def build_G(delta: int, Delta: int) -> FamilyGraph:
    """Edge-minimal representative on Delta+1 vertices.

    Labeling: the hub (degree Delta) is vertex 0; the residual degrees are
    assigned to 1..Delta in non-increasing order and realized greedily.
    """
    fid = FamilyId("G", delta, Delta)
    d, D = delta, Delta
    if d == D:
        return _finish(fid, complete_graph(D + 1))
    if D * (d + 1) % 2 == 0:
        residual = [d - 1] * D
    elif d < D - 1:
        residual = [d] + [d - 1] * (D - 1)
    else:
        # d = D - 1, D odd: complete graph minus a matching of (D-1)/2 edges
        drop = {(2 * i + 1, 2 * i + 2) for i in range((D - 1) // 2)}
        kd = complete_graph(D + 1)
        return _finish(fid, Graph(D + 1, frozenset(kd.edges - drop)))
    inner = realize_degree_sequence(residual)
    if inner is None:
        raise AssertionError(f"residual sequence {residual} not graphical for {fid}")
    edges = [(0, v) for v in range(1, D + 1)]
    edges.extend((u + 1, v + 1) for u, v in inner.edges)
    return _finish(fid, Graph.from_edges(D + 1, edges))


def build_H(delta: int, Delta: int) -> FamilyGraph:
    """K_Delta on 0..Delta-1 plus w = Delta joined to 0..delta-1."""
    fid = FamilyId("H", delta, Delta)
    kd = complete_graph(Delta)
    w = Delta
    edges = set(kd.edges) | {(v, w) for v in range(delta)}
    return _finish(fid, Graph(Delta + 1, frozenset(edges)))


def build_K(delta: int, Delta: int) -> FamilyGraph:
    """Even delta: K_{Delta+1} minus the matching (0,1),(2,3),... on the first
    delta vertices, plus w = Delta+1 joined to 0..delta-1."""
    fid = FamilyId("K", delta, Delta)
    kd = complete_graph(Delta + 1)
    drop = {(2 * i, 2 * i + 1) for i in range(delta // 2)}
    w = Delta + 1
    edges = (kd.edges - drop) | {(v, w) for v in range(delta)}
    return _finish(fid, Graph(Delta + 2, frozenset(edges)))


def build_K1(delta: int, Delta: int) -> FamilyGraph:
    """Odd delta: K_{Delta+1} minus the matching (0,1),...,(delta-1,delta),
    plus w = Delta+1 joined to 0..delta-1.  The degree-(Delta-1) vertex is
    vertex delta, not adjacent to w."""
    fid = FamilyId("K1", delta, Delta)
    kd = complete_graph(Delta + 1)
    drop = {(2 * i, 2 * i + 1) for i in range((delta + 1) // 2)}
    w = Delta + 1
    edges = (kd.edges - drop) | {(v, w) for v in range(delta)}
    return _finish(fid, Graph(Delta + 2, frozenset(edges)))


def build_K2(delta: int, Delta: int) -> FamilyGraph:
    """Odd delta >= 3: K_{Delta+1} minus {(delta-3,delta-1),(delta-2,delta-1)}
    minus the matching (0,1),...,(delta-5,delta-4), plus w = Delta+1 joined to
    0..delta-1.  The degree-(Delta-1) vertex is delta-1, adjacent to w."""
    fid = FamilyId("K2", delta, Delta)
    d = delta
    kd = complete_graph(Delta + 1)
    drop = {(d - 3, d - 1), (d - 2, d - 1)}
    drop |= {(2 * i, 2 * i + 1) for i in range((d - 3) // 2)}
    w = Delta + 1
    edges = (kd.edges - drop) | {(v, w) for v in range(d)}
    return _finish(fid, Graph(Delta + 2, frozenset(edges)))


def build_L(delta: int, Delta: int) -> FamilyGraph:
    """delta * Delta odd: complement of the (Delta+2)-cycle, plus w = Delta+2
    joined to 0..delta-1, plus the consecutive cycle edges (j, j+1) for
    j = delta, delta+2, ..., Delta (covering vertices delta..Delta+1)."""
    fid = FamilyId("L", delta, Delta)
    d, D = delta, Delta
    base = cycle_complement(D + 2)
    w = D + 2
    edges = set(base.edges)
    edges |= {(v, w) for v in range(d)}
    for k in range((d + 1) // 2, (D + 1) // 2 + 1):
        edges.add((2 * k - 1, 2 * k))
    return _finish(fid, Graph(D + 3, frozenset(edges)))


_BUILDERS = {
    "G": build_G,
    "H": build_H,
    "K": build_K,
    "K1": build_K1,
    "K2": build_K2,
    "L": build_L,
}


def build_family(fid: FamilyId) -> FamilyGraph:
    return _BUILDERS[fid.kind](fid.delta, fid.Delta)


# ---------------------------------------------------------------------------
# Closed-form index values and membership
# ---------------------------------------------------------------------------


def family_J_value(fid: FamilyId, spec: VertexIndexSpec) -> Numeric:
    """Closed-form additive index value on the family (equals evaluation on
    the constructed representative, exactly)."""
    h = spec.value_at
    d, D = fid.delta, fid.Delta
    if fid.kind == "G":
        if d == D:
            return (D + 1) * h(D)
        if D * (d + 1) % 2 == 0:
            return D * h(d) + h(D)
        if d < D - 1:
            return (D - 1) * h(d) + h(d + 1) + h(D)
        return (D - 1) * h(d) + 2 * h(D)
    if fid.kind == "H":
        return h(d) + (D - d) * h(D - 1) + d * h(D)
    if fid.kind == "K":
        return (D + 1) * h(D) + h(d)
    if fid.kind in ("K1", "K2"):
        return D * h(D) + h(D - 1) + h(d)
    return (D + 2) * h(D) + h(d)  # L


def is_member(g: Graph, fid: FamilyId, strict: bool = False) -> bool:
    """Family membership by degree multiset (the defining property).

    With strict=True additionally require isomorphism with the constructed
    representative -- meaningful for the kinds with a uniqueness theorem
    (H, K, and G when delta = Delta; K1/K2 each carry their own
    representative).
    """
    if degree_profile(g).multiset() != family_degree_multiset(fid):
        return False
    if not strict:
        return True
    rep = build_family(fid).graph
    return canonical_form(g) == canonical_form(rep)
