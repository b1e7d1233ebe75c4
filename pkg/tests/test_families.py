"""Extremal family constructors: degree contracts, closed forms, membership."""

from fractions import Fraction

import pytest

from varzagreb.bounds import edge_lower_bound
from varzagreb.families import (
    FamilyId,
    build_family,
    build_G,
    build_H,
    build_K,
    build_K1,
    build_K2,
    build_L,
    family_degree_multiset,
    family_J_value,
    is_member,
    parse_family_id,
)
from varzagreb.graphs import (
    canonical_form,
    complete_graph,
    cycle_graph,
    degree_profile,
    path_graph,
)
from varzagreb.indices import catalog, eval_vertex_index


def all_valid_ids(max_Delta):
    for D in range(1, max_Delta + 1):
        for d in range(1, D + 1):
            yield FamilyId("G", d, D)
            if d < D:
                yield FamilyId("H", d, D)
                if d % 2 == 0:
                    yield FamilyId("K", d, D)
                else:
                    yield FamilyId("K1", d, D)
                    if d >= 3:
                        yield FamilyId("K2", d, D)
                if (d * D) % 2:
                    yield FamilyId("L", d, D)


def is_connected(g):
    if g.n == 1:
        return True
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen, stack = {0}, [0]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# Constructor degree contracts
# ---------------------------------------------------------------------------


def test_degree_contracts_full_sweep():
    # Every constructor honors its degree multiset for all parameters up to
    # Delta = 8 (the builders also self-check; this guards the expectations).
    for fid in all_valid_ids(8):
        fam = build_family(fid)
        assert degree_profile(fam.graph).multiset() == fam.expected_degrees
        assert fam.expected_degrees == family_degree_multiset(fid)


def test_specific_degree_multisets():
    assert build_G(2, 4).expected_degrees == (4, 2, 2, 2, 2)
    assert build_G(2, 5).expected_degrees == (5, 3, 2, 2, 2, 2)
    assert build_G(3, 3).graph == complete_graph(4)
    assert build_H(2, 4).expected_degrees == (4, 4, 3, 3, 2)
    assert build_H(1, 3).expected_degrees == (3, 2, 2, 1)
    assert canonical_form(build_H(1, 2).graph) == canonical_form(path_graph(3))
    assert build_K(2, 3).expected_degrees == (3, 3, 3, 3, 2)
    assert build_K(2, 4).expected_degrees == (4, 4, 4, 4, 4, 2)
    assert build_K(4, 5).expected_degrees == (5, 5, 5, 5, 5, 5, 4)
    assert build_K1(1, 3).expected_degrees == (3, 3, 3, 2, 1)
    assert build_K1(3, 4).expected_degrees == (4, 4, 4, 4, 3, 3)
    assert build_K1(1, 2).expected_degrees == (2, 2, 1, 1)
    assert build_K2(3, 4).expected_degrees == (4, 4, 4, 4, 3, 3)
    assert build_K2(3, 5).expected_degrees == (5, 5, 5, 5, 5, 4, 3)
    assert build_K2(5, 6).expected_degrees == (6, 6, 6, 6, 6, 6, 5, 5)
    assert build_L(1, 3).expected_degrees == (3, 3, 3, 3, 3, 1)
    assert build_L(3, 5).expected_degrees == (5, 5, 5, 5, 5, 5, 5, 3)
    assert build_L(1, 5).expected_degrees == (5, 5, 5, 5, 5, 5, 5, 1)


def test_w_labeling_and_deficient_vertex_adjacency():
    # w is the last label in the w-based families.
    for d, D in [(1, 3), (2, 4), (3, 5)]:
        h = build_H(d, D)
        assert degree_profile(h.graph).degrees[h.graph.n - 1] == d
    # K1: the degree-(Delta-1) vertex is not adjacent to w; K2: it is.
    for d, D in [(3, 4), (3, 5), (5, 6)]:
        for builder, expect_adjacent in ((build_K1, False), (build_K2, True)):
            fam = builder(d, D)
            w = fam.graph.n - 1
            degs = degree_profile(fam.graph).degrees
            deficient = [v for v in range(w) if degs[v] == D - 1]
            assert len(deficient) == 1
            assert fam.graph.has_edge(deficient[0], w) == expect_adjacent


def test_k1_k2_not_isomorphic():
    for d, D in [(3, 4), (3, 5), (5, 6)]:
        assert canonical_form(build_K1(d, D).graph) != canonical_form(build_K2(d, D).graph)


def test_G_members_connected_with_minimal_edges():
    for D in range(1, 9):
        for d in range(1, D + 1):
            g = build_G(d, D).graph
            assert is_connected(g)
            assert len(g.edges) == edge_lower_bound(d, D)
            assert g.n == D + 1


# ---------------------------------------------------------------------------
# Closed forms match evaluation exactly
# ---------------------------------------------------------------------------


def test_family_value_matches_evaluation():
    rules = [
        catalog("m1_alpha", 1),              # x^2
        catalog("inverse_ID"),               # 1/x
        catalog("forgotten"),                # x^3
        catalog("m1_alpha", -1),             # x^-2
    ]
    for fid in all_valid_ids(8):
        fam = build_family(fid)
        for spec in rules:
            assert family_J_value(fid, spec) == eval_vertex_index(spec, fam.graph), fid


def test_family_value_spot_checks():
    assert family_J_value(FamilyId("H", 1, 3), catalog("inverse_ID")) == Fraction(7, 3)
    assert family_J_value(FamilyId("K", 2, 4), catalog("m1_alpha", 1)) == 84
    assert family_J_value(FamilyId("L", 1, 3), catalog("inverse_ID")) == Fraction(8, 3)


# ---------------------------------------------------------------------------
# Membership and identifiers
# ---------------------------------------------------------------------------


def test_is_member():
    assert is_member(build_H(2, 4).graph, FamilyId("H", 2, 4))
    assert is_member(complete_graph(4), FamilyId("G", 3, 3))
    assert not is_member(cycle_graph(5), FamilyId("H", 1, 3))
    assert is_member(build_H(2, 4).graph, FamilyId("H", 2, 4), strict=True)
    # K1 and K2 share the multiset but not the strict representative.
    assert is_member(build_K2(3, 4).graph, FamilyId("K1", 3, 4))
    assert not is_member(build_K2(3, 4).graph, FamilyId("K1", 3, 4), strict=True)


def test_parse_family_id():
    assert parse_family_id("H:2,4") == FamilyId("H", 2, 4)
    assert parse_family_id("K1:3,5") == FamilyId("K1", 3, 5)
    assert str(FamilyId("L", 1, 3)) == "L:1,3"
    with pytest.raises(ValueError):
        parse_family_id("H:2")
    with pytest.raises(ValueError):
        parse_family_id("Q:1,2")
    with pytest.raises(ValueError):
        parse_family_id("H:a,b")


def test_parameter_constraints():
    with pytest.raises(ValueError):
        FamilyId("H", 3, 3)       # needs delta < Delta
    with pytest.raises(ValueError):
        FamilyId("K", 3, 5)       # K needs even delta
    with pytest.raises(ValueError):
        FamilyId("K1", 2, 5)      # K1 needs odd delta
    with pytest.raises(ValueError):
        FamilyId("K2", 1, 3)      # no K2 member at delta = 1
    with pytest.raises(ValueError):
        FamilyId("L", 2, 5)       # L needs delta * Delta odd
    with pytest.raises(ValueError):
        FamilyId("G", 0, 2)
