"""Index engine: catalog, evaluation paths, transforms, monotonicity."""

import math
import random
from fractions import Fraction

import pytest

from varzagreb.graphs import Graph, complete_graph, cycle_graph, path_graph
from varzagreb.indices import (
    DomainError,
    EdgeIndexSpec,
    catalog,
    classify_monotonicity,
    eval_edge_index,
    eval_multiplicative_exp_log,
    eval_on_degrees,
    eval_vertex_index,
    format_number,
    parse_index_spec,
    table_spec,
    vertex_to_edge_transform,
)
from varzagreb.families import build_H


def random_graph(rng, n, p=0.5, min_degree=1):
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if n > min_degree and min(g.degree(v) for v in range(n)) >= min_degree:
            return g


# ---------------------------------------------------------------------------
# Catalog values on small graphs
# ---------------------------------------------------------------------------


def test_first_zagreb_on_path():
    assert eval_vertex_index(catalog("m1_alpha", 1), path_graph(3)) == 6
    assert eval_vertex_index(catalog("first_zagreb"), path_graph(3)) == 6


def test_inverse_index_on_h13():
    h13 = build_H(1, 3).graph  # degrees {1,2,2,3}
    assert eval_vertex_index(catalog("inverse_ID"), h13) == Fraction(7, 3)


def test_modified_narumi_katayama_on_triangle():
    assert eval_vertex_index(catalog("nk_star"), cycle_graph(3)) == 64


def test_edge_indices():
    assert eval_edge_index(catalog("randic"), complete_graph(3)) == pytest.approx(1.5)
    assert eval_edge_index(catalog("second_zagreb"), path_graph(3)) == 4
    assert eval_edge_index(catalog("m2_alpha", 1), path_graph(3)) == 4
    assert eval_edge_index(catalog("modified_zagreb"), complete_graph(4)) == Fraction(2, 3)


def test_forgotten_index_is_cubic_rule():
    spec = catalog("forgotten")
    assert spec.value_at(2) == 8 and spec.value_at(3) == 27


def test_catalog_identities_on_random_graphs():
    rng = random.Random(5)
    n_index = catalog("m1_alpha", 0)
    m_index = catalog("m1_alpha", Fraction(1, 2))
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 9))
        assert eval_vertex_index(n_index, g) == g.n
        assert eval_vertex_index(m_index, g) == 2 * len(g.edges)


def test_multiplicative_square_identity_on_random_graphs():
    # pi1 = nk^2; multiplicative rules need every degree >= 2.
    rng = random.Random(6)
    pi1, nk = catalog("pi1"), catalog("nk")
    for _ in range(100):
        g = random_graph(rng, rng.randint(4, 9), p=0.7, min_degree=2)
        assert eval_vertex_index(pi1, g) == eval_vertex_index(nk, g) ** 2


def test_catalog_errors():
    with pytest.raises(ValueError):
        catalog("wiener")
    with pytest.raises(ValueError):
        catalog("m1_alpha")
    with pytest.raises(ValueError):
        catalog("randic", Fraction(1, 2))


# ---------------------------------------------------------------------------
# Domain errors
# ---------------------------------------------------------------------------


def test_isolated_vertex_rejected():
    g = Graph.from_edges(3, [(0, 1)])  # vertex 2 isolated
    with pytest.raises(DomainError):
        eval_vertex_index(catalog("first_zagreb"), g)


def test_multiplicative_needs_rule_above_one():
    with pytest.raises(DomainError):
        eval_vertex_index(catalog("nk"), path_graph(3))  # h(1) = 1


def test_edge_index_needs_an_edge():
    with pytest.raises(DomainError):
        eval_edge_index(catalog("randic"), Graph(2, frozenset()))


def test_table_must_cover_evaluated_degrees():
    spec = table_spec({1: 1, 2: Fraction(1, 2)})
    with pytest.raises(DomainError):
        eval_on_degrees(spec, (1, 2, 3))
    with pytest.raises(ValueError):
        table_spec({1: 0})
    with pytest.raises(ValueError):
        table_spec({0: 1})


# ---------------------------------------------------------------------------
# Vertex-to-edge transform
# ---------------------------------------------------------------------------


def test_transform_examples():
    sq = catalog("m1_alpha", 1)
    t = vertex_to_edge_transform(sq)
    assert eval_edge_index(t, cycle_graph(5)) == 20
    assert eval_edge_index(t, path_graph(3)) == 6

    inv = catalog("inverse_ID")
    ti = vertex_to_edge_transform(inv)
    k13 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert eval_edge_index(ti, k13) == Fraction(10, 3)
    assert eval_vertex_index(inv, k13) == Fraction(10, 3)


def test_transform_rejects_multiplicative():
    with pytest.raises(DomainError):
        vertex_to_edge_transform(catalog("nk"))


def test_transform_identity_random():
    rng = random.Random(17)
    rules = [
        catalog("m1_alpha", 1),       # x^2
        catalog("inverse_ID"),        # 1/x
        catalog("forgotten"),         # x^3
        catalog("m1_alpha", -0.25),   # 1/sqrt(x), float path
    ]
    for _ in range(250):
        g = random_graph(rng, rng.randint(2, 10))
        for spec in rules:
            lhs = float(eval_edge_index(vertex_to_edge_transform(spec), g))
            rhs = float(eval_vertex_index(spec, g))
            assert abs(lhs - rhs) <= 1e-9 * (1 + abs(rhs))


def test_edge_index_symmetric_under_endpoint_order():
    spec = catalog("m2_alpha", Fraction(-1, 2))
    assert spec.value_at(2, 5) == spec.value_at(5, 2)


# ---------------------------------------------------------------------------
# Multiplicative evaluation paths
# ---------------------------------------------------------------------------


def test_exp_log_agrees_with_exact_product():
    rng = random.Random(23)
    for name in ("pi1", "nk", "nk_star"):
        spec = catalog(name)
        for _ in range(100):
            n = rng.randint(3, 9)
            degs = [rng.randint(2, n - 1) for _ in range(n)]
            exact = eval_on_degrees(spec, degs)
            approx = eval_multiplicative_exp_log(spec, degs)
            assert abs(approx - exact) <= 1e-12 * abs(exact) * 10


# ---------------------------------------------------------------------------
# Monotonicity
# ---------------------------------------------------------------------------


def test_monotonicity_classes():
    assert classify_monotonicity(catalog("m1_alpha", 1), 1, 5).kind == "strictly-increasing"
    assert classify_monotonicity(catalog("inverse_ID"), 1, 5).kind == "strictly-decreasing"
    assert classify_monotonicity(catalog("m1_alpha", 0), 1, 5).kind == "constant"
    mixed = table_spec({1: 1, 2: 3, 3: 2})
    assert classify_monotonicity(mixed, 1, 3).kind == "mixed"
    plateau = table_spec({1: 1, 2: 1, 3: 2})
    mono = classify_monotonicity(plateau, 1, 3)
    assert mono.kind == "non-decreasing"
    assert mono.steps == (0, 1)


def test_monotonicity_interval_errors():
    with pytest.raises(ValueError):
        classify_monotonicity(catalog("nk"), 3, 2)
    with pytest.raises(ValueError):
        classify_monotonicity(catalog("nk"), 0, 2)


def test_constant_is_both_directions():
    mono = classify_monotonicity(catalog("m1_alpha", 0), 1, 5)
    assert mono.non_decreasing and mono.non_increasing


# ---------------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------------


def test_parse_index_spec_forms():
    assert parse_index_spec("randic").name == "randic"
    spec = parse_index_spec("m1_alpha:-0.5")
    assert spec.parameter == Fraction(-1, 2)
    assert spec.value_at(4) == Fraction(1, 4)
    tbl = parse_index_spec("table:1=1,2=1/2,3=0.25")
    assert tbl.value_at(2) == Fraction(1, 2)
    assert tbl.value_at(3) == Fraction(1, 4)
    assert isinstance(parse_index_spec("m2_alpha:2"), EdgeIndexSpec)
    with pytest.raises(ValueError):
        parse_index_spec("m1_alpha:x")
    with pytest.raises(ValueError):
        parse_index_spec("table:1;2")


def test_display_strings():
    assert parse_index_spec("m1_alpha:-0.5").display() == "m1_alpha:-0.5"
    assert parse_index_spec("inverse_ID").display() == "inverse_ID"
    assert parse_index_spec("nk").display() == "nk"


def test_format_number():
    assert format_number(12) == "12"
    assert format_number(Fraction(4, 2)) == "2"
    assert format_number(Fraction(7, 3)) == "2.33333333333"
    assert format_number(0.5625) == "0.5625"
    assert format_number(11664) == "11664"
    big = 5 ** 30 * 6 ** 6  # exact integers never go through float
    assert format_number(big) == str(big)


def test_power_rule_float_path_matches_math():
    spec = catalog("m1_alpha", 0.3)  # 2a = 0.6, irrational powers
    assert spec.value_at(3) == pytest.approx(math.exp(0.6 * math.log(3)))
    assert spec.value_at(1) == pytest.approx(1.0)
