"""Closed-form bounds: branch selection, values, strictness records, windows."""

from fractions import Fraction

import pytest

from varzagreb.bounds import (
    HypothesisError,
    edge_lower_bound,
    lower_bound_nondecreasing,
    lower_bound_nonincreasing,
    m1_alpha_lower_bound,
    minimal_vertex_window,
    multiplicative_lower_bound,
)
from varzagreb.indices import catalog, table_spec


def predicted(result):
    return sorted(str(f) for f in result.predicted_extremal)


# ---------------------------------------------------------------------------
# Edge-count bound
# ---------------------------------------------------------------------------


def test_edge_lower_bound_values():
    assert edge_lower_bound(2, 3) == 5
    assert edge_lower_bound(1, 3) == 3
    assert edge_lower_bound(3, 3) == 6
    assert edge_lower_bound(2, 4) == 6
    with pytest.raises(ValueError):
        edge_lower_bound(3, 2)
    with pytest.raises(ValueError):
        edge_lower_bound(0, 2)


def test_edge_lower_bound_is_ceiling():
    for D in range(1, 9):
        for d in range(1, D + 1):
            want = D * (d + 1) // 2 if D * (d + 1) % 2 == 0 else (D * (d + 1) + 1) // 2
            assert edge_lower_bound(d, D) == want


# ---------------------------------------------------------------------------
# Non-decreasing rules
# ---------------------------------------------------------------------------


def test_nondecreasing_even_and_odd_branches():
    sq = catalog("m1_alpha", 1)
    r = lower_bound_nondecreasing(sq, 2, 4)
    assert r.value == 32 and r.case_label == "nondecreasing/even"
    assert predicted(r) == ["G:2,4"]
    assert r.hypotheses["characterization_strict"] is True

    r = lower_bound_nondecreasing(sq, 2, 5)
    assert r.value == 50 and r.case_label == "nondecreasing/odd"

    const = catalog("m1_alpha", 0)
    r = lower_bound_nondecreasing(const, 3, 7)
    assert r.value == 8  # Delta + 1, the trivial vertex-count floor
    assert r.hypotheses["characterization_strict"] is False


def test_nondecreasing_regular_case():
    r = lower_bound_nondecreasing(catalog("m1_alpha", 1), 3, 3)
    assert r.value == 36 and r.case_label == "regular-complete"
    assert r.hypotheses["characterization_strict"] is True


def test_nondecreasing_rejects_decreasing_rule():
    with pytest.raises(HypothesisError):
        lower_bound_nondecreasing(catalog("inverse_ID"), 1, 3)


# ---------------------------------------------------------------------------
# Non-increasing rules
# ---------------------------------------------------------------------------


def test_nonincreasing_examples():
    inv = catalog("inverse_ID")  # 1/x
    r = lower_bound_nonincreasing(inv, 1, 3)
    assert r.value == Fraction(7, 3)
    assert r.case_label == "nonincreasing/odd-odd-high/min=H"
    assert predicted(r) == ["H:1,3"]
    assert r.hypotheses["characterization_strict"] is True

    inv2 = catalog("m1_alpha", -1)  # x^-2
    r = lower_bound_nonincreasing(inv2, 2, 4)
    assert r.value == Fraction(9, 16)
    assert r.case_label == "nonincreasing/delta-even/min=K"
    assert predicted(r) == ["K:2,4"]

    const = catalog("m1_alpha", 0)
    r = lower_bound_nonincreasing(const, 2, 3)
    assert r.value == 4  # min{3+1, 4+1}
    assert r.hypotheses["characterization_strict"] is False


def test_nonincreasing_L_branch():
    inv2 = catalog("m1_alpha", -1)  # 2*h(3) = 2/9 <= h(2) = 1/4
    r = lower_bound_nonincreasing(inv2, 1, 3)
    assert r.value == Fraction(14, 9)
    assert r.case_label == "nonincreasing/odd-odd-low/min=L"
    assert predicted(r) == ["L:1,3"]


def test_nonincreasing_k_pair_prediction():
    inv2 = catalog("m1_alpha", -1)
    r = lower_bound_nonincreasing(inv2, 3, 4)
    # delta odd, Delta even: K candidates are the pair K1, K2
    assert r.case_label.startswith("nonincreasing/delta-odd-Delta-even")
    if "K" in r.case_label.split("min=")[1]:
        assert "K1:3,4" in predicted(r) and "K2:3,4" in predicted(r)


def test_nonincreasing_three_way_tie():
    # h = (4, 2, 1) on (1, 3): H, K and L values all equal 9.
    tie = table_spec({1: 4, 2: 2, 3: 1})
    r = lower_bound_nonincreasing(tie, 1, 3)
    assert r.value == 9
    assert r.case_label == "nonincreasing/odd-odd-low/min=H+K+L"
    assert predicted(r) == ["H:1,3", "K1:1,3", "L:1,3"]
    assert r.hypotheses["characterization_strict"] is True


def test_nonincreasing_regular_case():
    r = lower_bound_nonincreasing(catalog("inverse_ID"), 3, 3)
    assert r.value == Fraction(4, 3)
    assert r.case_label == "regular-complete"


def test_nonincreasing_rejects_increasing_rule():
    with pytest.raises(HypothesisError):
        lower_bound_nonincreasing(catalog("m1_alpha", 1), 1, 3)


def test_threshold_coherence():
    # Whenever 2h(D) <= h(D-1), the L value is at most the odd-K value.
    for alpha in (Fraction(-1, 2), -1, Fraction(-3, 2), -2):
        spec = catalog("m1_alpha", alpha)
        h = spec.value_at
        for D in range(2, 9):
            for d in range(1, D):
                if 2 * h(D) <= h(D - 1):
                    assert (D + 2) * h(D) + h(d) <= D * h(D) + h(D - 1) + h(d)


# ---------------------------------------------------------------------------
# First variable Zagreb specialization
# ---------------------------------------------------------------------------


def m1_alpha_formula(alpha, d, D):
    """Literal transcription of the published inequalities (test oracle)."""
    a2 = 2 * Fraction(alpha)

    def p(x, e):
        if e.denominator == 1:
            e = int(e)
            return Fraction(x) ** e
        return float(x) ** float(e)

    if alpha > 0:
        if D * (d + 1) % 2 == 0:
            return D * p(d, a2) + p(D, a2)
        return (D - 1) * p(d, a2) + p(d + 1, a2) + p(D, a2)
    if alpha == 0:
        return D + 1
    first = d * p(D, a2) + (D - d) * p(D - 1, a2) + p(d, a2)
    if d % 2 == 0:
        return min(first, (D + 1) * p(D, a2) + p(d, a2))
    if D % 2 == 0 or 2 * p(D, a2) > p(D - 1, a2):
        return min(first, D * p(D, a2) + p(D - 1, a2) + p(d, a2))
    return min(first, (D + 2) * p(D, a2) + p(d, a2))


def test_m1_alpha_spot_values():
    assert m1_alpha_lower_bound(1, 1, 3).value == 12
    assert m1_alpha_lower_bound(Fraction(-1, 2), 1, 3).value == Fraction(7, 3)
    assert m1_alpha_lower_bound(Fraction(3, 2), 2, 4).value == 96
    assert m1_alpha_lower_bound(0, 3, 7).value == 8


def test_m1_alpha_matches_published_formulas():
    alphas = [Fraction(n, 2) for n in (-4, -3, -2, -1, 1, 2, 3, 4)]
    for D in range(1, 6):
        for d in range(1, D + 1):
            for alpha in alphas:
                if alpha < 0 and d == D:
                    continue  # the published negative-exponent form needs d < D
                got = m1_alpha_lower_bound(alpha, d, D).value
                want = m1_alpha_formula(alpha, d, D)
                assert abs(float(got) - float(want)) <= 1e-12 * (1 + abs(float(want)))


def test_m1_alpha_delegates_to_general_bounds():
    # Bit-for-bit the same evaluation path as the general theorems.
    spec_pos = catalog("m1_alpha", Fraction(3, 2))
    assert (m1_alpha_lower_bound(Fraction(3, 2), 2, 4).value
            == lower_bound_nondecreasing(spec_pos, 2, 4).value)
    spec_neg = catalog("m1_alpha", -2)
    assert (m1_alpha_lower_bound(-2, 1, 4).value
            == lower_bound_nonincreasing(spec_neg, 1, 4).value)


# ---------------------------------------------------------------------------
# Multiplicative bounds
# ---------------------------------------------------------------------------


def test_multiplicative_values():
    r = multiplicative_lower_bound("nk", 2, 3)
    assert r.value == 36 and r.case_label == "product/odd"
    assert predicted(r) == ["G:2,3"]
    assert multiplicative_lower_bound("pi1", 2, 4).value == 4096
    assert multiplicative_lower_bound("nk_star", 2, 3).value == 11664
    assert multiplicative_lower_bound("nk", 2, 4).value == 2 ** 4 * 4
    assert "log_domain_value" in r.hypotheses


def test_multiplicative_domain():
    with pytest.raises(ValueError):
        multiplicative_lower_bound("nk", 1, 3)
    with pytest.raises(ValueError):
        multiplicative_lower_bound("nk", 3, 3)
    with pytest.raises(ValueError):
        multiplicative_lower_bound("wiener", 2, 3)


def test_multiplicative_log_agreement_sweep():
    for kind in ("pi1", "nk", "nk_star"):
        for D in range(3, 7):
            for d in range(2, D):
                r = multiplicative_lower_bound(kind, d, D)
                assert abs(r.hypotheses["log_domain_value"] - r.value) \
                    <= 1e-9 * (1 + abs(r.value))


# ---------------------------------------------------------------------------
# Vertex-count windows
# ---------------------------------------------------------------------------


def test_minimal_vertex_window():
    inv = catalog("inverse_ID")
    assert minimal_vertex_window(inv, 1, 3) == (4, 5)
    inv4 = catalog("m1_alpha", -2)  # x^-4: 2/81 <= 1/16
    assert minimal_vertex_window(inv4, 1, 3) == (4, 6)
    assert minimal_vertex_window(inv, 2, 4) == (5, 6)
    assert minimal_vertex_window(catalog("m1_alpha", 1), 2, 4) == (5, 5)
    assert minimal_vertex_window(catalog("m1_alpha", 0), 1, 4) == (5, 5)
    assert minimal_vertex_window(inv, 3, 3) == (4, 4)
    with pytest.raises(HypothesisError):
        minimal_vertex_window(table_spec({1: 1, 2: 3, 3: 2}), 1, 3)


def test_every_branch_predicts_a_family():
    alphas = [Fraction(n, 2) for n in (-4, -3, -2, -1, 0, 1, 2, 3)]
    for D in range(1, 7):
        for d in range(1, D + 1):
            for alpha in alphas:
                r = m1_alpha_lower_bound(alpha, d, D)
                assert r.predicted_extremal
                for f in r.predicted_extremal:
                    assert f.delta == d and f.Delta == D
