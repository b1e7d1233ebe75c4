"""Sharp lower bounds for degree-based indices over graphs with given min/max degree.

All bounds depend only on the minimum degree d and maximum degree D:

  * edge count:  m >= ceil(D(d+1)/2), with equality exactly on the G family.
  * non-decreasing rule h:  sum of h over degrees is at least
        D h(d) + h(D)                      if D(d+1) even,
        (D-1) h(d) + h(d+1) + h(D)         if D(d+1) odd,
    attained on the G family.
  * non-increasing rule h (d < D):  the minimum of the closed-form values of
    the H family and, depending on parity and on how 2h(D) compares with
    h(D-1), the K or L family.
  * d = D: the only candidate is the complete graph K_{D+1}, value (D+1)h(D).
  * first variable Zagreb index with exponent a: the above with h(x) = x^(2a).
  * multiplicative indices (values > 1, so d >= 2): the non-decreasing case
    applied in the log domain, with exact integer closed forms.

Each result records which case fired, which families are predicted to attain
the bound, and whether the strictness hypotheses needed for the
"equality only on the family" characterizations hold.  Comparisons use exact
rational arithmetic whenever the rule values are exact; float comparisons use
relative tolerance 1e-12 with ties resolved toward the "<=" branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .families import FamilyId, family_J_value
from .indices import (
    ADDITIVE,
    MULTIPLICATIVE,
    Numeric,
    VertexIndexSpec,
    catalog,
    classify_monotonicity,
    is_exact,
)

__all__ = [
    "BoundResult",
    "HypothesisError",
    "edge_lower_bound",
    "lower_bound_nondecreasing",
    "lower_bound_nonincreasing",
    "m1_alpha_lower_bound",
    "multiplicative_lower_bound",
    "minimal_vertex_window",
]

FLOAT_RTOL = 1e-12


class HypothesisError(ValueError):
    """The rule does not satisfy the monotonicity hypothesis of the theorem."""


@dataclass(frozen=True)
class BoundResult:
    """A closed-form lower bound with its provenance.

    value            -- the bound (exact when the rule is exact)
    case_label       -- which theorem branch fired and which min argument won
    predicted_extremal -- families whose members attain the bound
    hypotheses       -- monotonicity/strictness checks performed, JSON-ready
    """

    value: Numeric
    case_label: str
    predicted_extremal: tuple[FamilyId, ...]
    hypotheses: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.predicted_extremal:
            raise AssertionError("bound must predict at least one extremal family")


def _leq(a: Numeric, b: Numeric) -> bool:
    """a <= b, exact when possible, tolerant (ties toward <=) for floats."""
    if is_exact(a) and is_exact(b):
        return a <= b
    return float(a) <= float(b) * (1 + FLOAT_RTOL)


def _validate(delta: int, Delta: int):
    if delta < 1 or Delta < delta:
        raise ValueError(f"need 1 <= delta <= Delta, got ({delta}, {Delta})")


def edge_lower_bound(delta: int, Delta: int) -> int:
    """Least possible edge count given min degree delta and max degree Delta:
    ceil(Delta*(delta+1)/2).  Equality exactly on the G family."""
    _validate(delta, Delta)
    return (Delta * (delta + 1) + 1) // 2


# ---------------------------------------------------------------------------
# Non-decreasing rules
# ---------------------------------------------------------------------------


def lower_bound_nondecreasing(spec: VertexIndexSpec, delta: int, Delta: int) -> BoundResult:
    _validate(delta, Delta)
    d, D = delta, Delta
    h = spec.value_at
    mono = classify_monotonicity(spec, d, D)
    if not mono.non_decreasing:
        raise HypothesisError(
            f"{spec.name} is {mono.kind} on [{d}, {D}]; non-decreasing required"
        )
    hyp: dict = {"monotonicity": mono.kind}
    gid = FamilyId("G", d, D)
    if d == D:
        # Regular case: the index is n*h(D), minimal exactly at K_{D+1}.
        hyp["characterization_strict"] = True
        return BoundResult((D + 1) * h(D), "regular-complete",
                           (gid,), hyp)
    if D * (d + 1) % 2 == 0:
        value = D * h(d) + h(D)
        strict = h(d) < h(d + 1)
        label = "nondecreasing/even"
    else:
        value = (D - 1) * h(d) + h(d + 1) + h(D)
        strict = h(d) < h(d + 1) and (d + 2 > D or h(d + 1) < h(d + 2))
        label = "nondecreasing/odd"
    hyp["strict_G"] = strict
    hyp["characterization_strict"] = strict
    return BoundResult(value, label, (gid,), hyp)


# ---------------------------------------------------------------------------
# Non-increasing rules
# ---------------------------------------------------------------------------


def _strict_above(h, lo_degree: int, delta: int) -> bool:
    """h(x-1) > h(x) required only when degree x-1 is realizable in the class
    (x-1 >= delta); below that the comparison is vacuous."""
    if lo_degree < delta:
        return True
    return h(lo_degree) > h(lo_degree + 1)


def lower_bound_nonincreasing(spec: VertexIndexSpec, delta: int, Delta: int) -> BoundResult:
    _validate(delta, Delta)
    d, D = delta, Delta
    h = spec.value_at
    mono = classify_monotonicity(spec, d, D)
    if not mono.non_increasing:
        raise HypothesisError(
            f"{spec.name} is {mono.kind} on [{d}, {D}]; non-increasing required"
        )
    hyp: dict = {"monotonicity": mono.kind}
    if d == D:
        hyp["characterization_strict"] = True
        return BoundResult((D + 1) * h(D), "regular-complete",
                           (FamilyId("G", d, D),), hyp)

    # Candidate families by parity; the bound is the least of their values.
    strict_H = _strict_above(h, D - 2, d) and h(D - 1) > h(D)
    candidates: list[tuple[str, Numeric, tuple[FamilyId, ...], bool]] = [
        ("H", family_J_value(FamilyId("H", d, D), spec),
         (FamilyId("H", d, D),), strict_H),
    ]
    if d % 2 == 0:
        case_tag = "delta-even"
        strict_K = h(D - 1) > h(D)
        candidates.append(("K", family_J_value(FamilyId("K", d, D), spec),
                           (FamilyId("K", d, D),), strict_K))
    else:
        strict_K = _strict_above(h, D - 2, d) and h(D - 1) > h(D)
        k_ids = (FamilyId("K1", d, D),) if d == 1 else (
            FamilyId("K1", d, D), FamilyId("K2", d, D))
        candidates.append(("K", family_J_value(k_ids[0], spec), k_ids, strict_K))
        if D % 2 == 0:
            case_tag = "delta-odd-Delta-even"
        else:
            threshold_le = _leq(2 * h(D), h(D - 1))
            hyp["threshold_2hD_le_hDminus1"] = threshold_le
            case_tag = ("odd-odd-low" if threshold_le else "odd-odd-high")
            strict_L = h(D - 1) > h(D)
            candidates.append(("L", family_J_value(FamilyId("L", d, D), spec),
                               (FamilyId("L", d, D),), strict_L))

    best = min(v for _, v, _, _ in candidates)
    winners = [(tag, ids, strict) for tag, v, ids, strict in candidates
               if not (v > best)]
    predicted: tuple[FamilyId, ...] = ()
    for _, ids, _ in winners:
        predicted += ids
    for tag, _, strict in winners:
        hyp[f"strict_{tag}"] = strict
    hyp["characterization_strict"] = all(strict for _, _, strict in winners)
    label = f"nonincreasing/{case_tag}/min={'+'.join(tag for tag, _, _ in winners)}"
    return BoundResult(best, label, predicted, hyp)


# ---------------------------------------------------------------------------
# First variable Zagreb specialization and multiplicative corollaries
# ---------------------------------------------------------------------------


def m1_alpha_lower_bound(alpha, delta: int, Delta: int) -> BoundResult:
    """Lower bound for the first variable Zagreb index, h(x) = x^(2 alpha),
    dispatched on the sign of alpha (alpha = 0 gives the vertex count bound
    Delta + 1)."""
    _validate(delta, Delta)
    spec = catalog("m1_alpha", alpha)
    if float(spec.parameter) >= 0:
        result = lower_bound_nondecreasing(spec, delta, Delta)
    else:
        result = lower_bound_nonincreasing(spec, delta, Delta)
    result.hypotheses["alpha"] = float(spec.parameter)
    return result


_PRODUCT_BOUNDS = {
    "pi1": (
        lambda d, D: d ** (2 * D) * D ** 2,
        lambda d, D: d ** (2 * (D - 1)) * (d + 1) ** 2 * D ** 2,
    ),
    "nk": (
        lambda d, D: d ** D * D,
        lambda d, D: d ** (D - 1) * (d + 1) * D,
    ),
    "nk_star": (
        lambda d, D: d ** (d * D) * D ** D,
        lambda d, D: d ** (d * (D - 1)) * (d + 1) ** (d + 1) * D ** D,
    ),
}


def multiplicative_lower_bound(kind: str, delta: int, Delta: int) -> BoundResult:
    """Sharp lower bounds for the multiplicative indices pi1, nk, nk_star.

    Requires 2 <= delta < Delta: the rules take values in (1, oo) only from
    degree 2 up.  The exact integer closed form is cross-checked against the
    log-domain route (non-decreasing bound applied to log h, exponentiated).
    """
    if kind not in _PRODUCT_BOUNDS:
        raise ValueError(f"unknown multiplicative index {kind!r}")
    if delta < 2:
        raise ValueError(
            f"{kind} bound requires delta >= 2 (rule values must lie in (1, oo))"
        )
    if delta >= Delta:
        raise ValueError(f"{kind} bound requires delta < Delta")
    d, D = delta, Delta
    even_form, odd_form = _PRODUCT_BOUNDS[kind]
    parity_even = D * (d + 1) % 2 == 0
    value = even_form(d, D) if parity_even else odd_form(d, D)

    mult = catalog(kind)
    log_spec = VertexIndexSpec(
        f"{kind}@log", lambda x: math.log(float(mult.value_at(x))), mode=ADDITIVE
    )
    log_result = lower_bound_nondecreasing(log_spec, d, D)
    log_value = math.exp(float(log_result.value))
    if abs(log_value - value) > 1e-9 * (1 + abs(value)):
        raise AssertionError(
            f"log-domain disagreement for {kind} ({d},{D}): "
            f"{log_value} vs {value}"
        )
    hyp = {
        "monotonicity": "strictly-increasing (log domain)",
        "characterization_strict": bool(log_result.hypotheses["characterization_strict"]),
        "log_domain_value": log_value,
    }
    label = f"product/{'even' if parity_even else 'odd'}"
    return BoundResult(value, label, (FamilyId("G", d, D),), hyp)


# ---------------------------------------------------------------------------
# Vertex-count window for minimal graphs
# ---------------------------------------------------------------------------


def minimal_vertex_window(spec: VertexIndexSpec, delta: int, Delta: int) -> tuple[int, int]:
    """Inclusive n-range that contains a minimizing graph.

    Non-decreasing rules: minimal graphs exist on Delta+1 vertices.
    Non-increasing rules: Delta+2 suffices unless delta*Delta is odd and
    2h(Delta) <= h(Delta-1), in which case Delta+3 is needed.
    """
    _validate(delta, Delta)
    d, D = delta, Delta
    mono = classify_monotonicity(spec, d, D)
    if mono.non_decreasing:
        return (D + 1, D + 1)
    if not mono.non_increasing:
        raise HypothesisError(
            f"{spec.name} is {mono.kind} on [{d}, {D}]; monotone rule required"
        )
    if d == D:
        return (D + 1, D + 1)
    h = spec.value_at
    if (d * D) % 2 == 0 or not _leq(2 * h(D), h(D - 1)):
        return (D + 1, D + 2)
    return (D + 1, D + 3)
