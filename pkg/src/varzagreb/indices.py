"""Degree-based topological indices: additive vertex/edge rules and multiplicative rules.

A vertex index sums a positive rule h(d) over vertex degrees; an edge index
sums a positive symmetric rule h(x, y) over edge endpoint degrees; a
multiplicative index multiplies a rule with values in (1, oo) over degrees.
Every additive vertex index has an equivalent edge form via
h_edge(x, y) = h(x)/x + h(y)/y.

Rules are memoized per degree, so evaluation over enumeration-scale graph
streams is table-lookup speed.  Values are kept exact (int / Fraction)
whenever the rule is exact; only genuinely irrational rules fall back to
floats (x**p computed as exp(p * ln x)).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from .graphs import Graph, degree_profile

__all__ = [
    "Numeric",
    "DomainError",
    "ADDITIVE",
    "MULTIPLICATIVE",
    "VertexIndexSpec",
    "EdgeIndexSpec",
    "Monotonicity",
    "CATALOG_NAMES",
    "catalog",
    "table_spec",
    "parse_index_spec",
    "eval_vertex_index",
    "eval_edge_index",
    "eval_on_degrees",
    "eval_multiplicative_exp_log",
    "vertex_to_edge_transform",
    "classify_monotonicity",
    "power_rule",
]

Numeric = Union[int, Fraction, float]

ADDITIVE = "additive-vertex"
MULTIPLICATIVE = "multiplicative-vertex"


class DomainError(ValueError):
    """Index evaluated outside its domain (degree 0, rule value out of range, ...)."""


def _normalize(v: Numeric) -> Numeric:
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def is_exact(v: Numeric) -> bool:
    return isinstance(v, (int, Fraction))


@dataclass(frozen=True)
class VertexIndexSpec:
    """A named rule d -> h(d) on positive integer degrees.

    mode is ADDITIVE (index = sum of h over degrees, h > 0) or MULTIPLICATIVE
    (index = product of h over degrees, h > 1).
    """

    name: str
    rule: Callable[[int], Numeric]
    parameter: Numeric | None = None
    mode: str = ADDITIVE
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def value_at(self, d: int) -> Numeric:
        if d < 1:
            raise DomainError(f"{self.name}: rule defined on positive degrees, got {d}")
        v = self._cache.get(d)
        if v is None:
            v = _normalize(self.rule(d))
            if self.mode == MULTIPLICATIVE:
                if not v > 1:
                    raise DomainError(
                        f"{self.name}: multiplicative rule must exceed 1, "
                        f"got {v} at degree {d}"
                    )
            elif not v > 0:
                raise DomainError(
                    f"{self.name}: rule must be positive, got {v} at degree {d}"
                )
            self._cache[d] = v
        return v

    def display(self) -> str:
        # Fixed-name catalog entries carry their exponent implicitly.
        if self.parameter is None or self.name not in ("m1_alpha", "m2_alpha"):
            return self.name
        return f"{self.name}:{format_number(self.parameter)}"


@dataclass(frozen=True)
class EdgeIndexSpec:
    """A named symmetric rule (x, y) -> h(x, y) > 0 on positive integer degrees."""

    name: str
    rule: Callable[[int, int], Numeric]
    parameter: Numeric | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def value_at(self, x: int, y: int) -> Numeric:
        if x < 1 or y < 1:
            raise DomainError(f"{self.name}: rule defined on positive degrees")
        key = (x, y) if x <= y else (y, x)
        v = self._cache.get(key)
        if v is None:
            v = _normalize(self.rule(*key))
            if not v > 0:
                raise DomainError(
                    f"{self.name}: rule must be positive, got {v} at {key}"
                )
            self._cache[key] = v
        return v

    def display(self) -> str:
        if self.parameter is None or self.name not in ("m1_alpha", "m2_alpha"):
            return self.name
        return f"{self.name}:{format_number(self.parameter)}"


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


def eval_on_degrees(spec: VertexIndexSpec, degrees) -> Numeric:
    """Evaluate a vertex index on a degree multiset (the index depends on
    nothing else).  Exact arithmetic whenever the rule values are exact."""
    hist = Counter(degrees)
    if not hist:
        raise DomainError("empty degree multiset")
    if 0 in hist:
        raise DomainError("isolated vertex: degree 0 outside the rule domain")
    items = sorted(hist.items())
    if spec.mode == ADDITIVE:
        total: Numeric = 0
        for d, count in items:
            total = total + count * spec.value_at(d)
        return _normalize(total)
    values = {d: spec.value_at(d) for d, _ in items}
    if all(is_exact(v) for v in values.values()):
        prod: Numeric = 1
        for d, count in items:
            prod = prod * values[d] ** count
        return _normalize(prod)
    return math.exp(sum(count * math.log(float(values[d])) for d, count in items))


def eval_vertex_index(spec: VertexIndexSpec, g: Graph) -> Numeric:
    return eval_on_degrees(spec, degree_profile(g).degrees)


def eval_multiplicative_exp_log(spec: VertexIndexSpec, degrees) -> float:
    """Overflow-safe product path exp(sum log h(d)); cross-check for the exact path."""
    if spec.mode != MULTIPLICATIVE:
        raise DomainError(f"{spec.name} is not multiplicative")
    hist = Counter(degrees)
    if 0 in hist:
        raise DomainError("isolated vertex: degree 0 outside the rule domain")
    return math.exp(
        sum(c * math.log(float(spec.value_at(d))) for d, c in sorted(hist.items()))
    )


def eval_edge_index(spec: EdgeIndexSpec, g: Graph) -> Numeric:
    if not g.edges:
        raise DomainError("edge index requires a non-trivial graph (at least one edge)")
    degs = degree_profile(g).degrees
    total: Numeric = 0
    for u, v in g.sorted_edges():
        total = total + spec.value_at(degs[u], degs[v])
    return _normalize(total)


def vertex_to_edge_transform(spec: VertexIndexSpec) -> EdgeIndexSpec:
    """Rewrite an additive vertex index as an edge index:
    h_edge(x, y) = h(x)/x + h(y)/y, summed over edges, reproduces the vertex sum
    on every graph without isolated vertices."""
    if spec.mode != ADDITIVE:
        raise DomainError(f"{spec.name}: only additive vertex rules have an edge form")

    def rule(x: int, y: int) -> Numeric:
        hx, hy = spec.value_at(x), spec.value_at(y)
        tx = Fraction(hx, x) if is_exact(hx) else hx / x
        ty = Fraction(hy, y) if is_exact(hy) else hy / y
        return tx + ty

    return EdgeIndexSpec(name=f"{spec.name}@edges", rule=rule, parameter=spec.parameter)


# ---------------------------------------------------------------------------
# Monotonicity classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monotonicity:
    """Exact monotonicity of a rule on the integer interval [lo, hi].

    steps[i] is the sign of h(lo+i+1) - h(lo+i); kind is the most specific of
    constant / strictly-increasing / non-decreasing / strictly-decreasing /
    non-increasing / mixed.
    """

    kind: str
    lo: int
    hi: int
    steps: tuple[int, ...]

    @property
    def non_decreasing(self) -> bool:
        return self.kind in ("constant", "non-decreasing", "strictly-increasing")

    @property
    def non_increasing(self) -> bool:
        return self.kind in ("constant", "non-increasing", "strictly-decreasing")


def classify_monotonicity(spec: VertexIndexSpec, lo: int, hi: int) -> Monotonicity:
    if lo < 1:
        raise ValueError(f"interval must start at a positive degree, got {lo}")
    if lo > hi:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    steps = []
    for d in range(lo, hi):
        a, b = spec.value_at(d), spec.value_at(d + 1)
        steps.append(0 if a == b else (1 if b > a else -1))
    if all(s == 0 for s in steps):
        kind = "constant"
    elif all(s > 0 for s in steps):
        kind = "strictly-increasing"
    elif all(s >= 0 for s in steps):
        kind = "non-decreasing"
    elif all(s < 0 for s in steps):
        kind = "strictly-decreasing"
    elif all(s <= 0 for s in steps):
        kind = "non-increasing"
    else:
        kind = "mixed"
    return Monotonicity(kind, lo, hi, tuple(steps))


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def power_rule(p: Numeric) -> Callable[[int], Numeric]:
    """x -> x**p, exact for integer p, exp(p ln x) otherwise (x >= 1)."""
    if isinstance(p, float) and p.is_integer():
        p = int(p)
    if isinstance(p, Fraction) and p.denominator == 1:
        p = int(p)
    if isinstance(p, int):
        if p >= 0:
            return lambda x: x ** p
        return lambda x: Fraction(1, x ** (-p))
    return lambda x: math.exp(float(p) * math.log(x))


def _as_param(value) -> Numeric:
    if isinstance(value, (int, Fraction)):
        return _normalize(value)
    if isinstance(value, float):
        f = Fraction(value).limit_denominator(10 ** 6)
        return _normalize(f) if float(f) == value else value
    return Fraction(str(value))


def _m1_alpha(alpha: Numeric, name: str = "m1_alpha") -> VertexIndexSpec:
    return VertexIndexSpec(name, power_rule(2 * Fraction(alpha) if is_exact(alpha)
                                            else 2 * alpha),
                           parameter=alpha, mode=ADDITIVE)


def _m2_alpha(alpha: Numeric, name: str = "m2_alpha") -> EdgeIndexSpec:
    p = power_rule(alpha)
    return EdgeIndexSpec(name, lambda x, y: p(x * y), parameter=alpha)


#: catalog name -> (needs alpha, factory)
_CATALOG: dict = {
    "m1_alpha": (True, _m1_alpha),
    "m2_alpha": (True, _m2_alpha),
    "first_zagreb": (False, lambda: _m1_alpha(1, "first_zagreb")),
    "inverse_ID": (False, lambda: _m1_alpha(Fraction(-1, 2), "inverse_ID")),
    "forgotten": (False, lambda: _m1_alpha(Fraction(3, 2), "forgotten")),
    "second_zagreb": (False, lambda: _m2_alpha(1, "second_zagreb")),
    "randic": (False, lambda: _m2_alpha(Fraction(-1, 2), "randic")),
    "modified_zagreb": (False, lambda: _m2_alpha(-1, "modified_zagreb")),
    "pi1": (False, lambda: VertexIndexSpec("pi1", lambda x: x * x,
                                           mode=MULTIPLICATIVE)),
    "nk": (False, lambda: VertexIndexSpec("nk", lambda x: x,
                                          mode=MULTIPLICATIVE)),
    "nk_star": (False, lambda: VertexIndexSpec("nk_star", lambda x: x ** x,
                                               mode=MULTIPLICATIVE)),
}

CATALOG_NAMES = tuple(sorted(_CATALOG))


def catalog(name: str, parameter: Numeric | None = None):
    """Look up a built-in index by name; m1_alpha / m2_alpha require alpha."""
    if name not in _CATALOG:
        raise ValueError(f"unknown index {name!r}; known: {', '.join(CATALOG_NAMES)}")
    needs_alpha, factory = _CATALOG[name]
    if needs_alpha:
        if parameter is None:
            raise ValueError(f"index {name!r} requires a parameter alpha")
        return factory(_as_param(parameter))
    if parameter is not None:
        raise ValueError(f"index {name!r} takes no parameter")
    return factory()


def table_spec(values: dict[int, Numeric], name: str = "table") -> VertexIndexSpec:
    """User-supplied rule as an explicit degree -> value table.

    The table must cover every degree it will be evaluated at (1..Delta in
    practice); values must be positive.
    """
    if not values:
        raise ValueError("empty rule table")
    clean = {}
    for d, v in values.items():
        if d < 1:
            raise ValueError(f"table degree must be positive, got {d}")
        v = _normalize(Fraction(v) if not isinstance(v, float) else v)
        if not v > 0:
            raise ValueError(f"table value at degree {d} must be positive, got {v}")
        clean[int(d)] = v

    def rule(d: int) -> Numeric:
        if d not in clean:
            raise DomainError(f"{name}: no table entry for degree {d}")
        return clean[d]

    return VertexIndexSpec(name, rule, mode=ADDITIVE)


def parse_index_spec(text: str):
    """Parse a CLI index string: "randic", "m1_alpha:-0.5", or
    "table:1=1,2=1/2,3=0.25" (degree=value pairs, exact rationals)."""
    text = text.strip()
    if text.startswith("table:"):
        body = text[len("table:"):]
        pairs = {}
        for item in body.split(","):
            if "=" not in item:
                raise ValueError(f"bad table entry {item!r}; expected degree=value")
            d_str, v_str = item.split("=", 1)
            try:
                d = int(d_str)
                v = Fraction(v_str)
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"bad table entry {item!r}") from None
            pairs[d] = v
        return table_spec(pairs)
    if ":" in text:
        name, _, param = text.partition(":")
        try:
            alpha = Fraction(param)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad parameter {param!r} in index {text!r}") from None
        return catalog(name, alpha)
    return catalog(text)


# ---------------------------------------------------------------------------
# Value formatting (12 significant digits, exact integers verbatim)
# ---------------------------------------------------------------------------


def format_number(v: Numeric) -> str:
    v = _normalize(v)
    if isinstance(v, int):
        return str(v)
    return f"{float(v):.12g}"


def exact_string(v: Numeric) -> str | None:
    """Exact rational rendering ("7/3") for non-integer exact values, else None."""
    v = _normalize(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return None


def to_json_number(v: Numeric):
    v = _normalize(v)
    if isinstance(v, int):
        return v
    return float(f"{float(v):.12g}")
