"""Exhaustive ground truth for the bounds: enumeration, minima, uniqueness.

Two complementary enumeration routes, kept deliberately independent of the
closed-form bounds they certify:

  * labeled graph enumeration -- row-by-row backtracking over the
    upper-triangular adjacency matrix with running degree pruning (every
    vertex's final degree must still be able to land in [delta, Delta]).
    Exact and auditable; used directly on small classes, for extracting
    argmin isomorphism classes, and for uniqueness counts.
  * degree-multiset enumeration -- every additive/multiplicative vertex index
    is a function of the degree multiset alone, and a multiset occurs in the
    class iff it is graphical (Erdos-Gallai) with the right min/max.  Class
    minima are therefore computed exactly by scanning graphical multisets;
    graphs are only materialized for the argmin multisets.

The two routes are cross-checked against each other in the test suite.
Everything here is deterministic: minima, argmin canonical-form sets, and
report dictionaries do not depend on enumeration order or worker count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .bounds import (
    BoundResult,
    HypothesisError,
    edge_lower_bound,
    lower_bound_nondecreasing,
    lower_bound_nonincreasing,
    multiplicative_lower_bound,
)
from .families import (
    FamilyId,
    build_family,
    family_degree_multiset,
)
from .graphs import Graph, canonical_form, degree_profile, is_graphical, parse_graph6
from .indices import (
    MULTIPLICATIVE,
    Numeric,
    VertexIndexSpec,
    classify_monotonicity,
    eval_on_degrees,
    exact_string,
    is_exact,
    to_json_number,
)

__all__ = [
    "BudgetError",
    "ClassSpec",
    "ClassMinimum",
    "VerificationReport",
    "MAX_ENUMERATION_VERTICES",
    "enumerate_graphs",
    "count_labeled_graphs",
    "achievable_degree_multisets",
    "graphs_with_degree_multiset",
    "iso_classes_with_multiset",
    "min_index_over_class",
    "verify_bound",
    "verify_uniqueness",
    "verify_edge_bound",
]

MAX_ENUMERATION_VERTICES = 10
MAX_MULTISET_VERTICES = 12
MAX_VERIFY_DELTA_CAP = 6
REL_TOL = 1e-9


class BudgetError(RuntimeError):
    """Refused: the requested enumeration exceeds the desk-scale budget."""


@dataclass(frozen=True)
class ClassSpec:
    """The family of graphs with n vertices, min degree delta, max degree Delta."""

    n: int
    delta: int
    Delta: int
    up_to_iso: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        if not 0 <= self.delta <= self.Delta <= self.n - 1:
            raise ValueError(
                f"need 0 <= delta <= Delta <= n-1, got "
                f"({self.delta}, {self.Delta}) with n={self.n}"
            )


# ---------------------------------------------------------------------------
# Labeled enumeration (row-by-row backtracking with degree pruning)
# ---------------------------------------------------------------------------


def _window_edge_sets(n: int, lo: int, hi: int, exact: bool) -> Iterator[tuple]:
    """Yield (edges, degrees) for all labeled graphs on n vertices whose
    degrees fit in [lo, hi]; with exact=True only graphs attaining both lo
    and hi.  Row i fixes vertex i's adjacencies to higher labels, after which
    its degree is final; partial degrees are pruned against the window."""
    deg = [0] * n
    edges: list[tuple[int, int]] = []

    def rows(i: int) -> Iterator[tuple]:
        if i == n:
            if not exact or (min(deg) == lo and max(deg) == hi):
                yield tuple(edges), tuple(deg)
            return
        base = deg[i]
        avail = [j for j in range(i + 1, n) if deg[j] < hi]
        future = n - i - 2
        for c in range(max(0, lo - base), min(hi - base, len(avail)) + 1):
            deg[i] = base + c  # vertex i's degree is final after its row
            for pick in combinations(avail, c):
                for j in pick:
                    deg[j] += 1
                ok = True
                for j in range(i + 1, n):
                    if deg[j] + future < lo:
                        ok = False
                        break
                if ok:
                    edges.extend((i, j) for j in pick)
                    yield from rows(i + 1)
                    del edges[len(edges) - c:]
                for j in pick:
                    deg[j] -= 1
        deg[i] = base

    yield from rows(0)


def _check_enumeration_budget(n: int):
    if n > MAX_ENUMERATION_VERTICES:
        raise BudgetError(
            f"labeled enumeration on n={n} vertices refused: about "
            f"2^{n * (n - 1) // 2} adjacency assignments "
            f"(limit n <= {MAX_ENUMERATION_VERTICES})"
        )


def enumerate_graphs(spec: ClassSpec) -> Iterator[Graph]:
    """Every simple graph on n labeled vertices with min degree exactly delta
    and max degree exactly Delta (disconnected included); one representative
    per isomorphism class if up_to_iso."""
    _check_enumeration_budget(spec.n)
    seen: set[str] = set()
    for edges, _ in _window_edge_sets(spec.n, spec.delta, spec.Delta, exact=True):
        g = Graph(spec.n, frozenset(edges))
        if spec.up_to_iso:
            cf = canonical_form(g)
            if cf in seen:
                continue
            seen.add(cf)
        yield g


def count_labeled_graphs(n: int) -> int:
    """All labeled graphs on n vertices, no degree filtering (test hook)."""
    _check_enumeration_budget(n)
    return sum(1 for _ in _window_edge_sets(n, 0, n - 1, exact=False))


def degree_multisets_by_enumeration(n: int, delta: int, Delta: int) -> set:
    """Degree multisets observed by full labeled enumeration (test hook for
    cross-checking the graphical-multiset route)."""
    _check_enumeration_budget(n)
    out = set()
    for _, degs in _window_edge_sets(n, delta, Delta, exact=True):
        out.add(tuple(sorted(degs, reverse=True)))
    return out


# ---------------------------------------------------------------------------
# Exact-degree enumeration (for argmin extraction and uniqueness counts)
# ---------------------------------------------------------------------------


def _exact_edge_sets(degrees) -> Iterator[tuple]:
    """All labeled graphs whose degree vector equals ``degrees`` exactly."""
    n = len(degrees)
    if sum(degrees) % 2 or any(d < 0 or d > n - 1 for d in degrees):
        return
    rem = list(degrees)
    edges: list[tuple[int, int]] = []

    def rows(i: int) -> Iterator[tuple]:
        if i == n:
            yield tuple(edges)
            return
        need = rem[i]
        cands = [j for j in range(i + 1, n) if rem[j] > 0]
        if need > len(cands):
            return
        future = n - i - 2
        for pick in combinations(cands, need):
            for j in pick:
                rem[j] -= 1
            ok = True
            residual = 0
            for j in range(i + 1, n):
                rj = rem[j]
                if rj > future:
                    ok = False
                    break
                residual += rj
            if ok and residual % 2 == 0:
                edges.extend((i, j) for j in pick)
                yield from rows(i + 1)
                del edges[len(edges) - need:]
            for j in pick:
                rem[j] += 1

    yield from rows(0)


def graphs_with_degree_multiset(multiset) -> Iterator[Graph]:
    """Labeled graphs realizing the degree multiset, with degrees assigned to
    labels in non-increasing order (this reaches every isomorphism class).
    Dense multisets are enumerated through the complement."""
    degrees = tuple(sorted(multiset, reverse=True))
    n = len(degrees)
    _check_enumeration_budget(n)
    if sum(degrees) % 2:
        return
    if sum(degrees) // 2 > n * (n - 1) // 4:
        complement = tuple(n - 1 - d for d in degrees)
        all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for edges in _exact_edge_sets(complement):
            dropped = set(edges)
            yield Graph(n, frozenset(p for p in all_pairs if p not in dropped))
    else:
        for edges in _exact_edge_sets(degrees):
            yield Graph(n, frozenset(edges))


def iso_classes_with_multiset(multiset) -> tuple[int, tuple[str, ...]]:
    """(labeled realizations with sorted degrees, canonical forms of the
    isomorphism classes) for a degree multiset."""
    count = 0
    classes: set[str] = set()
    for g in graphs_with_degree_multiset(multiset):
        count += 1
        classes.add(canonical_form(g))
    return count, tuple(sorted(classes))


# ---------------------------------------------------------------------------
# Degree-multiset scan
# ---------------------------------------------------------------------------


def achievable_degree_multisets(n: int, delta: int, Delta: int) -> list[tuple[int, ...]]:
    """All degree multisets of graphs in the (n, delta, Delta) class:
    graphical multisets with min exactly delta and max exactly Delta.
    Empty classes yield an empty list (a legal outcome, not an error)."""
    if n > MAX_MULTISET_VERTICES:
        raise BudgetError(f"multiset scan on n={n} refused (limit {MAX_MULTISET_VERTICES})")
    if Delta > n - 1 or delta > Delta:
        return []
    out = []
    for combo in combinations_with_replacement(range(Delta, delta - 1, -1), n):
        if combo[0] != Delta or combo[-1] != delta:
            continue
        if sum(combo) % 2:
            continue
        if is_graphical(combo):
            out.append(combo)
    return out


# ---------------------------------------------------------------------------
# Class minima
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassMinimum:
    """Exact minimum of an index over a union of (n, delta, Delta) classes."""

    minimum: Numeric | None
    argmin_multisets: tuple[tuple[int, ...], ...]
    argmin_graph6: tuple[str, ...]
    n_range: tuple[int, int]
    counts: dict = field(default_factory=dict)


def min_index_over_class(
    spec: VertexIndexSpec,
    delta: int,
    Delta: int,
    n_range=None,
    method: str = "multiset",
    argmin_graphs: bool = True,
) -> ClassMinimum:
    """Minimum of a vertex index over all graphs with the given min/max degree
    and n in n_range (default Delta+1 .. Delta+3), plus all argmin
    isomorphism classes as canonical graph6 strings.

    method "multiset" scans graphical degree multisets (exact, fast);
    method "exhaustive" walks every labeled graph (the audit route).
    """
    if delta < 1:
        raise ValueError("index evaluation needs min degree >= 1")
    ns = list(n_range) if n_range is not None else list(range(Delta + 1, Delta + 4))
    if not ns:
        raise ValueError("empty n_range")
    best: Numeric | None = None
    argmins: list[tuple[int, ...]] = []
    counts = {"multisets_scanned": 0, "graphs_enumerated": 0}

    if method == "multiset":
        for n in ns:
            for ms in achievable_degree_multisets(n, delta, Delta):
                counts["multisets_scanned"] += 1
                value = eval_on_degrees(spec, ms)
                if best is None or value < best:
                    best, argmins = value, [ms]
                elif value == best and ms not in argmins:
                    argmins.append(ms)
    elif method == "exhaustive":
        seen_ms = set()
        for n in ns:
            _check_enumeration_budget(n)
            for _, degs in _window_edge_sets(n, delta, Delta, exact=True):
                counts["graphs_enumerated"] += 1
                value = eval_on_degrees(spec, degs)
                ms = tuple(sorted(degs, reverse=True))
                if best is None or value < best:
                    best, argmins, seen_ms = value, [ms], {ms}
                elif value == best and ms not in seen_ms:
                    argmins.append(ms)
                    seen_ms.add(ms)
    else:
        raise ValueError(f"unknown method {method!r}")

    canonical: list[str] = []
    if argmin_graphs and best is not None:
        all_classes: set[str] = set()
        for ms in argmins:
            realizations, classes = iso_classes_with_multiset(ms)
            counts["graphs_enumerated"] += realizations
            all_classes.update(classes)
        canonical = sorted(all_classes)
    counts["argmin_iso_classes"] = len(canonical)
    return ClassMinimum(
        minimum=best,
        argmin_multisets=tuple(sorted(argmins, reverse=True)),
        argmin_graph6=tuple(canonical),
        n_range=(min(ns), max(ns)),
        counts=counts,
    )


# ---------------------------------------------------------------------------
# Verification reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one oracle check, JSON-serializable and deterministic."""

    kind: str
    delta: int
    Delta: int
    n_range: tuple[int, int]
    index: str | None
    bound: Numeric | None
    bound_case: str | None
    predicted_extremal: tuple[str, ...]
    hypotheses: dict
    oracle_min: Numeric | None
    argmin_graph6: tuple[str, ...]
    equality_families: tuple[str, ...]
    verdicts: dict
    counts: dict
    findings: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(v != "fail" for v in self.verdicts.values())

    def to_dict(self) -> dict:
        gap = None
        if self.bound is not None and self.oracle_min is not None:
            gap = to_json_number(self.oracle_min - self.bound)
        return {
            "kind": self.kind,
            "delta": self.delta,
            "Delta": self.Delta,
            "n_range": list(self.n_range),
            "index": self.index,
            "bound": None if self.bound is None else to_json_number(self.bound),
            "bound_exact": None if self.bound is None else exact_string(self.bound),
            "case": self.bound_case,
            "predicted_extremal": list(self.predicted_extremal),
            "hypotheses": self.hypotheses,
            "oracle_min": None if self.oracle_min is None else to_json_number(self.oracle_min),
            "oracle_min_exact": None if self.oracle_min is None else exact_string(self.oracle_min),
            "gap": gap,
            "argmin_graph6": list(self.argmin_graph6),
            "equality_families": list(self.equality_families),
            "verdicts": self.verdicts,
            "counts": self.counts,
            "findings": list(self.findings),
            "passed": self.passed,
        }


def _values_close(measured: Numeric, bound: Numeric) -> bool:
    if is_exact(measured) and is_exact(bound):
        return measured == bound
    return abs(float(measured) - float(bound)) <= REL_TOL * (1 + abs(float(bound)))


def _candidate_family_ids(delta: int, Delta: int) -> list[FamilyId]:
    d, D = delta, Delta
    ids = [FamilyId("G", d, D)]
    if d < D:
        ids.append(FamilyId("H", d, D))
        if d % 2 == 0:
            ids.append(FamilyId("K", d, D))
        else:
            ids.append(FamilyId("K1", d, D))
            if d >= 3:
                ids.append(FamilyId("K2", d, D))
            if (d * D) % 2:
                ids.append(FamilyId("L", d, D))
    return ids


def _select_bound(spec: VertexIndexSpec, delta: int, Delta: int) -> BoundResult:
    if spec.mode == MULTIPLICATIVE:
        return multiplicative_lower_bound(spec.name, delta, Delta)
    mono = classify_monotonicity(spec, delta, Delta)
    if mono.non_decreasing:
        return lower_bound_nondecreasing(spec, delta, Delta)
    if mono.non_increasing:
        return lower_bound_nonincreasing(spec, delta, Delta)
    raise HypothesisError(
        f"{spec.name} is {mono.kind} on [{delta}, {Delta}]; no bound applies"
    )


def verify_bound(
    spec: VertexIndexSpec,
    delta: int,
    Delta: int,
    n_max: int | None = None,
    strict_extremal: bool = False,
) -> VerificationReport:
    """Certify one bound: compute the closed form, exhaust the class over
    n in [Delta+1, n_max or Delta+3], compare, and check the argmins against
    the predicted extremal families (when strictness hypotheses hold).

    strict_extremal additionally pins argmin isomorphism classes to the
    constructed representatives for the families backed by a uniqueness
    result (H; K with even delta; the complete graph when delta = Delta).
    """
    bound = _select_bound(spec, delta, Delta)
    hi = n_max if n_max is not None else Delta + 3
    result = min_index_over_class(spec, delta, Delta, range(Delta + 1, hi + 1))

    verdicts: dict = {}
    if result.minimum is None:
        verdicts["sharp"] = "fail"
        verdicts["lower_bound_sound"] = "fail"
    else:
        verdicts["sharp"] = "pass" if _values_close(result.minimum, bound.value) else "fail"
        sound = (
            result.minimum >= bound.value
            if is_exact(result.minimum) and is_exact(bound.value)
            else float(result.minimum)
            >= float(bound.value) - REL_TOL * (1 + abs(float(bound.value)))
        )
        verdicts["lower_bound_sound"] = "pass" if sound else "fail"

    predicted_ms = {family_degree_multiset(f) for f in bound.predicted_extremal}
    if bound.hypotheses.get("characterization_strict"):
        argmin_set = set(result.argmin_graph6)
        in_families = all(ms in predicted_ms for ms in result.argmin_multisets)
        reps_attain = all(
            canonical_form(build_family(f).graph) in argmin_set
            for f in bound.predicted_extremal
        )
        ok = in_families and reps_attain
        if ok and strict_extremal:
            # Families with a uniqueness theorem admit exactly the listed
            # representatives among the argmin classes.
            unique_reps: dict[tuple[int, ...], set[str]] = {}
            for f in bound.predicted_extremal:
                if f.kind in ("H", "K", "K1", "K2") or (
                    f.kind == "G" and f.delta == f.Delta
                ):
                    unique_reps.setdefault(family_degree_multiset(f), set()).add(
                        canonical_form(build_family(f).graph)
                    )
            for cf in result.argmin_graph6:
                ms = degree_profile(parse_graph6(cf)).multiset()
                if ms in unique_reps and cf not in unique_reps[ms]:
                    ok = False
        verdicts["characterization"] = "pass" if ok else "fail"
    else:
        verdicts["characterization"] = "skipped"

    matches = set()
    for ms in result.argmin_multisets:
        hit = [str(f) for f in _candidate_family_ids(delta, Delta)
               if family_degree_multiset(f) == ms]
        matches.update(hit if hit else [f"other:{','.join(map(str, ms))}"])

    return VerificationReport(
        kind="bound",
        delta=delta,
        Delta=Delta,
        n_range=result.n_range,
        index=spec.display(),
        bound=bound.value,
        bound_case=bound.case_label,
        predicted_extremal=tuple(str(f) for f in bound.predicted_extremal),
        hypotheses=bound.hypotheses,
        oracle_min=result.minimum,
        argmin_graph6=result.argmin_graph6,
        equality_families=tuple(sorted(matches)),
        verdicts=verdicts,
        counts=result.counts,
    )


def verify_uniqueness(kind: str, delta: int, Delta: int) -> VerificationReport:
    """Count isomorphism classes matching the H or K family degree multiset.

    Expected: H -> 1 class; K -> 1 class (even delta), 2 classes (odd
    delta >= 3).  For delta = 1 the measured count is reported as a finding
    instead of being asserted (the two-graph claim needs a w-adjacent
    deficient vertex, which cannot exist at delta = 1).
    """
    if kind not in ("H", "K"):
        raise ValueError(f"uniqueness check supports kinds H and K, got {kind!r}")
    if delta >= Delta:
        raise ValueError("uniqueness checks need delta < Delta")
    if Delta > MAX_VERIFY_DELTA_CAP:
        raise BudgetError(
            f"uniqueness check with Delta={Delta} refused (cap {MAX_VERIFY_DELTA_CAP})"
        )
    findings: list[str] = []
    if kind == "H":
        fid = FamilyId("H", delta, Delta)
        expected: tuple[str, ...] | None = (canonical_form(build_family(fid).graph),)
        family_label = str(fid)
        multiset = family_degree_multiset(fid)
    elif delta % 2 == 0:
        fid = FamilyId("K", delta, Delta)
        expected = (canonical_form(build_family(fid).graph),)
        family_label = str(fid)
        multiset = family_degree_multiset(fid)
    elif delta >= 3:
        k1 = FamilyId("K1", delta, Delta)
        k2 = FamilyId("K2", delta, Delta)
        expected = tuple(sorted((
            canonical_form(build_family(k1).graph),
            canonical_form(build_family(k2).graph),
        )))
        family_label = f"{k1}+{k2}"
        multiset = family_degree_multiset(k1)
    else:
        fid = FamilyId("K1", delta, Delta)
        expected = None
        family_label = str(fid)
        multiset = family_degree_multiset(fid)
    realizations, classes = iso_classes_with_multiset(multiset)

    verdicts: dict = {}
    if expected is None:
        verdicts["class_count"] = "reported"
        findings.append(
            f"K family with delta=1, Delta={Delta}: measured {len(classes)} "
            f"isomorphism class(es); the stated two-graph classification for odd "
            f"delta does not extend to delta=1 (no member has the deficient "
            f"vertex adjacent to the degree-1 vertex)"
        )
        verdicts["representatives"] = (
            "pass"
            if canonical_form(build_family(FamilyId("K1", delta, Delta)).graph) in classes
            else "fail"
        )
    else:
        verdicts["class_count"] = "pass" if len(classes) == len(expected) else "fail"
        verdicts["representatives"] = "pass" if tuple(sorted(expected)) == classes else "fail"

    return VerificationReport(
        kind=f"uniqueness-{kind}",
        delta=delta,
        Delta=Delta,
        n_range=(len(multiset), len(multiset)),
        index=None,
        bound=None if expected is None else len(expected),
        bound_case=f"expected-classes:{'reported' if expected is None else len(expected)}",
        predicted_extremal=(family_label,),
        hypotheses={},
        oracle_min=len(classes),
        argmin_graph6=classes,
        equality_families=(family_label,),
        verdicts=verdicts,
        counts={"labeled_realizations": realizations, "iso_classes": len(classes)},
        findings=tuple(findings),
    )


def verify_edge_bound(delta: int, Delta: int) -> VerificationReport:
    """Certify the edge-count bound m >= ceil(Delta(delta+1)/2) over every
    achievable degree multiset with n <= Delta+3, and that equality holds
    exactly on the G family multiset."""
    if delta < 1 or Delta < delta:
        raise ValueError(f"need 1 <= delta <= Delta, got ({delta}, {Delta})")
    if Delta > MAX_VERIFY_DELTA_CAP:
        raise BudgetError(
            f"edge-bound check with Delta={Delta} refused (cap {MAX_VERIFY_DELTA_CAP})"
        )
    bound = edge_lower_bound(delta, Delta)
    gid = FamilyId("G", delta, Delta)
    g_multiset = family_degree_multiset(gid)
    scanned = 0
    violations = 0
    equality_multisets = []
    min_edges: int | None = None
    for n in range(Delta + 1, Delta + 4):
        for ms in achievable_degree_multisets(n, delta, Delta):
            scanned += 1
            m = sum(ms) // 2
            if min_edges is None or m < min_edges:
                min_edges = m
            if m < bound:
                violations += 1
            if m == bound:
                equality_multisets.append(ms)
    verdicts = {
        "bound_holds": "pass" if violations == 0 else "fail",
        "minimum_attained": "pass" if min_edges == bound else "fail",
        "equality_iff_G": "pass" if equality_multisets == [g_multiset] else "fail",
    }
    return VerificationReport(
        kind="edge-bound",
        delta=delta,
        Delta=Delta,
        n_range=(Delta + 1, Delta + 3),
        index=None,
        bound=bound,
        bound_case="edges/even" if Delta * (delta + 1) % 2 == 0 else "edges/odd",
        predicted_extremal=(str(gid),),
        hypotheses={},
        oracle_min=min_edges,
        argmin_graph6=(canonical_form(build_family(gid).graph),),
        equality_families=(str(gid),),
        verdicts=verdicts,
        counts={"multisets_scanned": scanned},
    )
