"""Command-line front end.

Subcommands, one per concern:

  compute  -- evaluate an index on every graph in a graph6/edge-list file
  family   -- emit a constructed extremal family representative as graph6
  bound    -- print the closed-form lower bound record as JSON
  verify   -- run the oracle over a (delta, Delta, index) grid; JSON report
  sweep    -- same grid, bound checks only, delimited CSV output

Exit codes: 0 success, 1 verification/domain failure, 2 usage or budget error.
Output is byte-stable: values print with 12 significant digits (exact integers
without a decimal point), reports carry no timestamps, and results are merged
in a fixed task order regardless of --workers.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .bounds import (
    HypothesisError,
    lower_bound_nondecreasing,
    lower_bound_nonincreasing,
    multiplicative_lower_bound,
)
from .families import build_family, parse_family_id
from .graphs import (
    Graph6ParseError,
    GraphError,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .indices import (
    MULTIPLICATIVE,
    DomainError,
    EdgeIndexSpec,
    classify_monotonicity,
    eval_edge_index,
    eval_vertex_index,
    exact_string,
    format_number,
    parse_index_spec,
    to_json_number,
)
from .oracle import (
    MAX_ENUMERATION_VERTICES,
    MAX_VERIFY_DELTA_CAP,
    BudgetError,
    verify_bound,
    verify_edge_bound,
    verify_uniqueness,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

CSV_HEADER = "delta,Delta,index,alpha,bound,case,oracle_min,gap,verdict"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Shared option parsing
# ---------------------------------------------------------------------------


def _parse_range(text: str) -> tuple[int, int]:
    """"3" -> (3, 3); "1:4" -> (1, 4)."""
    try:
        if ":" in text:
            lo_s, hi_s = text.split(":", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO:HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _load_graphs(text: str, fmt: str):
    """Yield (line_number, Graph).  Edge-list files hold one graph."""
    stripped = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    nonblank = [(i, ln) for i, ln in stripped if ln]
    if not nonblank:
        raise UsageError("no graphs in input")
    if fmt == "auto":
        first = nonblank[0][1].split()
        looks_edgelist = len(first) == 2 and all(
            tok.lstrip("-").isdigit() for tok in first
        )
        fmt = "edgelist" if looks_edgelist else "graph6"
    if fmt == "edgelist":
        yield nonblank[0][0], parse_edge_list(text)
        return
    for i, ln in nonblank:
        try:
            yield i, parse_graph6(ln)
        except Graph6ParseError as exc:
            raise UsageError(f"line {i}: {exc}") from None


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def _cmd_compute(args) -> int:
    spec = parse_index_spec(args.index)
    text = _read_input(args.input)
    failures = 0
    for line_no, g in _load_graphs(text, args.input_format):
        try:
            if isinstance(spec, EdgeIndexSpec):
                value = eval_edge_index(spec, g)
            else:
                value = eval_vertex_index(spec, g)
        except DomainError as exc:
            print(f"error: line {line_no}: {exc}", file=sys.stderr)
            failures += 1
            continue
        print(f"{to_graph6(g)} {spec.display()} {format_number(value)}")
    return EXIT_FAIL if failures else EXIT_OK


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def _cmd_family(args) -> int:
    fam = build_family(parse_family_id(args.family_id))
    if args.format == "edgelist":
        sys.stdout.write(format_edge_list(fam.graph))
    else:
        print(to_graph6(fam.graph))
    return EXIT_OK


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------


def _bound_for(spec, delta: int, Delta: int):
    if isinstance(spec, EdgeIndexSpec):
        raise UsageError(
            f"{spec.display()} is an edge index; bounds cover vertex and "
            "multiplicative indices only"
        )
    if spec.mode == MULTIPLICATIVE:
        return multiplicative_lower_bound(spec.name, delta, Delta)
    mono = classify_monotonicity(spec, delta, Delta)
    if mono.non_decreasing:
        return lower_bound_nondecreasing(spec, delta, Delta)
    if mono.non_increasing:
        return lower_bound_nonincreasing(spec, delta, Delta)
    raise HypothesisError(
        f"{spec.display()} is {mono.kind} on [{delta}, {Delta}]; no bound applies"
    )


def _cmd_bound(args) -> int:
    spec = parse_index_spec(args.index)
    result = _bound_for(spec, args.delta, args.Delta)
    doc = {
        "index": spec.display(),
        "delta": args.delta,
        "Delta": args.Delta,
        "value": to_json_number(result.value),
        "value_exact": exact_string(result.value),
        "case": result.case_label,
        "predicted_extremal": [str(f) for f in result.predicted_extremal],
        "hypotheses": result.hypotheses,
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / sweep grids
# ---------------------------------------------------------------------------


def _expand_indices(index_args: list[str], alpha_arg: str | None) -> list[str]:
    """Flatten --index/--alpha into explicit index display strings."""
    alphas = [a for a in (alpha_arg.split(",") if alpha_arg else []) if a]
    out: list[str] = []
    for entry in index_args:
        entry = entry.strip()
        if entry in ("m1_alpha", "m2_alpha") and ":" not in entry:
            if not alphas:
                raise UsageError(f"index {entry} needs --alpha values")
            out.extend(f"{entry}:{a}" for a in alphas)
        else:
            out.append(entry)
    for display in out:
        spec = parse_index_spec(display)  # validates, raises ValueError on junk
        if isinstance(spec, EdgeIndexSpec):
            raise UsageError(
                f"{display} is an edge index; verify/sweep cover vertex and "
                "multiplicative indices only"
            )
    return out


def _skipped_result(kind: str, delta: int, Delta: int, index: str | None,
                    reason: str) -> dict:
    return {
        "kind": kind,
        "delta": delta,
        "Delta": Delta,
        "n_range": [],
        "index": index,
        "bound": None,
        "bound_exact": None,
        "case": None,
        "predicted_extremal": [],
        "hypotheses": {},
        "oracle_min": None,
        "oracle_min_exact": None,
        "gap": None,
        "argmin_graph6": [],
        "equality_families": [],
        "verdicts": {"applicability": "skipped"},
        "counts": {},
        "findings": [reason],
        "passed": True,
    }


def _execute_task(task: tuple) -> tuple[tuple, dict]:
    """Run one verification task.  Pure function of its arguments, safe to
    fan out to worker processes; the key orders results deterministically."""
    kind, delta, Delta, arg, n_max, strict = task
    key = (kind, delta, Delta, arg)
    if kind == "bound":
        spec = parse_index_spec(arg)
        if spec.mode == MULTIPLICATIVE and (delta < 2 or delta >= Delta):
            reason = (
                f"{arg}: multiplicative bounds need 2 <= delta < Delta, "
                f"got ({delta}, {Delta})"
            )
            return key, _skipped_result(kind, delta, Delta, arg, reason)
        try:
            report = verify_bound(spec, delta, Delta, n_max=n_max,
                                  strict_extremal=strict)
        except HypothesisError as exc:
            return key, _skipped_result(kind, delta, Delta, arg, str(exc))
        return key, report.to_dict()
    if kind == "edge":
        return key, verify_edge_bound(delta, Delta).to_dict()
    return key, verify_uniqueness(arg, delta, Delta).to_dict()


def _build_tasks(args, include_structural: bool) -> list[tuple]:
    d_lo, d_hi = _parse_range(args.delta)
    D_lo, D_hi = _parse_range(args.Delta)
    if d_lo < 1:
        raise UsageError("delta must be at least 1")
    if D_hi > MAX_VERIFY_DELTA_CAP:
        cost = 2 ** ((D_hi + 3) * (D_hi + 2) // 2)
        raise BudgetError(
            f"Delta={D_hi} exceeds the verification cap {MAX_VERIFY_DELTA_CAP} "
            f"(labeled enumeration at n={D_hi + 3} is about {cost:.3g} assignments)"
        )
    if D_hi > 5:
        print(f"warning: Delta up to {D_hi} is slow desk scale", file=sys.stderr)
    if args.n_max is not None and args.n_max > MAX_ENUMERATION_VERTICES:
        raise BudgetError(
            f"--n-max {args.n_max} exceeds the enumeration cap "
            f"{MAX_ENUMERATION_VERTICES}"
        )
    indices = _expand_indices(args.index or [], args.alpha)
    if not indices and not include_structural:
        raise UsageError("sweep needs at least one --index")
    pairs = [
        (d, D)
        for D in range(D_lo, D_hi + 1)
        for d in range(d_lo, d_hi + 1)
        if d <= D
    ]
    if not pairs:
        raise UsageError("empty (delta, Delta) grid")
    tasks = []
    for d, D in pairs:
        for display in indices:
            tasks.append(("bound", d, D, display, args.n_max, args.strict_extremal))
        if include_structural:
            tasks.append(("edge", d, D, "", args.n_max, args.strict_extremal))
            if d < D:
                tasks.append(("uniq", d, D, "H", args.n_max, args.strict_extremal))
                tasks.append(("uniq", d, D, "K", args.n_max, args.strict_extremal))
    return tasks


def _run_tasks(tasks: list[tuple], workers: int) -> list[dict]:
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            keyed = list(pool.map(_execute_task, tasks, chunksize=1))
    else:
        keyed = [_execute_task(t) for t in tasks]
    keyed.sort(key=lambda kv: kv[0])
    return [doc for _, doc in keyed]


def _summarize(results: list[dict]) -> tuple[int, int, int, list[str]]:
    passed = failed = skipped = 0
    failures = []
    for doc in results:
        verdicts = doc.get("verdicts", {})
        if set(verdicts.values()) == {"skipped"}:
            skipped += 1
        elif doc.get("passed"):
            passed += 1
        else:
            failed += 1
            failures.append(_task_label(doc))
    return passed, failed, skipped, failures


def _task_label(doc: dict) -> str:
    base = f"{doc['kind']}:{doc['delta']},{doc['Delta']}"
    return f"{base}:{doc['index']}" if doc.get("index") else base


def _write_output(payload: str, output: str | None):
    if output:
        with open(output, "w", encoding="ascii") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _cmd_verify(args) -> int:
    tasks = _build_tasks(args, include_structural=True)
    results = _run_tasks(tasks, args.workers)
    doc = {
        "config": {
            "delta": list(_parse_range(args.delta)),
            "Delta": list(_parse_range(args.Delta)),
            "indices": _expand_indices(args.index or [], args.alpha),
            "n_max": args.n_max,
            "strict_extremal": args.strict_extremal,
        },
        "results": results,
    }
    passed, failed, skipped, failures = _summarize(results)
    doc["summary"] = {"passed": passed, "failed": failed, "skipped": skipped}
    payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    _write_output(payload, args.output)
    checked = passed + failed
    if failed:
        print(f"FAIL {failed}/{checked}")
        for label in failures:
            print(f"  failed: {label}")
        return EXIT_FAIL
    print(f"PASS {passed}/{checked}")
    return EXIT_OK


def _csv_value(doc: dict, key: str) -> str:
    exact = doc.get(f"{key}_exact")
    raw = doc.get(key)
    if raw is None:
        return ""
    if exact and "/" not in exact:
        return exact
    if isinstance(raw, int):
        return str(raw)
    return format_number(raw)


def _cmd_sweep(args) -> int:
    tasks = _build_tasks(args, include_structural=False)
    results = _run_tasks(tasks, args.workers)
    passed, failed, skipped, failures = _summarize(results)
    if args.format == "json":
        doc = {"results": results,
               "summary": {"passed": passed, "failed": failed, "skipped": skipped}}
        payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    else:
        rows = [CSV_HEADER]
        for doc in results:
            index = doc.get("index") or ""
            name, _, alpha = index.partition(":")
            verdicts = doc.get("verdicts", {})
            if set(verdicts.values()) == {"skipped"}:
                verdict = "skipped"
            else:
                verdict = "pass" if doc.get("passed") else "fail"
            gap = doc.get("gap")
            rows.append(
                ",".join(
                    [
                        str(doc["delta"]),
                        str(doc["Delta"]),
                        name,
                        alpha,
                        _csv_value(doc, "bound"),
                        doc.get("case") or "",
                        _csv_value(doc, "oracle_min"),
                        "" if gap is None else format_number(gap),
                        verdict,
                    ]
                )
            )
        payload = "\n".join(rows) + "\n"
    _write_output(payload, args.output)
    checked = passed + failed
    if failed:
        print(f"FAIL {failed}/{checked}")
        for label in failures:
            print(f"  failed: {label}")
        return EXIT_FAIL
    print(f"PASS {passed}/{checked}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parser
# ---------------------------------------------------------------------------


def _add_grid_options(p: argparse.ArgumentParser):
    p.add_argument("--delta", required=True, help="min degree, N or LO:HI")
    p.add_argument("--Delta", required=True, help="max degree, N or LO:HI")
    p.add_argument("--index", action="append", default=[],
                   help="index name, repeatable (m1_alpha expands over --alpha)")
    p.add_argument("--alpha", default=None,
                   help="comma-separated exponents for m1_alpha/m2_alpha")
    p.add_argument("--n-max", type=int, default=None, dest="n_max",
                   help="widen the enumeration window to this vertex count")
    p.add_argument("--workers", type=int, default=1,
                   help="parallel worker processes (results are merged "
                        "deterministically)")
    p.add_argument("--output", default=None, help="write the report here")
    p.add_argument("--strict-extremal", action="store_true", dest="strict_extremal",
                   help="pin argmin classes to unique family representatives")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="varzagreb",
        description="Variable Zagreb indices: values, extremal families, "
                    "sharp lower bounds, and exhaustive certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate an index over a graph file")
    p.add_argument("input", help="graph6/edge-list file, or - for stdin")
    p.add_argument("--index", required=True,
                   help='e.g. "m1_alpha:-0.5", "randic", "table:1=1,2=1/2"')
    p.add_argument("--input-format", choices=("auto", "graph6", "edgelist"),
                   default="auto", dest="input_format")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("family", help="emit an extremal family representative")
    p.add_argument("family_id", help='e.g. "H:1,3", "G:2,5", "K1:3,5"')
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("bound", help="closed-form lower bound as JSON")
    p.add_argument("--index", required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--Delta", type=int, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("verify", help="certify bounds/uniqueness/edge counts "
                                      "by exhaustive enumeration")
    _add_grid_options(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="bound checks over a grid, CSV output")
    _add_grid_options(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BudgetError, GraphError, HypothesisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
