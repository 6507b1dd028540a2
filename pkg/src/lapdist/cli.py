"""Command-line front end.

Subcommands: spectrum (one graph, full report), verify (bound check over a
corpus or over all connected classes of an order), extremal (equality census
at one (n, d)), lemmas (the lemma check suites). Output is a table or a JSON
document {command, config, results, summary}; graphs appear as graph6
strings. Exit codes: 0 all checks pass, 1 mathematical violation, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import checks
from .enumeration import (
    ENUM_MAX_N,
    canonical_form,
    enumerate_connected,
    extremal_census,
)
from .families import FamilyParameterError, build, parse_spec
from .graphs import (
    Graph,
    GraphError,
    diameter,
    graph6_decode,
    is_connected,
    read_graph6_file,
)
from .spectra import (
    DEFAULT_TOL,
    integer_eigenvalue_multiplicities,
    laplacian,
    m_interval,
    numeric_spectrum,
)

USAGE_ERROR = 2
VIOLATION_ERROR = 1


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    d: int | None = None
    family: str | None = None
    graph6: str | None = None
    input: str | None = None
    mode: str = "both"
    tol: float = DEFAULT_TOL
    workers: int = 1
    fmt: str = "table"
    out: str | None = None
    lemma_id: str | None = None
    max_n: int | None = None
    trials: int = 1000
    seed: int = 42
    allow_big: bool = False

    def __post_init__(self) -> None:
        if self.tol <= 0:
            raise UsageError(f"tolerance must be positive, got {self.tol}")
        if self.workers < 1:
            raise UsageError(f"worker count must be >= 1, got {self.workers}")
        if self.mode not in ("exact", "numeric", "both"):
            raise UsageError(f"mode must be exact, numeric or both, got {self.mode!r}")


def _emit(config: RunConfig, results: list, summary: dict, lines: list[str]) -> None:
    if config.fmt == "json":
        payload = {
            "command": config.command,
            "config": {k: v for k, v in asdict(config).items() if v is not None},
            "results": results,
            "summary": summary,
        }
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = "\n".join(lines + [_summary_line(summary)]) + "\n"
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _summary_line(summary: dict) -> str:
    counts = " ".join(f"{k}={v}" for k, v in sorted(summary.get("counts", {}).items()))
    return f"summary: pass={summary['pass']} {counts}".rstrip()


def _load_single_graph(config: RunConfig) -> Graph:
    if (config.family is None) == (config.graph6 is None):
        raise UsageError("exactly one of --family or --graph6 is required")
    if config.family is not None:
        return build(parse_spec(config.family))
    return graph6_decode(config.graph6)


def cmd_spectrum(config: RunConfig) -> int:
    g = _load_single_graph(config)
    spec = numeric_spectrum(laplacian(g), config.tol)
    connected = is_connected(g)
    result: dict = {
        "graph6": canonical_form(g).decode("ascii"),
        "order": g.n,
        "edges": g.edge_count,
        "connected": connected,
        "spectrum": [round(v, 12) for v in spec.values],
        "integer_multiplicities": {
            str(z): m for z, m in sorted(integer_eigenvalue_multiplicities(g).items())
        },
    }
    lines = [
        f"graph6: {result['graph6']}",
        f"order: {g.n}  edges: {g.edge_count}  connected: {connected}",
        "spectrum: " + " ".join(f"{v:.10f}" for v in spec.values),
        "integer eigenvalue multiplicities: "
        + (
            " ".join(f"{z}^{m}" for z, m in sorted(integer_eigenvalue_multiplicities(g).items()))
            or "(none)"
        ),
    ]
    agree = True
    if connected:
        d = diameter(g)
        result["diameter"] = d
        lines.insert(2, f"diameter: {d}")
        if d >= 2:
            a, b = g.n - d + 2, g.n
            exact = m_interval(g, a, b, "exact").count
            result["interval"] = {"a": a, "b": b, "count_exact": exact}
            line = f"m[{a}, {b}]: exact={exact}"
            if config.mode != "exact":
                numeric = m_interval(g, a, b, "numeric").count
                result["interval"]["count_numeric"] = numeric
                agree = exact == numeric
                line += f" numeric={numeric}"
            lines.append(line)
    summary = {"pass": agree, "counts": {"graphs": 1}}
    _emit(config, [result], summary, lines)
    return 0 if agree else VIOLATION_ERROR


def _verify_one(args: tuple[Graph, str]) -> dict:
    g, mode = args
    verdict = checks.check_bound(g)
    row: dict = {
        "graph6": canonical_form(g).decode("ascii"),
        "n": verdict.n,
        "d": verdict.d,
        "status": verdict.status,
    }
    if verdict.m is not None:
        row["m_exact"] = verdict.m
        row["bound"] = verdict.bound
        if mode != "exact" and verdict.d >= 2:
            row["m_numeric"] = m_interval(g, verdict.n - verdict.d + 2, verdict.n, "numeric").count
    return row


def _parallel_map(func, items, workers: int):
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (workers * 8))))


def cmd_verify(config: RunConfig) -> int:
    if (config.n is None) == (config.input is None):
        raise UsageError("exactly one of --n or --input is required")
    if config.n is not None:
        if config.n > ENUM_MAX_N and not config.allow_big:
            raise UsageError(
                f"--n {config.n} needs --enable-n8 (supported beyond {ENUM_MAX_N} only up to 8)"
            )
        universe = enumerate_connected(config.n, allow_big=config.allow_big)
    else:
        universe = read_graph6_file(config.input)
        for idx, g in enumerate(universe):
            if not is_connected(g):
                raise UsageError(f"graph {idx + 1} in {config.input} is disconnected")
    rows = _parallel_map(_verify_one, [(g, config.mode) for g in universe], config.workers)
    tallies: dict[str, int] = {}
    per_nd: dict[str, dict] = {}
    mismatches = 0
    for row in rows:
        tallies[row["status"]] = tallies.get(row["status"], 0) + 1
        key = f"n={row['n']},d={row['d']}"
        bucket = per_nd.setdefault(
            key, {"n": row["n"], "d": row["d"], "classes": 0, "equality_graph6": []}
        )
        bucket["classes"] += 1
        if row["status"] == checks.EQUALITY:
            bucket["equality_graph6"].append(row["graph6"])
        if "m_numeric" in row and row["m_numeric"] != row["m_exact"]:
            mismatches += 1
    for bucket in per_nd.values():
        bucket["equality_graph6"].sort()
    violations = tallies.get(checks.VIOLATION, 0)
    ok = violations == 0 and mismatches == 0
    summary = {
        "pass": ok,
        "counts": {
            "graphs": len(rows),
            "violations": violations,
            "engine_mismatches": mismatches,
            **tallies,
        },
    }
    lines = [f"checked {len(rows)} connected graphs"]
    for key in sorted(per_nd):
        bucket = per_nd[key]
        lines.append(
            f"  {key}: classes={bucket['classes']} equality={len(bucket['equality_graph6'])}"
        )
    results = [per_nd[key] for key in sorted(per_nd)]
    _emit(config, results, summary, lines)
    return 0 if ok else VIOLATION_ERROR


def cmd_extremal(config: RunConfig) -> int:
    if config.n is None or config.d is None:
        raise UsageError("extremal requires --n and --d")
    classes = None
    if config.input is not None:
        classes = read_graph6_file(config.input)
        for idx, g in enumerate(classes):
            if g.n != config.n:
                raise UsageError(f"graph {idx + 1} in {config.input} has order {g.n}, expected {config.n}")
            if not is_connected(g):
                raise UsageError(f"graph {idx + 1} in {config.input} is disconnected")
    record = extremal_census(config.n, config.d, allow_big=config.allow_big, classes=classes)
    result = {
        "n": record.n,
        "d": record.d,
        "total_classes": record.total_classes,
        "equality_graph6": list(record.equality_graph6),
        "family_matches": [
            {"graph6": g6, "family": text} for g6, text in record.family_matches
        ],
        "unmatched_graph6": list(record.unmatched_graph6),
        "missing_specs": list(record.missing_specs),
        "violations_graph6": list(record.violations_graph6),
    }
    lines = [
        f"census n={record.n} d={record.d}: {record.total_classes} classes, "
        f"{len(record.equality_graph6)} equality",
    ]
    for g6, text in record.family_matches:
        lines.append(f"  {g6}  ->  {text}")
    for g6 in record.unmatched_graph6:
        lines.append(f"  UNMATCHED equality graph: {g6}")
    for text in record.missing_specs:
        lines.append(f"  MISSING family: {text}")
    summary = {
        "pass": record.consistent,
        "counts": {
            "classes": record.total_classes,
            "equality": len(record.equality_graph6),
            "unmatched": len(record.unmatched_graph6),
            "missing": len(record.missing_specs),
            "violations": len(record.violations_graph6),
        },
    }
    _emit(config, [result], summary, lines)
    return 0 if record.consistent else VIOLATION_ERROR


LEMMA_IDS = (
    "2.6",
    "2.7",
    "4.1",
    "4.2",
    "4.3",
    "4.4",
    "4.5",
    "weyl",
    "interlacing",
    "edge-interlacing",
    "complement",
    "max-degree",
)


def _run_lemma(lemma_id: str, config: RunConfig) -> list[checks.LemmaReport]:
    grid_max = config.max_n if config.max_n is not None else 10
    if lemma_id in ("2.6", "2.7", "4.1", "4.2", "4.3", "4.4", "4.5"):
        return checks.run_family_lemma_grid(lemma_id, grid_max)
    if lemma_id == "weyl":
        return [checks.run_weyl_suite(config.trials, config.seed)]
    if lemma_id == "interlacing":
        return [checks.run_interlacing_suite(config.trials, config.seed)]
    if lemma_id == "edge-interlacing":
        return [checks.run_edge_interlacing_exhaustive(min(grid_max, 6))]
    if lemma_id == "complement":
        return [checks.run_complement_exhaustive(min(grid_max, 7))]
    if lemma_id == "max-degree":
        return [checks.run_max_degree_exhaustive(min(grid_max, 6))]
    raise UsageError(f"unknown lemma id {lemma_id!r}; known: {', '.join(LEMMA_IDS)}")


def cmd_lemmas(config: RunConfig) -> int:
    ids = [config.lemma_id] if config.lemma_id else list(LEMMA_IDS)
    for lemma_id in ids:
        if lemma_id not in LEMMA_IDS:
            raise UsageError(f"unknown lemma id {lemma_id!r}; known: {', '.join(LEMMA_IDS)}")
    results = []
    lines = []
    failures = 0
    instances = 0
    for lemma_id in ids:
        reports = _run_lemma(lemma_id, config)
        failed = [r for r in reports if not r.passed]
        failures += len(failed)
        instances += len(reports)
        lines.append(
            f"{lemma_id}: {len(reports) - len(failed)}/{len(reports)} instances pass"
        )
        for report in reports if len(reports) == 1 else failed:
            lines.append(f"  {report.claim}: {'PASS' if report.passed else 'FAIL'} {report.details}")
        results.extend(
            {
                "lemma": r.lemma,
                "params": r.params,
                "claim": r.claim,
                "passed": r.passed,
                "details": {k: _jsonable(v) for k, v in r.details.items()},
            }
            for r in reports
        )
    ok = failures == 0
    summary = {"pass": ok, "counts": {"instances": instances, "failures": failures}}
    _emit(config, results, summary, lines)
    return 0 if ok else VIOLATION_ERROR


def _jsonable(v):
    if isinstance(v, float):
        return round(v, 12)
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lapdist",
        description="Exact verification of Laplacian eigenvalue distribution bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=("table", "json"), default="table")
        p.add_argument("--out", help="write the report to this path instead of stdout")
        p.add_argument("--workers", type=int, default=None, help="parallel workers (env LAPDIST_WORKERS)")

    p = sub.add_parser("spectrum", help="full spectrum report for one graph")
    p.add_argument("--family", help="family spec text, e.g. gndt:n=6,d=3,t=2")
    p.add_argument("--graph6", help="graph6 line")
    p.add_argument("--mode", choices=("exact", "numeric", "both"), default="both")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common(p)

    p = sub.add_parser("verify", help="bound check over connected graphs")
    p.add_argument("--n", type=int, help="check every connected class of this order")
    p.add_argument("--input", help="graph6 corpus file to check instead")
    p.add_argument("--mode", choices=("exact", "numeric", "both"), default="both")
    p.add_argument("--enable-n8", action="store_true", dest="allow_big")
    common(p)

    p = sub.add_parser("extremal", help="equality census at one (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--input", help="graph6 file holding all connected classes of order n")
    p.add_argument("--enable-n8", action="store_true", dest="allow_big")
    common(p)

    p = sub.add_parser("lemmas", help="lemma check suites")
    p.add_argument("--id", dest="lemma_id", help=f"one of: {', '.join(LEMMA_IDS)}")
    p.add_argument("--max-n", dest="max_n", type=int, help="grid cap (default 10)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    common(p)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("LAPDIST_WORKERS", "1"))
    fields = {
        "command": args.command,
        "workers": workers,
        "fmt": args.fmt,
        "out": args.out,
    }
    for name in ("n", "d", "family", "graph6", "input", "mode", "tol", "lemma_id", "max_n", "trials", "seed", "allow_big"):
        if hasattr(args, name):
            fields[name] = getattr(args, name)
    return RunConfig(**fields)


COMMANDS = {
    "spectrum": cmd_spectrum,
    "verify": cmd_verify,
    "extremal": cmd_extremal,
    "lemmas": cmd_lemmas,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        return COMMANDS[args.command](config)
    except (UsageError, FamilyParameterError, GraphError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
