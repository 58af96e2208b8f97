"""Command-line front-end.

Every subcommand prints one JSON report to stdout (schema version 1,
sorted keys, so identical inputs give byte-identical output) and a short
human summary to stderr. Exit codes: 0 = decided or completed,
2 = inapplicable, 1 = usage, format, or resource error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .graphs import (
    Graph,
    GraphFormatError,
    NotConnectedError,
    contains_induced,
    distance_profile,
    format_edge_text,
    girth,
    is_connected,
    load_edge_file,
    path_graph,
    pattern_from_name,
    star_graph,
)
from .oracle import OracleBoundError
from .redblue import Colouring, colouring_from_cut, is_matching_cut
from .strategies import (
    BranchBudgetError,
    SolveConfig,
    SolveOutcome,
    find_dominating_structure_p6free,
    run_strategy,
    solve,
)
from .transforms import (
    TransformNotApplicable,
    girth_blowup,
    k22_replace,
    random_gnp,
    random_pattern_free,
    random_radius2,
)


class CliError(Exception):
    """Usage-level failure; message goes to stderr, exit code 1."""


def _load(path: str) -> tuple[Graph, tuple[int, ...]]:
    try:
        return load_edge_file(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _input_block(path: str | None, g: Graph) -> dict:
    block: dict = {"path": path, "n": g.n, "m": g.m}
    if g.n and is_connected(g):
        profile = distance_profile(g)
        block["radius"] = profile.radius
        block["diameter"] = profile.diameter
    else:
        block["radius"] = None
        block["diameter"] = None
    return block


def _certificate(g: Graph, colouring: Colouring, labels) -> dict:
    cut = [
        sorted((labels[u], labels[v]))
        for u, v in g.edges
        if colouring.is_blue(u) != colouring.is_blue(v)
    ]
    return {
        "red": sorted(labels[v] for v in colouring.red),
        "blue": sorted(labels[v] for v in colouring.blue),
        "cut_edges": sorted(cut),
    }


def _outcome_report(command, path, g, labels, outcome: SolveOutcome) -> dict:
    report = {
        "schema": 1,
        "command": command,
        "input": _input_block(path, g),
        "outcome": outcome.answer,
        "strategy": outcome.strategy,
        "trace": outcome.trace,
        "certificate": None,
        "timing_ms": None,
    }
    if outcome.answer == "yes":
        report["certificate"] = _certificate(g, outcome.colouring, labels)
    elif outcome.reason:
        report["reason"] = outcome.reason
    return report


def _emit(report: dict, args) -> None:
    print(json.dumps(report, sort_keys=True, indent=2))
    if not args.quiet:
        bits = [report["command"], str(report.get("outcome", "ok"))]
        if report.get("strategy"):
            bits.append(f"[{report['strategy']}]")
        cert = report.get("certificate")
        if cert:
            bits.append(f"cut size {len(cert['cut_edges'])}")
        print(" ".join(bits), file=sys.stderr)


_EXIT = {"yes": 0, "no": 0, "inapplicable": 2}


def _cmd_solve(args) -> int:
    g, labels = _load(args.path)
    config = SolveConfig(
        oracle_bound=args.oracle_bound,
        domination_bound=args.domination_bound,
        branch_budget=args.branch_budget,
    )
    started = time.perf_counter()
    if args.strategy == "auto":
        outcome = solve(g, config)
    else:
        outcome = run_strategy(g, args.strategy, config)
    report = _outcome_report("solve", args.path, g, labels, outcome)
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - started) * 1000, 3)
    _emit(report, args)
    return _EXIT[outcome.answer]


def _cmd_oracle(args) -> int:
    g, labels = _load(args.path)
    started = time.perf_counter()
    config = SolveConfig(oracle_bound=args.bound)
    outcome = run_strategy(g, "oracle", config)
    report = _outcome_report("oracle", args.path, g, labels, outcome)
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - started) * 1000, 3)
    _emit(report, args)
    return _EXIT[outcome.answer]


def _cmd_analyze(args) -> int:
    g, labels = _load(args.path)
    connected = g.n > 0 and is_connected(g)
    analysis: dict = {
        "connected": connected,
        "girth": girth(g),
        "min_degree": min((g.degree(v) for v in range(g.n)), default=0),
        "max_degree": max((g.degree(v) for v in range(g.n)), default=0),
        "p6_free": not contains_induced(g, path_graph(6)),
        "claw_free": not contains_induced(g, star_graph(3)),
        "radius": None,
        "diameter": None,
        "center": None,
        "dominating_structure": None,
    }
    if connected:
        profile = distance_profile(g)
        analysis["radius"] = profile.radius
        analysis["diameter"] = profile.diameter
        analysis["center"] = sorted(labels[v] for v in profile.center)
        if analysis["p6_free"]:
            structure = find_dominating_structure_p6free(g)
            if structure.kind == "cycle6":
                analysis["dominating_structure"] = {
                    "kind": "cycle6",
                    "cycle": [labels[v] for v in structure.cycle],
                }
            else:
                analysis["dominating_structure"] = {
                    "kind": "biclique",
                    "part_a": sorted(labels[v] for v in structure.part_a),
                    "part_b": sorted(labels[v] for v in structure.part_b),
                }
    report = {
        "schema": 1,
        "command": "analyze",
        "input": _input_block(args.path, g),
        "analysis": analysis,
        "timing_ms": None,
    }
    _emit(report, args)
    return 0


def _parse_pairs(text: str, what: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split("-")
        if len(parts) != 2:
            raise CliError(f"bad {what} {chunk!r}; expected u-v")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise CliError(f"bad {what} {chunk!r}; expected integers") from exc
    if not pairs:
        raise CliError(f"empty {what}")
    return pairs


def _to_internal(pairs, labels, what: str) -> list[tuple[int, int]]:
    back = {label: v for v, label in enumerate(labels)}
    try:
        return [(back[u], back[v]) for u, v in pairs]
    except KeyError as exc:
        raise CliError(f"{what} names vertex {exc.args[0]}, which is not in the graph") from exc


def _cmd_verify(args) -> int:
    g, labels = _load(args.path)
    pairs = _parse_pairs(args.cut, "cut edge")
    edges = _to_internal(pairs, labels, "--cut")
    valid = is_matching_cut(g, edges)
    report = {
        "schema": 1,
        "command": "verify",
        "input": _input_block(args.path, g),
        "cut": sorted(sorted(pair) for pair in pairs),
        "outcome": "valid" if valid else "invalid",
        "certificate": None,
        "timing_ms": None,
    }
    if valid:
        report["certificate"] = _certificate(g, colouring_from_cut(g, edges), labels)
    _emit(report, args)
    return 0 if valid else 1


def _graph_payload(g: Graph, path) -> dict:
    return {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges], "path": path}


def _write_out(g: Graph, args) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(format_edge_text(g))


def _cmd_transform(args) -> int:
    g, labels = _load(args.path)
    report: dict = {
        "schema": 1,
        "command": "transform",
        "op": args.op,
        "input": _input_block(args.path, g),
        "timing_ms": None,
    }
    if list(labels) != list(range(g.n)):
        # new vertices take fresh internal ids, so report the relabelling
        report["input_labels"] = list(labels)
    if args.op == "k22":
        if not args.edge:
            raise CliError("transform k22 requires --edge u-v")
        pairs = _parse_pairs(args.edge, "edge")
        if len(pairs) != 1:
            raise CliError("--edge takes exactly one u-v pair")
        (edge,) = _to_internal(pairs, labels, "--edge")
        if not g.has_edge(*edge):
            raise CliError(f"{pairs[0][0]}-{pairs[0][1]} is not an edge of the graph")
        out, provenance = k22_replace(g, edge)
        report["provenance"] = {
            "replaced": list(provenance["replaced"]),
            "midpoints": list(provenance["midpoints"]),
        }
    else:
        if not args.pattern:
            raise CliError("transform blowup requires --pattern (for example C5)")
        try:
            pattern = pattern_from_name(args.pattern)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        out, rounds = girth_blowup(g, pattern)
        report["pattern"] = args.pattern
        report["rounds"] = rounds
    report["output"] = _graph_payload(out, args.out)
    _write_out(out, args)
    _emit(report, args)
    return 0


def _cmd_generate(args) -> int:
    name = args.family
    try:
        if name == "gnp":
            g = random_gnp(args.n, args.p, args.seed)
        elif name == "radius2":
            g = random_radius2(args.n, args.p, args.seed)
        elif name == "pattern-free":
            if not args.avoid:
                raise CliError("generate pattern-free requires --avoid (for example P6)")
            g = random_pattern_free(args.n, args.p, pattern_from_name(args.avoid), args.seed)
        else:
            g = pattern_from_name(name)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    report = {
        "schema": 1,
        "command": "generate",
        "family": name,
        "seed": args.seed,
        "output": _graph_payload(g, args.out),
        "timing_ms": None,
    }
    _write_out(g, args)
    _emit(report, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchcut",
        description="Decide whether a connected graph has a matching cut.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--quiet", action="store_true", help="suppress the stderr summary")
        p.add_argument("--timing", action="store_true", help="include wall time in the report")

    p = sub.add_parser("solve", help="run the strategy dispatcher")
    p.add_argument("path")
    p.add_argument(
        "--strategy",
        default="auto",
        choices=["auto", "degree1", "smallcut", "radius2", "p6free", "sp3p6", "domination", "oracle"],
    )
    p.add_argument("--oracle-bound", type=int, default=SolveConfig.oracle_bound)
    p.add_argument("--domination-bound", type=int, default=SolveConfig.domination_bound)
    p.add_argument("--branch-budget", type=int, default=SolveConfig.branch_budget)
    common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("oracle", help="exhaustive bipartition search")
    p.add_argument("path")
    p.add_argument("--bound", type=int, default=SolveConfig.oracle_bound)
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("analyze", help="report metrics and detected classes")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="check a proposed matching cut")
    p.add_argument("path")
    p.add_argument("--cut", required=True, help="comma-separated u-v pairs")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("transform", help="apply an answer-preserving transform")
    p.add_argument("op", choices=["k22", "blowup"])
    p.add_argument("path")
    p.add_argument("--edge", help="edge to replace, as u-v (k22)")
    p.add_argument("--pattern", help="pattern to exclude, for example C5 (blowup)")
    p.add_argument("--out", help="write the transformed graph to this edge file")
    common(p)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("generate", help="emit a catalog or random graph")
    p.add_argument("family", help="a catalog name (P6, C5, K4, K2,3) or gnp, radius2, pattern-free")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--avoid", help="pattern name for the pattern-free family")
    p.add_argument("--out", help="write the generated graph to this edge file")
    common(p)
    p.set_defaults(func=_cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NotConnectedError, GraphFormatError, OracleBoundError,
            TransformNotApplicable, BranchBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
