"""Command-line front end.

Every subcommand writes one JSON document to stdout (or ``--output``) and a
short human-readable summary to stderr. Exit codes:

    0  success (cordial, found, labeling verified, no counterexample)
    1  input error: unreadable file, parse error, invalid hypergraph
    2  not cordial: certificate reason, exhausted search, failed verification,
       or a counterexample found by explore-conjecture
    3  unknown: search budget ran out
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from .constructors import Verdict, construct
from .constructors.tables import dump_tables
from .generators import generate_random_hypertree
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    Matching,
    ParseError,
    PathHypergraph,
    Star,
    UniformHypertree,
    as_uniform_hypertree,
    classify,
    is_hypertree,
    loads,
    pendant_order,
    to_json,
)
from .labeling import labeling_from_json, verify
from .oracle import SearchConfig, Status, exhaustive_search

__all__ = ["main", "run", "generate_random_hypertree", "explore_conjecture"]

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_CORDIAL = 2
EXIT_UNKNOWN = 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc


def _load_hypergraph(path: str, fmt: str | None) -> Hypergraph:
    try:
        return loads(_read(path), fmt)
    except ParseError as exc:
        raise InputError(f"{path}:{exc.line}:{exc.column}: {exc.message}") from exc
    except HypergraphError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _config(args: argparse.Namespace) -> SearchConfig:
    return SearchConfig(node_budget=args.budget, parallel_width=args.workers)


def _describe(h: Hypergraph) -> dict:
    cls = classify(h)
    out: dict = {"n": h.n, "m": h.m, "class": cls.tag, "hypertree": is_hypertree(h)}
    if isinstance(cls, Matching):
        out["one_regular"] = cls.is_one_regular
        out["edge_sizes"] = list(cls.edge_sizes)
    elif isinstance(cls, Star):
        out["center"] = cls.center
        out["profile"] = list(cls.profile)
    elif isinstance(cls, PathHypergraph):
        out["edge_order"] = list(cls.edge_order)
        out["hyperpath"] = cls.is_hyperpath
    if out["hypertree"] and h.m:
        out["pendant_order"] = list(pendant_order(h))
        tree = cls if isinstance(cls, UniformHypertree) else as_uniform_hypertree(h)
        if tree is not None:
            out["uniform"] = tree.p
    return out


# ---------------------------------------------------------------------------
# subcommands


def _classify(args) -> tuple[int, dict, str]:
    h = _load_hypergraph(args.file, args.format)
    report = _describe(h)
    return EXIT_OK, report, f"{args.file}: {report['class']} (n={h.n}, m={h.m})"


def _construct(args) -> tuple[int, dict, str]:
    h = _load_hypergraph(args.file, args.format)
    try:
        decision = construct(h, _config(args))
    except HypergraphError as exc:
        raise InputError(f"{args.file}: {exc}") from exc
    report = decision.to_json()
    summary = f"{args.file}: {decision.verdict.value} via {decision.method}"
    if decision.reason is not None:
        summary += f" ({decision.reason.value})"
    code = {
        Verdict.CORDIAL: EXIT_OK,
        Verdict.NOT_CORDIAL: EXIT_NOT_CORDIAL,
        Verdict.UNKNOWN: EXIT_UNKNOWN,
    }[decision.verdict]
    return code, report, summary


def _verify(args) -> tuple[int, dict, str]:
    h = _load_hypergraph(args.file, args.format)
    try:
        labels = labeling_from_json(_read(args.labels))
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"{args.labels}: {exc}") from exc
    try:
        report = verify(h, labels)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    status = "cordial" if report.cordial else "not cordial"
    summary = f"{args.file}: labeling is {status}"
    for line in report.violations:
        summary += f"\n  {line}"
    return (EXIT_OK if report.cordial else EXIT_NOT_CORDIAL), report.to_json(), summary


def _search(args) -> tuple[int, dict, str]:
    h = _load_hypergraph(args.file, args.format)
    outcome = exhaustive_search(h, _config(args))
    report = outcome.to_json()
    summary = f"{args.file}: {outcome.status.value} after {outcome.nodes} nodes ({outcome.elapsed:.3f}s)"
    code = {Status.FOUND: EXIT_OK, Status.EXHAUSTED: EXIT_NOT_CORDIAL, Status.ABORTED: EXIT_UNKNOWN}
    return code[outcome.status], report, summary


def _dump_tables(args) -> tuple[int, dict, str]:
    tables = dump_tables()
    return EXIT_OK, tables, f"dumped tables {', '.join(tables)}"


# ---------------------------------------------------------------------------
# conjecture sweep


def _trial_instances(
    p_min: int, p_max: int, m_range: tuple[int, int], trials: int, seed: int, max_order: int | None
) -> list[tuple[int, Hypergraph]]:
    """Draw the sweep's hypertrees; a fixed seed always gives the same list."""
    rng = random.Random(seed)
    out = []
    lo, hi = m_range
    if max_order is not None:
        # fewest vertices for m edges is 1 + m * (p_min - 1)
        hi = min(hi, (max_order - 1) // (p_min - 1))
        if hi < lo:
            raise InputError(f"no hypertree with {lo}+ edges of size >= {p_min} has at most {max_order} vertices")
    while len(out) < trials:
        m = rng.randint(lo, hi)
        tree_seed = rng.getrandbits(32)
        h = generate_random_hypertree((p_min, p_max), m, tree_seed)
        if max_order is None or h.n <= max_order:
            out.append((tree_seed, h))
    return out


def _decide(args: tuple[Hypergraph, int | None, bool]) -> dict:
    h, budget, cross_check = args
    cfg = SearchConfig(node_budget=budget)
    decision = construct(h, cfg)
    out = {"verdict": decision.verdict.value, "method": decision.method}
    if decision.reason is not None:
        out["reason"] = decision.reason.value
    if cross_check:
        out["oracle"] = exhaustive_search(h, cfg).status.value
    return out


def explore_conjecture(
    p_min: int = 3,
    p_max: int = 5,
    edges: tuple[int, int] = (1, 5),
    trials: int = 100,
    seed: int = 0,
    *,
    max_order: int | None = None,
    budget: int | None = None,
    workers: int = 1,
    cross_check: bool = False,
) -> dict:
    """Label random hypertrees whose edges all have at least three vertices.

    Each instance goes through :func:`construct`, so classes with a
    construction are labeled directly and the rest fall back to exhaustive
    search. Any non-cordial verdict is reported as a counterexample. With
    ``cross_check`` every instance is also searched exhaustively and the search
    tags are tallied. The report does not contain timings, so equal arguments
    give identical output.
    """
    if p_min < 3 or p_max < p_min:
        raise InputError("edge sizes must satisfy 3 <= p-min <= p-max")
    if edges[0] < 1 or edges[1] < edges[0]:
        raise InputError("edge count range must satisfy 1 <= a <= b")
    if trials < 1:
        raise InputError("trials must be at least 1")
    instances = _trial_instances(p_min, p_max, edges, trials, seed, max_order)
    jobs = [(h, budget, cross_check) for _, h in instances]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_decide, jobs, chunksize=8))
    else:
        results = [_decide(j) for j in jobs]

    methods: dict[str, int] = {}
    oracle: dict[str, int] = {}
    counterexamples = []
    unknown = []
    for (tree_seed, h), res in zip(instances, results):
        methods[res["method"]] = methods.get(res["method"], 0) + 1
        if "oracle" in res:
            oracle[res["oracle"]] = oracle.get(res["oracle"], 0) + 1
        if res["verdict"] == Verdict.NOT_CORDIAL.value:
            counterexamples.append({"seed": tree_seed, "reason": res["reason"], "hypergraph": to_json(h)})
        elif res["verdict"] == Verdict.UNKNOWN.value:
            unknown.append({"seed": tree_seed, "hypergraph": to_json(h)})
    report = {
        "p_min": p_min,
        "p_max": p_max,
        "edges": list(edges),
        "seed": seed,
        "max_order": max_order,
        "trials": trials,
        "cordial": trials - len(counterexamples) - len(unknown),
        "max_n": max(h.n for _, h in instances),
        "methods": dict(sorted(methods.items())),
        "counterexamples": counterexamples,
        "unknown": unknown,
    }
    if cross_check:
        report["oracle"] = dict(sorted(oracle.items()))
    return report


_RANGE_RE = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$")


def _edge_range(text: str) -> tuple[int, int]:
    match = _RANGE_RE.match(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    a = int(match.group(1))
    b = int(match.group(2)) if match.group(2) else a
    return a, b


def _explore(args) -> tuple[int, dict, str]:
    report = explore_conjecture(
        args.p_min,
        args.p_max,
        args.edges,
        args.trials,
        args.seed,
        max_order=args.max_order,
        budget=args.budget,
        workers=args.workers,
        cross_check=args.cross_check,
    )
    bad = len(report["counterexamples"])
    summary = (
        f"{report['trials']} hypertrees (max n={report['max_n']}): "
        f"{report['cordial']} cordial, {bad} counterexamples, {len(report['unknown'])} unknown"
    )
    if bad:
        return EXIT_NOT_CORDIAL, report, summary
    if report["unknown"]:
        return EXIT_UNKNOWN, report, summary
    return EXIT_OK, report, summary


# ---------------------------------------------------------------------------
# argument parsing


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", metavar="PATH", help="write the JSON report here instead of stdout")
    common.add_argument("--budget", type=_non_negative, metavar="N", help="search node budget")
    common.add_argument("--workers", type=_positive, default=1, metavar="N", help="worker processes")

    reader = argparse.ArgumentParser(add_help=False)
    reader.add_argument("file", help="hypergraph file")
    reader.add_argument(
        "--format", choices=("text", "json"), help="input format (default: detect from content)"
    )

    parser = argparse.ArgumentParser(
        prog="v4cordial", description="V4-cordial labelings of hypergraphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common, reader], help="report the structural class")
    p.set_defaults(func=_classify)
    p = sub.add_parser("construct", parents=[common, reader], help="decide cordiality with a certificate")
    p.set_defaults(func=_construct)
    p = sub.add_parser("verify", parents=[common, reader], help="check a labeling")
    p.add_argument("labels", help='labeling file: {"labels": ["(x,y)", ...]}')
    p.set_defaults(func=_verify)
    p = sub.add_parser("search", parents=[common, reader], help="exhaustive search")
    p.set_defaults(func=_search)

    p = sub.add_parser("explore-conjecture", parents=[common], help="label random hypertrees with edges of size >= 3")
    p.add_argument("--p-min", type=int, default=3, help="smallest edge size")
    p.add_argument("--p-max", type=int, default=5, help="largest edge size")
    p.add_argument("--edges", type=_edge_range, default=(1, 5), metavar="a..b", help="number of edges")
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-order", type=_positive, metavar="N", help="only keep hypertrees with at most N vertices")
    p.add_argument("--cross-check", action="store_true", help="also run exhaustive search on every instance")
    p.set_defaults(func=_explore)

    p = sub.add_parser("dump-tables", parents=[common], help="print the embedded lookup tables")
    p.set_defaults(func=_dump_tables)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on bad usage; that is an input error here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        code, report, summary = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(report, indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    print(summary, file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())
