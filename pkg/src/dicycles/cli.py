"""Batch command-line interface.

Subcommands:
  generate    sample a random digraph to a graph file
  check       pseudorandomness / regularity / expansion witnesses
  thresholds  resilience-curve algebra (single point or CSV sweep)
  adversary   apply an edge-deletion adversary to a graph file
  find-cycle  longest-cycle search (exact, DFS heuristic, or SCC bound)
  experiment  run a seeded experiment batch from a config file
  report      render summary CSV + figures from an experiment CSV
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Optional, Sequence

from . import constructions, finders, graph, harness, pseudorandom, thresholds
from .errors import ConfigError


def _read_graph(path: str) -> graph.Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph.parse(fh.read())


def _write_graph(G: graph.Digraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(graph.serialize(G))


def _jsonable(obj):
    if dataclasses.is_dataclass(obj):
        obj = dataclasses.asdict(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _print_json(obj) -> None:
    print(json.dumps(_jsonable(obj), indent=2, sort_keys=True))


def _parse_vertex_set(spec: str) -> list[int]:
    return [int(x) for x in spec.replace(",", " ").split()]


def cmd_generate(args) -> int:
    G = graph.generate_random(args.n, args.p, args.seed)
    _write_graph(G, args.output)
    print(f"wrote {G.n} vertices, {G.m} edges to {args.output}")
    return 0


def cmd_check(args) -> int:
    G = _read_graph(args.graph)
    common = dict(mode=args.mode, trials=args.trials, seed=args.seed)
    if args.op == "witnessed-r":
        report = pseudorandom.witnessed_r(G, p=args.p, **common)
    elif args.op == "bounded":
        report = pseudorandom.is_bounded(G, args.delta, args.D, args.p, **common)
    elif args.op == "p-density":
        value = pseudorandom.p_density(
            G, _parse_vertex_set(args.U), _parse_vertex_set(args.W), args.p
        )
        report = {"p_density": value}
    elif args.op == "regular-pair":
        report = pseudorandom.regular_pair_check(
            G, _parse_vertex_set(args.U), _parse_vertex_set(args.W),
            args.delta, args.p, **common,
        )
    elif args.op == "expansion":
        report = pseudorandom.expansion_parameter(
            G, _parse_vertex_set(args.U), _parse_vertex_set(args.W), **common
        )
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.op)
    _print_json(report)
    return 0


def cmd_thresholds(args) -> int:
    if args.table:
        print("alpha,w_alpha,gamma,predicted_fraction")
        steps = args.steps
        for i in range(steps + 1):
            a = 0.95 * i / steps
            wa = float(thresholds.w(a))
            g = thresholds.gamma_for_alpha(a)
            print(f"{a:.6f},{wa:.6f},{g:.6f},{1 - a:.6f}")
        return 0
    if args.gamma is not None:
        point = thresholds.solve_alpha(args.gamma, args.tol)
    elif args.alpha is not None:
        point = thresholds.ResilienceCurvePoint(
            alpha=args.alpha,
            w_alpha=float(thresholds.w(args.alpha)),
            gamma=thresholds.gamma_for_alpha(args.alpha),
            predicted_fraction=1 - args.alpha,
        )
    else:
        print("one of --gamma or --alpha is required", file=sys.stderr)
        return 3
    _print_json(point)
    return 0


def cmd_adversary(args) -> int:
    G = _read_graph(args.graph)
    if args.strategy == "acyclic-split":
        import random

        sigma = list(range(G.n))
        if args.seed is not None:
            random.Random(args.seed).shuffle(sigma)
        g1, g2 = constructions.acyclic_split(G, sigma)
        result = g1 if g1.m >= g2.m else g2
    elif args.strategy == "layered":
        if args.alpha is None:
            print("layered strategy requires --alpha", file=sys.stderr)
            return 3
        result, partition = constructions.layered_subgraph(G, args.alpha, seed=args.seed)
        print(
            f"classes: {[len(c) for c in partition.classes]}, "
            f"max class size {partition.max_class_size}",
            file=sys.stderr,
        )
    else:  # random
        if args.keep is None:
            print("random strategy requires --keep", file=sys.stderr)
            return 3
        result = constructions.random_delete(G, args.keep, args.seed or 0)
    _write_graph(result, args.output)
    print(f"kept {result.m} of {G.m} edges -> {args.output}")
    return 0


def cmd_find_cycle(args) -> int:
    G = _read_graph(args.graph)
    if args.method == "exact":
        length, witness = finders.exact_longest_cycle(
            G, exact_limit=args.exact_limit, undirected=args.undirected
        )
    elif args.method == "dfs":
        length, witness = finders.dfs_long_cycle(G, args.seed, args.restarts)
    else:  # scc-bound
        length, witness = finders.scc_cycle_upper_bound(G), None
        print(f"scc-bound {length}")
        return 0
    print(f"length {length}")
    if witness is not None:
        print("cycle " + " ".join(map(str, witness.vertices)))
    return 0


def cmd_experiment(args) -> int:
    try:
        config = harness.load_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 3
    records = harness.run_experiment(config)
    csv_text = harness.records_to_csv(records)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    summary = harness.summarize(records)
    if args.summary:
        with open(args.summary, "w", encoding="utf-8") as fh:
            fh.write(harness.summary_to_json(summary))
    problems = harness.check_invariants(records)
    for problem in problems:
        print(f"violation: {problem}", file=sys.stderr)
    if problems or any(r.status == "error" for r in records):
        return 2
    return 0


def cmd_report(args) -> int:
    from . import report

    paths = report.render_report(args.csv, args.outdir)
    for path in paths:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dicycles", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample a random digraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="pseudorandomness witnesses")
    p.add_argument("graph")
    p.add_argument(
        "--op", required=True,
        choices=["witnessed-r", "bounded", "p-density", "regular-pair", "expansion"],
    )
    p.add_argument("--mode", choices=["exact", "sampled"], default="exact")
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--delta", type=float, default=0.5)
    p.add_argument("--D", type=float, default=1.0)
    p.add_argument("--U", default="", help="vertex list, e.g. '0 1 2'")
    p.add_argument("--W", default="", help="vertex list, e.g. '3 4 5'")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("thresholds", help="resilience-curve algebra")
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--table", action="store_true", help="emit a CSV sweep over alpha")
    p.add_argument("--steps", type=int, default=95)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("adversary", help="apply an edge-deletion adversary")
    p.add_argument("graph")
    p.add_argument(
        "--strategy", required=True, choices=["acyclic-split", "layered", "random"]
    )
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--keep", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output", "-o", required=True)
    p.set_defaults(func=cmd_adversary)

    p = sub.add_parser("find-cycle", help="longest-cycle search")
    p.add_argument("graph")
    p.add_argument("--method", required=True, choices=["exact", "dfs", "scc-bound"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--exact-limit", type=int, default=finders.DEFAULT_EXACT_LIMIT)
    p.add_argument(
        "--undirected", action="store_true",
        help="treat a symmetric graph as undirected (circumference)",
    )
    p.set_defaults(func=cmd_find_cycle)

    p = sub.add_parser("experiment", help="run a seeded experiment batch")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None, help="trial CSV path (default stdout)")
    p.add_argument("--summary", default=None, help="optional JSON summary path")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("report", help="summary table + figures from a trial CSV")
    p.add_argument("csv")
    p.add_argument("--outdir", required=True)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
