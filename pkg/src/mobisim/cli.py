"""Command-line front end.

Subcommands: dist, matrix, cluster, casestudy, gen. Exit codes: 0 on
success, 2 for usage errors (argparse), 3 for data or precondition errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from . import casestudy
from .clustering import (
    MEASURES,
    SIMILARITY_MEASURES,
    build_matrix,
    kmedoids,
    resolve_measure,
)
from .errors import DomainError
from .graph import CellGraph, load_graph
from .measures import Weights
from .patterns import MobilityPattern, format_trace, load_trace, make_pattern


@dataclass(frozen=True)
class RunConfig:
    measure: str = "composite"
    weights: Weights | None = None
    graph_path: str | None = None
    trace_path: str | None = None
    out_path: str | None = None
    seed: int = 0
    k: int = 1


def _config(args: argparse.Namespace) -> RunConfig:
    measure = getattr(args, "measure", "composite")
    weights = None
    if measure in ("composite", "tiakas-total"):
        weights = Weights(args.wspace, args.wtime)
    return RunConfig(
        measure=measure,
        weights=weights,
        graph_path=getattr(args, "graph", None),
        trace_path=getattr(args, "trace", None),
        out_path=getattr(args, "out", None),
        seed=getattr(args, "seed", 0),
        k=getattr(args, "k", 1),
    )


def _graph(config: RunConfig) -> CellGraph | None:
    return load_graph(config.graph_path) if config.graph_path else None


def _trace(config: RunConfig) -> dict[str, MobilityPattern]:
    if not config.trace_path:
        raise DomainError("a trace file is required (--trace)")
    return load_trace(config.trace_path)


def _emit(text: str, out_path: str | None) -> str:
    """Write to the output file when given, else hand back for stdout."""
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        return ""
    return text


def cmd_dist(config: RunConfig, id_a: str, id_b: str) -> str:
    patterns = _trace(config)
    for pid in (id_a, id_b):
        if pid not in patterns:
            raise DomainError(f"pattern id {pid!r} not in trace")
    fn = resolve_measure(config.measure, graph=_graph(config), weights=config.weights)
    return f"{fn(patterns[id_a], patterns[id_b]):.6f}"


def _matrix_text(config: RunConfig) -> str:
    patterns = _trace(config)
    ids = list(patterns)
    m = build_matrix(
        list(patterns.values()),
        config.measure,
        graph=_graph(config),
        weights=config.weights,
        ids=ids,
    )
    lines = ["id," + ",".join(ids)]
    for i, pid in enumerate(ids):
        row = ",".join(f"{m.values[i, j]:.6f}" for j in range(m.n))
        lines.append(f"{pid},{row}")
    return "\n".join(lines) + "\n"


def cmd_matrix(config: RunConfig) -> str:
    return _emit(_matrix_text(config), config.out_path)


def cmd_cluster(config: RunConfig) -> str:
    if config.measure in SIMILARITY_MEASURES:
        raise DomainError(
            f"measure {config.measure!r} is a similarity; "
            "clustering needs a dissimilarity measure"
        )
    patterns = _trace(config)
    ids = list(patterns)
    m = build_matrix(
        list(patterns.values()),
        config.measure,
        graph=_graph(config),
        weights=config.weights,
        ids=ids,
    )
    result = kmedoids(m, config.k, seed=config.seed)
    lines = ["pattern_id,medoid_id"]
    for i, pid in enumerate(ids):
        lines.append(f"{pid},{ids[result.assignment[i]]}")
    table = "\n".join(lines) + "\n"
    written = _emit(table, config.out_path)
    summary = (
        f"medoids: {','.join(ids[i] for i in result.medoids)}\n"
        f"total cost = {result.total_cost:.6f}"
    )
    return summary if not written else written.rstrip("\n") + "\n" + summary


def cmd_casestudy() -> str:
    return casestudy.report()


def cmd_gen(
    graph_path: str,
    count: int,
    min_len: int,
    max_len: int,
    seed: int,
    out_path: str | None = None,
) -> str:
    if count < 0:
        raise DomainError(f"count must be non-negative, got {count}")
    if not 1 <= min_len <= max_len:
        raise DomainError(f"need 1 <= min-len <= max-len, got {min_len}..{max_len}")
    graph = load_graph(graph_path)
    rng = random.Random(seed)
    patterns: dict[str, MobilityPattern] = {}
    for i in range(count):
        length = rng.randint(min_len, max_len)
        slots = sorted(rng.randint(1, 11) for _ in range(length))
        cell = rng.randrange(graph.vertex_count)
        pairs = [(cell, slots[0])]
        for slot in slots[1:]:
            cell = rng.choice((cell, *graph.neighbors(cell)))
            pairs.append((cell, slot))
        patterns[f"p{i:04d}"] = make_pattern(pairs)
    return _emit(format_trace(patterns), out_path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobisim",
        description="Spatial-temporal dissimilarity toolkit for cellular mobility traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_measure_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--measure", choices=MEASURES, default="composite")
        p.add_argument("--wspace", type=float, default=0.5)
        p.add_argument("--wtime", type=float, default=0.5)
        p.add_argument("--graph", help="cell graph file (tiakas measures)")

    p_dist = sub.add_parser("dist", help="measure one pattern pair")
    p_dist.add_argument("id_a")
    p_dist.add_argument("id_b")
    p_dist.add_argument("--trace", required=True)
    add_measure_opts(p_dist)

    p_matrix = sub.add_parser("matrix", help="pairwise measure table")
    p_matrix.add_argument("--trace", required=True)
    p_matrix.add_argument("--out")
    add_measure_opts(p_matrix)

    p_cluster = sub.add_parser("cluster", help="k-medoids over a trace")
    p_cluster.add_argument("--trace", required=True)
    p_cluster.add_argument("--k", type=int, required=True)
    p_cluster.add_argument("--seed", type=int, default=0)
    p_cluster.add_argument("--out")
    add_measure_opts(p_cluster)

    sub.add_parser("casestudy", help="print the worked example report")

    p_gen = sub.add_parser("gen", help="generate random-walk traces")
    p_gen.add_argument("--graph", required=True)
    p_gen.add_argument("--count", type=int, required=True)
    p_gen.add_argument("--min-len", type=int, default=2, dest="min_len")
    p_gen.add_argument("--max-len", type=int, default=8, dest="max_len")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out")
    return parser


def _dispatch(args: argparse.Namespace) -> str:
    if args.command == "dist":
        return cmd_dist(_config(args), args.id_a, args.id_b)
    if args.command == "matrix":
        return cmd_matrix(_config(args))
    if args.command == "cluster":
        return cmd_cluster(_config(args))
    if args.command == "casestudy":
        return cmd_casestudy()
    return cmd_gen(
        args.graph, args.count, args.min_len, args.max_len, args.seed, args.out
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = _dispatch(args)
    except (DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    if out:
        print(out)
    return 0


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))
