"""Command-line front end.

Exit codes: 0 success, 1 domain verdict (sequence not graphical), 2 usage or
input error, 3 internal invariant breach.  ``--workers`` defaults to the
DEGSEQ_WORKERS environment variable, then to the machine's parallelism.
CSV output uses commas and newlines, no header unless ``--header``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .bench import MIN_REPS, bench, format_csv
from .edgeswap import randomize
from .errors import DegseqError, EquivalenceBreach, InternalStuck, NotGraphical
from .generator import generate
from .graph import Graph, format_edges, graph_from_edge_text
from .graphicality import check_graphical
from .metrics import compute_metrics
from .rng import STREAM_SWAP, stream
from .sequence import (
    DegreeSequence,
    parse_degree_values,
    parse_sequence,
    serialize_sequence,
)
from .synth import synth_from_graph, synth_powerlaw, synth_regular

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

SEED_BITS = 64


@dataclass
class RunConfig:
    """Normalized invocation: one subcommand plus its validated options."""

    subcommand: str
    input: str | None = None
    seed: int | None = None
    workers: int | None = None
    mode: str = "par"
    out: str | None = None
    record: str | None = None
    hist: str | None = None
    skip: tuple[str, ...] = ()
    swaps: int | None = None
    reps: int = MIN_REPS
    workers_list: list[int] = field(default_factory=list)
    header: bool = False
    verbose: bool = False
    synth_kind: str | None = None
    n: int | None = None
    gamma: float = 2.5
    dmax: int | None = None
    degree: int | None = None

    def validate(self) -> "RunConfig":
        if self.workers is not None and self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.seed is not None and not (0 <= self.seed < 2**SEED_BITS):
            raise ValueError(f"seed must be an unsigned {SEED_BITS}-bit value")
        return self


def _read(path: str) -> str:
    return Path(path).read_text()


def _write_out(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path: str) -> Graph:
    return graph_from_edge_text(_read(path))


def _workers_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker count (default: DEGSEQ_WORKERS or available parallelism)",
    )


def _mode_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", choices=("seq", "par"), default="par")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="degseq")
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", help="test whether a degree sequence is graphical")
    c.add_argument("file")
    _workers_arg(c)
    _mode_arg(c)
    c.add_argument("--verbose", action="store_true")

    g = sub.add_parser("generate", help="generate a random graph realizing a sequence")
    g.add_argument("degfile")
    g.add_argument("--seed", type=int, required=True)
    _workers_arg(g)
    _mode_arg(g)
    g.add_argument("--out", default=None)
    g.add_argument("--record", default=None)

    s = sub.add_parser("swap", help="degree-preserving edge-swap randomization")
    s.add_argument("edgefile")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--swaps", type=int, default=None)
    s.add_argument("--out", default=None)

    m = sub.add_parser("metrics", help="structural metrics of an edge list")
    m.add_argument("edgefile")
    m.add_argument("--skip", action="append", choices=("cliques",), default=[])
    m.add_argument("--hist", default=None, help="write the clustering histogram CSV here")
    _workers_arg(m)

    for target in ("eg", "gen"):
        b = sub.add_parser(
            f"bench-{target}", help=f"strong-scaling benchmark of the {target} target"
        )
        b.add_argument("input")
        b.add_argument(
            "--workers",
            default="1,2,4",
            help="comma-separated ascending worker counts starting at 1",
        )
        b.add_argument("--reps", type=int, default=MIN_REPS)
        b.add_argument("--seed", type=int, default=0)
        b.add_argument("--out", default=None)
        b.add_argument("--header", action="store_true")

    y = sub.add_parser("synth", help="write a synthetic graphical degree sequence")
    ysub = y.add_subparsers(dest="kind", required=True)
    yp = ysub.add_parser("powerlaw")
    yp.add_argument("--n", type=int, required=True)
    yp.add_argument("--gamma", type=float, default=2.5)
    yp.add_argument("--dmax", type=int, default=None)
    yp.add_argument("--seed", type=int, default=0)
    yp.add_argument("--out", default=None)
    yr = ysub.add_parser("regular")
    yr.add_argument("--n", type=int, required=True)
    yr.add_argument("--degree", type=int, required=True)
    yr.add_argument("--out", default=None)
    yg = ysub.add_parser("from-graph")
    yg.add_argument("edgefile")
    yg.add_argument("--out", default=None)
    return p


def _cmd_check(cfg: RunConfig) -> int:
    values = parse_degree_values(_read(cfg.input))
    report = check_graphical(values, mode=cfg.mode, workers=cfg.workers)
    if report.graphical:
        print(f"graphical: n={len(values)} m={int(values.sum()) // 2}")
    elif not report.parity_ok:
        print("not graphical: odd degree sum")
    else:
        print(f"not graphical: inequality k={report.failing_k} violated")
    if cfg.verbose:
        print(f"durfee {report.durfee}")
        if report.failing_k is not None:
            print(f"failing_k {report.failing_k}")
            print(f"lhs {report.lhs}")
            print(f"rhs {report.rhs}")
    return EXIT_OK if report.graphical else EXIT_DOMAIN


def _cmd_generate(cfg: RunConfig) -> int:
    values = parse_degree_values(_read(cfg.input))
    if not check_graphical(values).graphical:
        raise NotGraphical("input degree sequence is not graphical")
    seq = DegreeSequence.from_iterable(values)
    graph, record = generate(seq, seed=cfg.seed, mode=cfg.mode, workers=cfg.workers)
    _write_out(format_edges(record.trace), cfg.out)
    if cfg.record is not None:
        payload = {
            "seed": record.seed,
            "n": graph.n,
            "m": graph.m,
            "log_prob": record.log_prob,
            "shortcut_batches": record.shortcut_batches,
        }
        Path(cfg.record).write_text(json.dumps(payload) + "\n")
    return EXIT_OK


def _cmd_swap(cfg: RunConfig) -> int:
    g = _load_graph(cfg.input)
    rng = stream(cfg.seed, STREAM_SWAP)
    out, stats = randomize(g, swaps=cfg.swaps, rng=rng)
    _write_out(format_edges(sorted(out.edges)), cfg.out)
    for key, value in stats.as_dict().items():
        print(f"{key} {value}", file=sys.stderr)
    return EXIT_OK


def _format_metric(value) -> str:
    if value is None:
        return "na"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _cmd_metrics(cfg: RunConfig) -> int:
    g = _load_graph(cfg.input)
    report = compute_metrics(g, skip=cfg.skip, workers=cfg.workers)
    rows = [
        ("triangles", report.triangles),
        ("maximal_cliques", report.maximal_cliques),
        ("components", report.components),
        ("avg_shortest_path", report.avg_shortest_path),
        ("diameter", report.diameter),
        ("avg_betweenness", report.avg_betweenness),
        ("avg_closeness", report.avg_closeness),
        ("avg_clustering", report.avg_clustering),
    ]
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {_format_metric(value)}")
    if cfg.hist is not None:
        lines = [
            f"{i / 100:.2f},{int(count)}"
            for i, count in enumerate(report.clustering_histogram)
        ]
        Path(cfg.hist).write_text("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_bench(cfg: RunConfig) -> int:
    target = cfg.subcommand.removeprefix("bench-")
    seq = parse_sequence(_read(cfg.input))
    report = bench(target, seq, cfg.workers_list, reps=cfg.reps, seed=cfg.seed or 0)
    _write_out(format_csv(report, header=cfg.header), cfg.out)
    return EXIT_OK


def _cmd_synth(cfg: RunConfig) -> int:
    if cfg.synth_kind == "powerlaw":
        seq = synth_powerlaw(n=cfg.n, gamma=cfg.gamma, dmax=cfg.dmax, seed=cfg.seed or 0)
    elif cfg.synth_kind == "regular":
        seq = synth_regular(n=cfg.n, degree=cfg.degree)
    else:
        seq = synth_from_graph(_load_graph(cfg.input))
    _write_out(serialize_sequence(seq), cfg.out)
    return EXIT_OK


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(subcommand=args.cmd)
    if args.cmd == "check":
        cfg.input = args.file
        cfg.workers, cfg.mode, cfg.verbose = args.workers, args.mode, args.verbose
    elif args.cmd == "generate":
        cfg.input, cfg.seed = args.degfile, args.seed
        cfg.workers, cfg.mode = args.workers, args.mode
        cfg.out, cfg.record = args.out, args.record
    elif args.cmd == "swap":
        cfg.input, cfg.seed, cfg.swaps, cfg.out = args.edgefile, args.seed, args.swaps, args.out
    elif args.cmd == "metrics":
        cfg.input, cfg.skip = args.edgefile, tuple(args.skip)
        cfg.hist, cfg.workers = args.hist, args.workers
    elif args.cmd in ("bench-eg", "bench-gen"):
        cfg.input, cfg.seed, cfg.reps = args.input, args.seed, args.reps
        cfg.out, cfg.header = args.out, args.header
        try:
            cfg.workers_list = [int(tok) for tok in str(args.workers).split(",") if tok]
        except ValueError:
            raise ValueError(f"bad worker list: {args.workers}") from None
    elif args.cmd == "synth":
        cfg.synth_kind = args.kind
        cfg.out = args.out
        if args.kind == "from-graph":
            cfg.input = args.edgefile
        else:
            cfg.n, cfg.seed = args.n, getattr(args, "seed", 0) or 0
            if args.kind == "powerlaw":
                cfg.gamma, cfg.dmax = args.gamma, args.dmax
            else:
                cfg.degree = args.degree
    return cfg.validate()


_HANDLERS = {
    "check": _cmd_check,
    "generate": _cmd_generate,
    "swap": _cmd_swap,
    "metrics": _cmd_metrics,
    "bench-eg": _cmd_bench,
    "bench-gen": _cmd_bench,
    "synth": _cmd_synth,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return _HANDLERS[cfg.subcommand](cfg)
    except NotGraphical as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InternalStuck, EquivalenceBreach) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DegseqError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
