"""Command-line entry point: ``cliquelb <command> [flags]``.

Exit codes: 0 success or check passed, 1 check failed, 2 invalid parameters.
Structured output (JSON or CSV) goes to stdout or ``--out``; diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import congest, formats, lbgraph, reduction, twoparty
from .graph import InvalidParameterError

DEFAULT_SEED = 1

LB_STATS_HEADER = [
    "n", "seed", "k_total", "h_size", "edge_count",
    "pairs_over_threshold_a", "pairs_over_threshold_b", "expected_k",
]

COMMANDS = ("gen-lb", "verify-lb", "lb-stats", "reduce", "check-reduction", "protocol", "congest")


@dataclass
class ExperimentConfig:
    command: str
    parameters: dict = field(default_factory=dict)
    output_format: str = "json"
    seed: int = DEFAULT_SEED
    out: str | None = None
    threads: int = 1


class _Output:
    def __init__(self, path: str | None):
        self.path = path

    def emit(self, text: str) -> None:
        if self.path:
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write structured output (or the generated file) here")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="cliquelb", description="Clique-detection lower-bound toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-lb", parents=[common], help="construct a lower-bound graph")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify-lb", parents=[common], help="check the lower-bound graph conditions")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--m-bound", type=int, required=True)

    p = sub.add_parser("lb-stats", parents=[common], help="construction statistics per (n, seed)")
    p.add_argument("--n-list", type=_parse_int_list, required=True)
    p.add_argument("--seeds", type=int, default=10, help="number of seeds, starting at --seed")

    p = sub.add_parser("reduce", parents=[common], help="build the network for one DISJ instance")
    p.add_argument("--lbg", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--ell", type=int, default=4)

    p = sub.add_parser("check-reduction", parents=[common], help="compare K_ell detection with DISJ")
    p.add_argument("--lbg", required=True)
    p.add_argument("--ell", type=int, default=4)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)

    p = sub.add_parser("protocol", parents=[common], help="run the two-party clique listing protocol")
    p.add_argument("--graph", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("congest", parents=[common], help="simulate folklore clique detection")
    p.add_argument("--graph", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--bandwidth", type=int, required=True)
    p.add_argument("--partition")
    p.add_argument("--max-n", type=int, default=congest.DEFAULT_MAX_N)
    return parser


def _config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "format", "seed", "out", "threads")}
    fmt = args.format or ("csv" if args.command == "lb-stats" else "json")
    return ExperimentConfig(args.command, params, fmt, args.seed, args.out, args.threads)


def _gen_lb(cfg: ExperimentConfig) -> int:
    if not cfg.out:
        raise InvalidParameterError("gen-lb needs --out FILE")
    lbg, stats = lbgraph.construct_lower_bound_graph(cfg.parameters["n"], cfg.seed)
    lbgraph.write_lbg(lbg, cfg.out)
    sys.stdout.write(_json(asdict(stats)))
    return 0


def _verify_lb(cfg: ExperimentConfig, out: _Output) -> int:
    lbg = lbgraph.read_lbg(cfg.parameters["infile"])
    report = lbgraph.verify_lower_bound_graph(lbg, cfg.parameters["m_bound"])
    out.emit(_json(report.to_dict()))
    return 0 if report.passed else 1


def _lb_stats(cfg: ExperimentConfig, out: _Output) -> int:
    count = cfg.parameters["seeds"]
    seeds = list(range(cfg.seed, cfg.seed + count))
    rows = []
    for n in cfg.parameters["n_list"]:
        stats = lbgraph.construction_statistics(n, seeds, threads=cfg.threads)
        rows += [asdict(r) for r in stats.runs]
    if cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=LB_STATS_HEADER, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.emit(buf.getvalue())
    else:
        out.emit(_json(rows))
    return 0


def _reduce(cfg: ExperimentConfig) -> int:
    if not cfg.out:
        raise InvalidParameterError("reduce needs --out GRAPHFILE")
    lbg = lbgraph.read_lbg(cfg.parameters["lbg"])
    inst = reduction.DisjInstance.from_strings(cfg.parameters["x"], cfg.parameters["y"])
    pg = reduction.build_instance(lbg, inst, cfg.parameters["ell"])
    partition_path = cfg.out + ".partition"
    Path(cfg.out).write_text(formats.dump_graph(pg.graph))
    Path(partition_path).write_text(formats.dump_partition(pg.side_a_vertices))
    sys.stdout.write(_json({
        "graph_file": cfg.out,
        "partition_file": partition_path,
        "n_vertices": pg.n,
        "n_edges": len(pg.graph.edges),
        "cut_size": len(pg.cut_edges),
        "disj": reduction.disj(inst),
        "common_index": reduction.first_common_index(inst),
    }))
    return 0


def _check_reduction(cfg: ExperimentConfig, out: _Output) -> int:
    lbg = lbgraph.read_lbg(cfg.parameters["lbg"])
    samples = None if cfg.parameters["exhaustive"] else cfg.parameters["samples"]
    report = reduction.check_reduction(lbg, cfg.parameters["ell"], samples=samples,
                                       seed=cfg.seed, threads=cfg.threads)
    out.emit(_json(report.to_dict()))
    return 0 if report.passed else 1


def _load_partitioned(graph_path: str, partition_path: str) -> reduction.PartitionedGraph:
    g = formats.read_graph(graph_path)
    return reduction.PartitionedGraph.from_partition(g, formats.read_partition(partition_path))


def _protocol(cfg: ExperimentConfig, out: _Output) -> int:
    pg = _load_partitioned(cfg.parameters["graph"], cfg.parameters["partition"])
    result = twoparty.run_protocol(pg)
    check = twoparty.verify_protocol(pg, result)
    payload = {
        "case": result.case_taken.value,
        "phases": result.ledger.to_list(),
        "total_bits": result.ledger.total_bits,
        "budget": check.budget,
        "within_budget": check.within_budget,
        "cliques": [list(c) for c in result.cliques],
        "correct_vs_oracle": check.correct,
    }
    if cfg.parameters["json"] or cfg.out:
        out.emit(_json(payload))
    else:
        lines = [f"case: {payload['case']}"]
        lines += [f"phase {p['label']} {p['direction']}: {p['bits']} bits" for p in payload["phases"]]
        lines.append(f"total bits: {payload['total_bits']} (budget {payload['budget']})")
        lines.append(f"cliques listed: {len(result.cliques)}")
        lines.append(f"correct vs oracle: {check.correct}")
        out.emit("\n".join(lines) + "\n")
    return 0 if check.correct and check.within_budget else 1


def _congest(cfg: ExperimentConfig, out: _Output) -> int:
    g = formats.read_graph(cfg.parameters["graph"])
    net = congest.CongestNetwork(g, cfg.parameters["bandwidth"])
    trace = congest.run_folklore_detection(net, cfg.parameters["ell"], max_n=cfg.parameters["max_n"])
    payload = {
        "rounds_used": trace.rounds_used,
        "detected": bool(trace.detecting_nodes),
        "detecting_nodes": trace.detecting_nodes,
        "id_width": net.id_width,
    }
    if cfg.parameters["partition"]:
        pg = reduction.PartitionedGraph.from_partition(g, formats.read_partition(cfg.parameters["partition"]))
        by_dir = congest.measure_cut_traffic_by_direction(trace, pg)
        payload["cut_bits"] = sum(by_dir.values())
        payload["cut_bits_by_direction"] = by_dir
        payload["cut_size"] = len(pg.cut_edges)
        payload["bound_r_m_b"] = trace.rounds_used * len(pg.cut_edges) * net.bandwidth_b
    out.emit(_json(payload))
    return 0


def dispatch(cfg: ExperimentConfig) -> int:
    out = _Output(cfg.out)
    if cfg.output_format == "csv" and cfg.command != "lb-stats":
        raise InvalidParameterError(f"{cfg.command} only emits JSON")
    if cfg.threads < 1:
        raise InvalidParameterError("--threads must be >= 1")
    if cfg.command == "gen-lb":
        return _gen_lb(cfg)
    if cfg.command == "verify-lb":
        return _verify_lb(cfg, out)
    if cfg.command == "lb-stats":
        return _lb_stats(cfg, out)
    if cfg.command == "reduce":
        return _reduce(cfg)
    if cfg.command == "check-reduction":
        return _check_reduction(cfg, out)
    if cfg.command == "protocol":
        return _protocol(cfg, out)
    if cfg.command == "congest":
        return _congest(cfg, out)
    raise InvalidParameterError(f"unknown command {cfg.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return dispatch(_config_from_args(args))
    except (InvalidParameterError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
