"""Command line front end.

Every analysis is exposed as a subcommand over edge-list input (file or
stdin) with deterministic text or JSON output.  Vertex references in
reports always use the original labels; blocks and classes are rendered in
canonical order (labels ascending inside a set, sets ascending by first
label), so repeated runs are byte-identical apart from ``elapsed_ms``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition
violation (e.g. input not twinless strongly connected, budget exceeded).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

from .core import (Digraph, GraphError, ParseError, PreconditionError,
                   parse_edge_list, serialize)
from .partition import Partition
from .connectivity import (strongly_connected_components,
                           twinless_strongly_connected_components)
from .cuts import strong_bridges, twinless_bridges
from .blocks import (BlockSet, k_edge_twinless_blocks_bruteforce,
                     two_edge_blocks, two_edge_twinless_blocks)
from .testkit import (GeneratorConfig, oracle_two_edge_twinless_blocks,
                      random_digraph)
from . import selftest as _selftest_mod

_SCHEMA_KEYS = ("n", "m", "analysis", "algorithm", "blocks",
                "strong_bridges", "twinless_bridges", "b_s", "b_t",
                "elapsed_ms")


@dataclass
class AnalysisReport:
    """Label-based result bundle for one CLI analysis."""

    n: int
    m: int
    analysis: str
    algorithm: str
    blocks: list[list[str]] | None = None
    strong_bridges: list[list[str]] | None = None
    twinless_bridges: list[list[str]] | None = None
    b_s: int | None = None
    b_t: int | None = None
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        out = {}
        for key in _SCHEMA_KEYS:
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out

    def to_text(self) -> str:
        lines = [f"analysis: {self.analysis}",
                 f"algorithm: {self.algorithm}",
                 f"n: {self.n}",
                 f"m: {self.m}"]
        if self.blocks is not None:
            lines.append(f"blocks ({len(self.blocks)}):")
            lines.extend("  " + " ".join(b) for b in self.blocks)
        if self.strong_bridges is not None:
            lines.append(f"strong bridges ({len(self.strong_bridges)}):")
            lines.extend("  " + " ".join(e) for e in self.strong_bridges)
        if self.b_s is not None:
            lines.append(f"b_s: {self.b_s}")
        if self.twinless_bridges is not None:
            lines.append(f"twinless bridges ({len(self.twinless_bridges)}):")
            lines.extend("  " + " ".join(e) for e in self.twinless_bridges)
        if self.b_t is not None:
            lines.append(f"b_t: {self.b_t}")
        lines.append(f"elapsed_ms: {self.elapsed_ms}")
        return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", default="-", metavar="PATH",
                     help="edge-list file, or - for stdin (default)")
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--min-size", type=int, default=None, metavar="S",
                     help="hide result sets smaller than S "
                          "(default 2 for blocks, 1 for partitions)")
    sub.add_argument("--include-singletons", action="store_true",
                     help="also list vertices outside every block")
    sub.add_argument("--threads", type=int, default=1, metavar="N",
                     help="worker threads for per-bridge analysis")


def build_parser() -> _Parser:
    parser = _Parser(prog="twinblocks",
                     description="directed-graph connectivity analyses")
    subs = parser.add_subparsers(dest="command", required=True)
    for name in ("scc", "tscc", "strong-bridges", "twinless-bridges",
                 "2-edge-blocks"):
        _add_common(subs.add_parser(name))
    tetb = subs.add_parser("2etb")
    _add_common(tetb)
    tetb.add_argument("--algorithm", default="alg2-safe",
                      choices=("alg1", "alg2-safe", "alg2-faithful",
                               "oracle"))
    ketb = subs.add_parser("ketb")
    _add_common(ketb)
    ketb.add_argument("--k", type=int, required=True)
    gen = subs.add_parser("gen")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--m", type=int, required=True)
    gen.add_argument("--shape", default="any",
                     choices=("any", "strongly-connected",
                              "twinless-strongly-connected"))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--twin-density", type=float, default=0.25)
    subs.add_parser("selftest")
    return parser


def _read_graph(path: str) -> Digraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_edge_list(text)


def _sorted_arcs(g: Digraph, arc_ids) -> list[list[str]]:
    return sorted([g.labels[g.arcs[i].source], g.labels[g.arcs[i].target]]
                  for i in arc_ids)


def _partition_lists(g: Digraph, p: Partition, min_size: int) -> list[list[str]]:
    rendered = [sorted(g.labels[v] for v in c)
                for c in p.classes if len(c) >= min_size]
    return sorted(rendered)


def _block_lists(g: Digraph, bs: BlockSet, min_size: int,
                 include_singletons: bool) -> list[list[str]]:
    rendered = [sorted(g.labels[v] for v in b)
                for b in bs.blocks if len(b) >= min_size]
    if include_singletons:
        covered = bs.covered_vertices()
        rendered.extend([g.labels[v]] for v in range(g.n) if v not in covered)
    return sorted(rendered)


def _emit(report: AnalysisReport, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report.to_dict()))
    else:
        print(report.to_text())


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "selftest":
        return _selftest_mod.run_selftest()

    if args.command == "gen":
        try:
            cfg = GeneratorConfig(n_range=(args.n, args.n),
                                  m_range=(args.m, args.m),
                                  twin_density=args.twin_density,
                                  seed=args.seed, shape=args.shape)
            g = random_digraph(cfg)
        except GraphError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 3
        print(serialize(g))
        return 0

    try:
        g = _read_graph(args.input)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    threads = max(1, args.threads)
    started = time.perf_counter()
    report = AnalysisReport(n=g.n, m=g.m, analysis=args.command, algorithm="")
    try:
        if args.command == "scc":
            report.algorithm = "tarjan"
            p = strongly_connected_components(g)
            report.blocks = _partition_lists(g, p, args.min_size or 1)
        elif args.command == "tscc":
            report.algorithm = "underlying-2ecc"
            p = twinless_strongly_connected_components(g)
            report.blocks = _partition_lists(g, p, args.min_size or 1)
        elif args.command == "strong-bridges":
            report.algorithm = "per-arc-recheck"
            sb = strong_bridges(g, threads)
            report.strong_bridges = _sorted_arcs(g, sb)
            report.b_s = len(sb)
        elif args.command == "twinless-bridges":
            report.algorithm = "per-arc-recheck"
            tb = twinless_bridges(g, threads)
            report.twinless_bridges = _sorted_arcs(g, tb)
            report.b_t = len(tb)
        elif args.command == "2-edge-blocks":
            report.algorithm = "bridge-refinement"
            sb = strong_bridges(g, threads)
            bs = two_edge_blocks(g, threads)
            report.blocks = _block_lists(g, bs, args.min_size or 2,
                                         args.include_singletons)
            report.strong_bridges = _sorted_arcs(g, sb)
            report.b_s = len(sb)
        elif args.command == "2etb":
            report.algorithm = args.algorithm
            if args.algorithm == "oracle":
                bs = oracle_two_edge_twinless_blocks(g)
            else:
                bs = two_edge_twinless_blocks(g, args.algorithm, threads)
            report.blocks = _block_lists(g, bs, args.min_size or 2,
                                         args.include_singletons)
        elif args.command == "ketb":
            report.algorithm = "bruteforce"
            bs = k_edge_twinless_blocks_bruteforce(g, args.k)
            report.blocks = _block_lists(g, bs, args.min_size or 2,
                                         args.include_singletons)
        else:  # pragma: no cover
            raise AssertionError(args.command)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    report.elapsed_ms = round((time.perf_counter() - started) * 1000.0, 3)
    _emit(report, args.format)
    return 0


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
