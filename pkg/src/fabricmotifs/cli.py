"""Command line driver: load a graph, order it, detect blocks, render views.

Exit status: 0 on success, 1 on any library error (bad input file, malformed
tour, oversized exhaustive request, ...), 2 on command line misuse.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from .errors import FabricError, ParseError
from .fabric import layout, unfold
from .graphio import load_graph, save_json, sniff_format
from .matrix import adjacency, morans_i
from .patterns import PurityParams, detect
from .render import StyleConfig, render_fabric_svg, render_matrix_svg
from .seriation import export_tsplib, import_tour, order

_EMITS = ("fabric-svg", "matrix-svg", "json")
_SUFFIX = {"fabric-svg": ".fabric.svg", "matrix-svg": ".matrix.svg", "json": ".json"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fabricmotifs",
        description="Order a graph's adjacency matrix, detect noisy clique/"
        "biclique/star blocks, and render matrix and fabric views.",
    )
    p.add_argument("--input", required=True, help="graph file to read")
    p.add_argument(
        "--format",
        choices=("edgelist", "mm"),
        help="input format (default: .mtx/.mm means MatrixMarket, else edge list)",
    )
    p.add_argument("--sigma", type=float, default=0.5, help="minimum per-line fill ratio")
    p.add_argument("--tau", type=float, default=0.95, help="minimum block fill ratio")
    p.add_argument(
        "--order",
        choices=("heuristic", "identity", "given", "exhaustive"),
        default="heuristic",
        dest="order_method",
        help="vertex ordering strategy",
    )
    p.add_argument(
        "--order-file",
        help="permutation file for --order given: whitespace-separated 0-based vertices",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for the heuristic ordering")
    p.add_argument(
        "--tour-in",
        help="TSPLIB tour file; its path is used as the ordering, overriding --order",
    )
    p.add_argument(
        "--tsp-out",
        help="write the row-dissimilarity TSPLIB instance here (for external solvers)",
    )
    p.add_argument(
        "--emit",
        action="append",
        choices=_EMITS,
        help="output kind, repeatable (default: fabric-svg)",
    )
    p.add_argument("--out", help="output path, or basename when emitting several kinds")
    p.add_argument("--unit", type=int, default=12, help="pixels per matrix/fabric unit")
    p.add_argument("--labels", action="store_true", help="draw vertex labels")
    p.add_argument(
        "--dump-grid",
        action="store_true",
        help="also write the bare ordered matrix grid as <base>.grid.svg",
    )
    return p


def _read_permutation(path: str) -> list[int]:
    tokens = Path(path).read_text(encoding="utf-8").split()
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"permutation file {path}: {exc}") from None


def _base_path(args) -> Path:
    base = Path(args.out) if args.out else Path(Path(args.input).name)
    while base.suffix in (".svg", ".json", ".txt", ".mtx", ".fabric", ".matrix"):
        base = base.with_suffix("")
    return base


def _output_paths(args, emits) -> dict[str, Path]:
    if args.out and len(emits) == 1:
        return {emits[0]: Path(args.out)}
    base = _base_path(args)
    return {kind: base.with_name(base.name + _SUFFIX[kind]) for kind in emits}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order_method == "given" and not args.order_file:
        parser.error("--order given requires --order-file")
    if not logging.getLogger("fabricmotifs").handlers:
        logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)

    emits = args.emit or ["fabric-svg"]
    timings: list[tuple[str, float]] = []

    def timed(name, fn, *a, **kw):
        t0 = time.perf_counter()
        result = fn(*a, **kw)
        timings.append((name, time.perf_counter() - t0))
        return result

    try:
        fmt = args.format or sniff_format(args.input)
        data = Path(args.input).read_bytes()
        graph = timed("load", load_graph, data, fmt)

        if args.tsp_out:
            Path(args.tsp_out).write_bytes(
                export_tsplib(graph, name=Path(args.input).stem)
            )

        t0 = time.perf_counter()
        if args.tour_in:
            ordering = import_tour(Path(args.tour_in).read_bytes(), graph_size=graph.n)
            score = morans_i(adjacency(graph, ordering)) if graph.n >= 2 else 0.0
        else:
            perm = _read_permutation(args.order_file) if args.order_method == "given" else None
            result = order(graph, args.order_method, seed=args.seed, perm=perm)
            ordering, score = result.ordering, result.morans_i
        timings.append(("order", time.perf_counter() - t0))

        m = adjacency(graph, ordering)
        params = PurityParams(sigma=args.sigma, tau=args.tau)
        patterns = timed("detect", detect, m, params)
        seq = timed("unfold", unfold, m, patterns)
        lay = timed("layout", layout, seq, patterns)

        style = StyleConfig(unit=args.unit, show_labels=args.labels)
        ordered_labels = tuple(graph.label_of(v) for v in ordering)
        paths = _output_paths(args, emits)
        t0 = time.perf_counter()
        for kind in emits:
            if kind == "fabric-svg":
                payload = render_fabric_svg(lay, style, labels=ordered_labels)
            elif kind == "matrix-svg":
                payload = render_matrix_svg(m, patterns, style)
            else:
                payload = save_json(ordering, patterns)
            paths[kind].write_bytes(payload)
        if args.dump_grid:
            base = _base_path(args)
            base.with_name(base.name + ".grid.svg").write_bytes(
                render_matrix_svg(m, None, style)
            )
        timings.append(("render", time.perf_counter() - t0))
    except (FabricError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    counts = patterns.counts()
    stages = " ".join(f"{name}={dt * 1000.0:.1f}ms" for name, dt in timings)
    print(
        f"{Path(args.input).name}: n={graph.n} |E|={graph.edge_count} "
        f"I={score:.5f} cliques={counts['clique']} bicliques={counts['biclique']} "
        f"stars={counts['star']} | {stages}"
    )
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
