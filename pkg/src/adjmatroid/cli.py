"""Command line interface: graph ingestion, matroid and polynomial queries,
4-regular pipelines, and the theorem verification runner."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .adjacency_matroid import adjacency_matroid, contract_via_lc, trio, tripartition_report
from .binary_matroid import BinaryMatroid
from .delta_matroid import from_graph as delta_from_graph
from .four_regular import (
    HalfEdgeGraph,
    file_order_partition,
    realize_touch_graph,
    touch_graph,
)
from .gf2 import BitMatrix, symmetrize_nullspace
from .graph import LoopedSimpleGraph, MultiGraph, as_multigraph
from .graphtext import GraphParseError, graph_to_json, parse_graph, render_graph
from .polynomials import (
    interlace_subset,
    lambda_leading,
    tutte_subset,
)
from .verify import SUITE_NAMES, run_suites


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_simple_graph(args: argparse.Namespace) -> LoopedSimpleGraph:
    g = parse_graph(_read_input(args.input))
    if isinstance(g, MultiGraph):
        print("warning: multigraph input collapsed to a looped simple graph", file=sys.stderr)
        return g.simplify()
    return g


def _load_multigraph(args: argparse.Namespace) -> MultiGraph:
    return as_multigraph(parse_graph(_read_input(args.input)))


def _emit(args: argparse.Namespace, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _sorted_circuits(m: BinaryMatroid) -> list[list[str]]:
    return sorted([sorted(c) for c in m.circuits()], key=lambda c: (len(c), c))


def _circuit_text(circuits: list[list[str]]) -> str:
    if not circuits:
        return "(none)"
    return "\n".join("{" + " ".join(c) + "}" for c in circuits)


def cmd_info(args: argparse.Namespace) -> int:
    g = _load_simple_graph(args)
    m = adjacency_matroid(g)
    payload = {
        "vertices": list(g.labels),
        "loops": list(g.loop_labels()),
        "edges": [[u, v] for u, v in g.edge_pairs()],
        "rank": m.rank,
        "nullity": m.nullity,
        "circuits": len(m.circuits()),
    }
    text = "\n".join(
        [
            f"vertices: {len(g.labels)} ({' '.join(g.labels) or 'none'})",
            f"loops: {' '.join(g.loop_labels()) or '(none)'}",
            f"edges: {len(g.edge_pairs())}",
            f"matroid rank: {m.rank}",
            f"matroid nullity: {m.nullity}",
            f"matroid circuits: {len(m.circuits())}",
        ]
    )
    _emit(args, text, payload)
    return 0


def cmd_circuits(args: argparse.Namespace) -> int:
    g = _load_simple_graph(args)
    circuits = _sorted_circuits(adjacency_matroid(g))
    _emit(args, _circuit_text(circuits), circuits)
    return 0


def cmd_minor(args: argparse.Namespace) -> int:
    g = _load_simple_graph(args)
    if (args.delete is None) == (args.contract is None):
        raise ValueError("minor needs exactly one of --delete or --contract")
    if args.delete is not None:
        result = adjacency_matroid(g).delete(args.delete)
        circuits = _sorted_circuits(result)
        _emit(args, _circuit_text(circuits), {"circuits": circuits})
        return 0
    derivation = contract_via_lc(g, args.contract)
    circuits = _sorted_circuits(derivation.result)
    payload = {
        "circuits": circuits,
        "lc_sequence": list(derivation.lc_sequence),
        "witness": graph_to_json(derivation.witness_graph),
    }
    text = "\n".join(
        [
            _circuit_text(circuits),
            "lc sequence: " + (" ".join(derivation.lc_sequence) or "(empty)"),
            "witness graph:",
            render_graph(derivation.witness_graph).rstrip(),
        ]
    )
    _emit(args, text, payload)
    return 0


def cmd_tripartition(args: argparse.Namespace) -> int:
    g = _load_simple_graph(args)
    report = tripartition_report(g)
    payload = {v: c.tag for v, c in report.items()}
    text = "\n".join(f"{v}: {c.tag}" for v, c in report.items())
    _emit(args, text, payload)
    return 0


def cmd_trio(args: argparse.Namespace) -> int:
    g = _load_simple_graph(args)
    if not args.vertex:
        raise ValueError("trio needs --vertex")
    t = trio(g, args.vertex)
    payload = {"equal": list(t.equal_pair), "odd": t.odd_one, "nullity": t.nullity}
    text = (
        f"equal: {t.equal_pair[0]} {t.equal_pair[1]}\n"
        f"odd: {t.odd_one}\n"
        f"shared nullity: {t.nullity}"
    )
    _emit(args, text, payload)
    return 0


def _cmd_polynomial(args: argparse.Namespace, which: str) -> int:
    g = _load_simple_graph(args)
    if which == "interlace":
        poly = interlace_subset(g)
    elif which == "tutte":
        poly = tutte_subset(adjacency_matroid(g))
    else:
        poly = lambda_leading(adjacency_matroid(g))
    _emit(args, poly.to_text(), poly.to_json_terms())
    return 0


def cmd_delta(args: argparse.Namespace) -> int:
    g = _load_simple_graph(args)
    d = delta_from_graph(g)
    members = [list(s) for s in d.member_sets()]
    text = "\n".join("{" + " ".join(s) + "}" for s in d.member_sets()) or "(empty)"
    _emit(args, text, {"ground": list(d.ground), "family": members})
    return 0


def cmd_touchgraph(args: argparse.Namespace) -> int:
    mg = _load_multigraph(args)
    f = HalfEdgeGraph(mg)
    p = file_order_partition(f)
    tch = touch_graph(p)
    _emit(args, render_graph(tch).rstrip(), graph_to_json(tch))
    return 0


def cmd_realize(args: argparse.Namespace) -> int:
    g = parse_graph(_read_input(args.input))
    realization = realize_touch_graph(g)
    f_graph = realization.f.graph
    if args.format == "json":
        payload = graph_to_json(f_graph)
        payload["circuits"] = [
            sorted(f_graph.edge_labels[h >> 1] for h in circuit)
            for circuit in realization.partition.circuits
        ]
        print(json.dumps(payload, sort_keys=True))
        return 0
    lines = [render_graph(f_graph).rstrip()]
    for circuit in realization.partition.circuits:
        labels = " ".join(f_graph.edge_labels[h >> 1] for h in circuit)
        lines.append(f"# circuit: {labels}")
    print("\n".join(lines))
    return 0


def cmd_symmetrize(args: argparse.Namespace) -> int:
    rows = []
    for line_no, raw in enumerate(_read_input(args.input).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise ValueError(f"line {line_no}: matrix rows are strings of 0 and 1")
        rows.append([int(c) for c in line])
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("matrix rows must have equal length")
    a = BitMatrix.from_rows(rows) if rows else BitMatrix.zero(0, 0)
    b = symmetrize_nullspace(a)
    labels = tuple(f"v{i}" for i in range(b.rows))
    g = LoopedSimpleGraph(labels, b)
    _emit(args, render_graph(g).rstrip(), graph_to_json(g))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suites(args.suite, args.max_n, args.trials, args.seed)
    failed = False
    if args.format == "json":
        payload = [
            {"name": r.name, "instances": r.instances, "failures": r.failures}
            for r in results
        ]
        print(json.dumps(payload, sort_keys=True))
        failed = any(r.failures for r in results)
    else:
        for r in results:
            mark = "ok  " if r.ok else "FAIL"
            print(f"{mark} {r.name} instances={r.instances}")
            for f in r.failures:
                failed = True
                print(f"     reproduce: {f}")
        failed = failed or any(not r.ok for r in results)
    return 2 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adjmatroid",
        description=(
            "Looped graphs, their adjacency matroids, delta-matroids, "
            "circuit partitions of 4-regular graphs, and interlace/Tutte "
            "polynomials over GF(2)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, needs_input: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if needs_input:
            p.add_argument("--input", required=True, help="graph file path, or - for stdin")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    add("info", cmd_info, "graph and matroid summary")
    add("circuits", cmd_circuits, "circuits of the adjacency matroid")
    minor = add("minor", cmd_minor, "matroid deletion or contraction at a vertex")
    minor.add_argument("--delete", metavar="V")
    minor.add_argument("--contract", metavar="V")
    add("tripartition", cmd_tripartition, "vertex classification by coloop evidence")
    trio_p = add("trio", cmd_trio, "compare the three vertex variants at a vertex")
    trio_p.add_argument("--vertex", metavar="V")
    add("interlace", lambda a: _cmd_polynomial(a, "interlace"), "interlace polynomial")
    add("tutte", lambda a: _cmd_polynomial(a, "tutte"), "Tutte polynomial of the adjacency matroid")
    add("lambda", lambda a: _cmd_polynomial(a, "lambda"), "leading Tutte term (y-1)^nullity")
    add("delta", cmd_delta, "nonsingular-induced-subgraph set system")
    add("touchgraph", cmd_touchgraph, "touch-graph of the file-order circuit partition")
    add("realize", cmd_realize, "4-regular graph realizing the input as a touch-graph")
    add("symmetrize", cmd_symmetrize, "symmetric matrix with the same nullspace (01-row input)")
    verify = add("verify", cmd_verify, "run the theorem property suites", needs_input=False)
    verify.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
