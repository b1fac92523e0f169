"""Command-line front end: coloring enumeration, the obstruction pipeline,
Petersen embeddings, and group machinery.

Every command prints a machine-readable JSON report (or writes it with
--out).  Reports are deterministic: identical inputs give byte-identical
reports except for the "timings" object, which is informative only.

Exit codes: 0 success (including a NotSubgraph verdict), 2 malformed input,
3 enumeration cap exceeded, 4 structural invariant violated.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import re
import sys
import time
from pathlib import Path

from . import data as bundled_data
from .coloring import EdgeColoring, enumerate_colorings
from .errors import (
    CycleCapExceeded,
    DisconnectedGraphError,
    GraphFormatError,
    GroupInvariantError,
    GroupSpecError,
    MinCayleyError,
)
from .graphs import DEFAULT_CYCLE_CAP, Graph, parse_edge_list, parse_graph6, to_dot
from .groups import (
    FiniteGroup,
    SemidirectGroup,
    cayley_digraph,
    cayley_graph,
    enumerate_minimal_generating_sets,
    parse_group_spec,
)
from .patterns import obstruction_pipeline, verdict_to_json
from .petersen import petersen_embedding, petersen_plane_scan, scan_to_csv
from .symmetry import reduce_colorings

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4

_EDGE_LIST_RE = re.compile(r"^[\s0-9-]+$")


def _read_graph(path: str, input_format: str) -> tuple[Graph, str]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from None
    digest = hashlib.sha256(raw).hexdigest()
    text = raw.decode("utf-8", errors="replace")
    if input_format == "auto":
        stripped = text.strip()
        input_format = (
            "edge-list" if stripped and _EDGE_LIST_RE.match(stripped) else "graph6"
        )
    if input_format == "edge-list":
        return parse_edge_list(text), digest
    return parse_graph6(text), digest


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _base_report(command: str, path: str | None, digest: str | None) -> dict:
    report: dict = {"command": command}
    if path is not None:
        report["input"] = {"path": str(path), "sha256": digest}
    return report


def cmd_colorings(ns: argparse.Namespace) -> int:
    g, digest = _read_graph(ns.graph, ns.input_format)
    report = _base_report("colorings", ns.graph, digest)
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    truncated = False
    if ns.reduce or ns.limit is None:
        colorings = list(enumerate_colorings(g, cycle_cap=ns.cycle_cap))
    else:
        colorings = []
        for f in enumerate_colorings(g, cycle_cap=ns.cycle_cap):
            colorings.append(f)
            if len(colorings) >= ns.limit:
                truncated = True
                break
    timings["colorings"] = time.perf_counter() - t0
    report["colorings_total"] = len(colorings)

    emitted = colorings
    if ns.reduce:
        t0 = time.perf_counter()
        emitted = reduce_colorings(g, colorings)
        timings["reduce"] = time.perf_counter() - t0
        report["colorings_reduced"] = len(emitted)
    if ns.limit is not None and len(emitted) > ns.limit:
        emitted = emitted[: ns.limit]
        truncated = True
    report["truncated"] = truncated
    report["edges"] = [list(e) for e in g.edges]
    report["timings"] = timings

    if ns.format == "dot":
        for i, f in enumerate(emitted):
            sys.stdout.write(to_dot(g, name=f"coloring{i}", edge_colors=f.colors))
        if ns.out:
            _emit(report, ns.out)
    else:
        report["colorings"] = [list(f.colors) for f in emitted]
        _emit(report, ns.out)
    return EXIT_OK


def cmd_obstruction(ns: argparse.Namespace) -> int:
    g, digest = _read_graph(ns.graph, ns.input_format)
    report = _base_report("obstruction", ns.graph, digest)
    t0 = time.perf_counter()
    verdict = obstruction_pipeline(
        g, first_witness=ns.first, cycle_cap=ns.cycle_cap, jobs=ns.jobs
    )
    elapsed = time.perf_counter() - t0
    report.update(verdict_to_json(verdict))
    report["first_witness_only"] = ns.first
    report["edges"] = [list(e) for e in g.edges]
    report["timings"] = {"pipeline": elapsed}
    _emit(report, ns.out)
    return EXIT_OK


def _petersen_scan(ns: argparse.Namespace) -> int:
    rows = petersen_plane_scan(ns.scan)
    csv_text = scan_to_csv(rows)
    if ns.out:
        Path(ns.out).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def cmd_petersen(ns: argparse.Namespace) -> int:
    if ns.scan is not None:
        return _petersen_scan(ns)
    if ns.n is None or ns.k is None:
        raise GroupSpecError("petersen needs n and k (or --scan N_MAX)")
    if math.gcd(ns.n, ns.k) != 1:
        raise GroupInvariantError(
            f"gcd({ns.n},{ns.k}) = {math.gcd(ns.n, ns.k)} != 1: the embedding "
            "construction requires coprime parameters"
        )
    t0 = time.perf_counter()
    result = petersen_embedding(ns.n, ns.k)
    elapsed = time.perf_counter() - t0
    group = result.group
    report = _base_report("petersen", None, None)
    report.update(
        {
            "n": ns.n,
            "k": ns.k,
            "r": result.r,
            "host_order": result.host_order,
            "generators": {
                "a": group.a,
                "b": group.b,
            },
            "vertex_map": list(result.embedding.vertex_map),
            "verified": True,
            "timings": {"embedding": elapsed},
        }
    )
    if ns.dot:
        Path(ns.dot).write_text(
            to_dot(
                cayley_digraph(group, result.generators),
                name=f"G_{ns.n}_{ns.k}_host",
                highlight=result.embedding.vertex_map,
            )
        )
        report["dot"] = ns.dot
    _emit(report, ns.out)
    return EXIT_OK


def _parse_connection(spec: str, group: FiniteGroup) -> list[int]:
    names = {name: i for i, name in enumerate(group.names)}
    out = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        if token in names:
            out.append(names[token])
        else:
            try:
                out.append(int(token))
            except ValueError:
                raise GroupSpecError(f"unknown element {token!r}") from None
    if not out:
        raise GroupSpecError("empty connection set")
    return out


def cmd_group(ns: argparse.Namespace) -> int:
    spec_path = Path(ns.spec)
    if spec_path.is_file():
        raw = spec_path.read_bytes()
        digest = hashlib.sha256(raw).hexdigest()
        group = parse_group_spec(raw.decode("utf-8", errors="replace"))
        report = _base_report("group", ns.spec, digest)
    else:
        group = parse_group_spec(ns.spec)
        report = _base_report("group", None, None)
        report["spec"] = ns.spec
    report["order"] = group.order
    report["abelian"] = group.is_abelian()
    if isinstance(group, SemidirectGroup):
        report["semidirect"] = {"n": group.n, "k": group.k, "r": group.r}
        report["generators"] = {"a": group.a, "b": group.b}

    if ns.minimal_sets:
        sets = sorted(
            sorted(s) for s in enumerate_minimal_generating_sets(group, ns.max_size)
        )
        report["minimal_generating_sets"] = [
            {"elements": s, "names": [group.name(x) for x in s]} for s in sets
        ]

    if ns.cayley:
        connection = _parse_connection(ns.cayley, group)
        try:
            oriented = cayley_digraph(group, connection)
        except ValueError as exc:
            raise GroupInvariantError(str(exc)) from None
        report["cayley"] = {
            "connection": sorted(set(connection)),
            "vertices": group.order,
            "arcs": [list(a) for a in oriented.arcs_with_colors()],
            "edges": [list(e) for e in oriented.graph.edges],
            "edge_colors": list(oriented.coloring.colors),
        }
        if ns.dot:
            Path(ns.dot).write_text(to_dot(oriented, name="cayley"))
            report["dot"] = ns.dot
    elif ns.dot:
        raise GroupSpecError("--dot for groups needs --cayley to pick a connection set")

    _emit(report, ns.out)
    return EXIT_OK


def cmd_data(ns: argparse.Namespace) -> int:
    graph = bundled_data.triplex() if ns.name == "triplex" else bundled_data.twinplex()
    for u, v in graph.edges:
        sys.stdout.write(f"{u} {v}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mincayley",
        description="Obstructions for subgraphs of minimal Cayley graphs, "
        "and Petersen-graph embeddings into them.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="graph file (graph6 or edge list)")
        p.add_argument(
            "--input-format",
            choices=["auto", "edge-list", "graph6"],
            default="auto",
        )
        p.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP)
        p.add_argument("--out", help="write the JSON report here instead of stdout")

    p = sub.add_parser("colorings", help="enumerate faithful no-lonely-color colorings")
    add_graph_input(p)
    p.add_argument("--reduce", action="store_true", help="deduplicate modulo symmetry")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--limit", type=int, default=None, help="emit at most this many")
    p.set_defaults(func=cmd_colorings)

    p = sub.add_parser("obstruction", help="run the full obstruction pipeline")
    add_graph_input(p)
    p.add_argument(
        "--all-witnesses",
        action="store_true",
        default=True,
        help="collect every surviving candidate (default)",
    )
    p.add_argument(
        "--first", action="store_true", help="stop at the first surviving candidate"
    )
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("petersen", help="embed G(n,k) into a minimal Cayley graph")
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument("k", type=int, nargs="?", default=None)
    p.add_argument("--dot", help="write the host graph as DOT, images filled")
    p.add_argument("--scan", type=int, default=None, metavar="N_MAX",
                   help="emit the CSV status table for all n <= N_MAX instead")
    p.add_argument("--out", help="write the report (or CSV with --scan) here")
    p.set_defaults(func=cmd_petersen)

    p = sub.add_parser("group", help="inspect a finite group")
    p.add_argument("spec", help='"semidirect n k r" or a multiplication-table file')
    p.add_argument("--minimal-sets", action="store_true")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--cayley", metavar="S",
                   help="comma-separated connection set (indices or element names)")
    p.add_argument("--dot", help="write the Cayley digraph as DOT (needs --cayley)")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("data", help="print a bundled graph as an edge list")
    p.add_argument("name", choices=["triplex", "twinplex"])
    p.set_defaults(func=cmd_data)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except (GraphFormatError, GroupSpecError, DisconnectedGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CycleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GroupInvariantError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except MinCayleyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
