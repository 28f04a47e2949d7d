"""``domset-enum`` command-line driver."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import Optional, Sequence

from . import enumerators as en
from .errors import ClassViolation, ContractViolation, InputError
from .graph import BicoloredGraph, Graph, detect_classes, find_triangle, iter_bits
from .instances import generate, parse_generate_spec, sat_to_extension_instance
from .io import format_solution, parse_dimacs_cnf, parse_graph, parse_vertex_list
from .oracle import oracle_masks

log = logging.getLogger("mdsenum")

ALGORITHMS = ("auto", "triangle-free", "paw-free", "diamond-free", "general", "ktk2", "oracle")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="domset-enum",
        description="Enumerate the minimal dominating sets of a graph (or of a prescribed vertex subset).",
    )
    p.add_argument("path", nargs="?", help="graph file (default: stdin)")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--format", choices=("edges", "dimacs"), default="edges", dest="fmt")
    p.add_argument("--bicolor", metavar="FILE", help="vertex labels to dominate, one per line (default: all)")
    p.add_argument("--count-only", action="store_true", help="print only the number of solutions")
    p.add_argument("--stats", action="store_true", help="report algorithm, solution count and max delay on stderr")
    p.add_argument("--seed", type=int, default=0, help="seed for --generate")
    p.add_argument("--generate", metavar="KIND:PARAMS", help="use a generated graph, e.g. random_bipartite:8,0.5")
    p.add_argument("--sat", metavar="FILE", help="DIMACS CNF file; use its extension-problem graph")
    p.add_argument(
        "--check-extension",
        action="store_true",
        help="decide whether the forced set (from --sat, else --bicolor) lies in some minimal dominating set",
    )
    p.add_argument("--triangle-free-base", action="store_true", help="general algorithm: switch to the triangle-free provider on triangle-free subproblems")
    return p


def _read(path: Optional[str]) -> str:
    try:
        if path is None or path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _load(args) -> tuple[Graph, int, Optional[int]]:
    """Graph, prescribed mask and (for --sat) the forced mask."""
    forced = None
    if args.sat and args.generate:
        raise InputError("--sat and --generate are mutually exclusive")
    if args.sat:
        inst = sat_to_extension_instance(parse_dimacs_cnf(_read(args.sat)))
        g, forced = inst.graph, inst.forced
    elif args.generate:
        kind, params = parse_generate_spec(args.generate)
        g = generate(kind, params, args.seed)
    else:
        g = parse_graph(_read(args.path), args.fmt)
    a = parse_vertex_list(_read(args.bicolor), g) if args.bicolor else g.full
    return g, a, forced


def select_algorithm(g: Graph, a: int) -> str:
    if find_triangle(g, a) is None:
        return "triangle-free"
    report = detect_classes(g)
    if report.paw_free:
        return "paw-free"
    if report.diamond_free:
        return "diamond-free"
    return "general"


def solutions(name: str, g: Graph, a: int, triangle_free_base: bool = False):
    bg = BicoloredGraph(g, a)
    if name == "oracle":
        return (frozenset(iter_bits(m)) for m in oracle_masks(g, a))
    if name == "triangle-free":
        return en.enum_mds_triangle_free(bg).start()
    if name == "paw-free":
        return en.enum_mds_paw_free(bg).start()
    if name == "diamond-free":
        return en.enum_mds_diamond_free(bg).start()
    if name == "ktk2":
        return en.enum_mds_kt_plus_k2(bg).start()
    return en.enum_mds_general(bg, triangle_free_base=triangle_free_base).start()


def run(args) -> int:
    g, a, forced = _load(args)
    if args.check_extension:
        if forced is None:
            if not args.bicolor:
                raise InputError("--check-extension needs --sat or --bicolor")
            forced = a
        ok = any(m & forced == forced for m in oracle_masks(g, g.full))
        print("true" if ok else "false")
        return 0

    name = select_algorithm(g, a) if args.algorithm == "auto" else args.algorithm
    if args.stats:
        print(f"# algorithm={name}", file=sys.stderr)
    try:
        stream = solutions(name, g, a, args.triangle_free_base)
    except ClassViolation as exc:
        names = " ".join(g.labels[v] for v in exc.witness)
        print(f"domset-enum: graph is not {exc.cls}-free; induced {exc.cls} on {names}", file=sys.stderr)
        return 3
    out = sys.stdout
    count = 0
    max_delay = 0.0
    last = time.perf_counter()
    for sol in stream:
        now = time.perf_counter()
        max_delay = max(max_delay, now - last)
        count += 1
        if not args.count_only:
            out.write(format_solution(g, sol) + "\n")
            out.flush()
        last = time.perf_counter()
    max_delay = max(max_delay, time.perf_counter() - last)
    if args.count_only:
        print(count)
    if args.stats:
        print(f"# solutions={count} max_delay_ms={max_delay * 1000:.3f}", file=sys.stderr)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except InputError as exc:
        print(f"domset-enum: {exc}", file=sys.stderr)
        return 2
    except ContractViolation as exc:
        log.error("internal contract violated: %s", exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
