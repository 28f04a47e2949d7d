"""Graph and CNF file formats, solution serialisation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .graph import Graph

__all__ = [
    "CnfFormula",
    "parse_graph",
    "parse_dimacs_cnf",
    "parse_vertex_list",
    "serialize_graph",
    "format_solution",
    "label_key",
]


def _content_lines(text: str, comment_prefixes: tuple[str, ...]):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(comment_prefixes):
            continue
        yield lineno, line


def _parse_edges(text: str) -> Graph:
    index: dict[str, int] = {}
    edges = set()

    def vid(label: str) -> int:
        if label not in index:
            index[label] = len(index)
        return index[label]

    for lineno, line in _content_lines(text, ("#", "%")):
        parts = line.split()
        if len(parts) == 1:
            vid(parts[0])
            continue
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        a, b = parts
        if a == b:
            raise InputError(f"line {lineno}: self-loop at {a!r}")
        u, v = vid(a), vid(b)
        edges.add((min(u, v), max(u, v)))
    labels = sorted(index, key=index.__getitem__)
    return Graph(len(labels), sorted(edges), labels)


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, line in _content_lines(text, ("c",)):
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise InputError(f"line {lineno}: bad problem line {line!r}")
            try:
                n = int(parts[2])
            except ValueError:
                raise InputError(f"line {lineno}: bad vertex count") from None
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise InputError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise InputError(f"line {lineno}: non-integer vertex") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise InputError(f"line {lineno}: self-loop at {u}")
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise InputError(f"line {lineno}: unknown line type {parts[0]!r}")
    if n is None:
        raise InputError("missing 'p edge n m' line")
    return Graph(n, sorted(edges), [str(v + 1) for v in range(n)])


def parse_graph(text: str, fmt: str = "edges") -> Graph:
    """Parse an edge list (arbitrary labels) or a DIMACS ``p edge`` file.

    Edge-list labels get indices in order of first appearance; a line with
    a single label declares an isolated vertex.  Duplicate edges collapse.
    """
    if fmt == "edges":
        return _parse_edges(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise InputError(f"unknown graph format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "edges") -> str:
    if fmt == "dimacs":
        lines = [f"p edge {g.n} {g.edge_count()}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
        return "\n".join(lines) + "\n"
    # vertex lines first pin the index order on re-parse
    lines = list(g.labels) + [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_vertex_list(text: str, g: Graph) -> int:
    """Bitmask of the labels listed one per line (the prescribed set file)."""
    index = {lab: v for v, lab in enumerate(g.labels)}
    mask = 0
    for lineno, line in _content_lines(text, ("#", "%")):
        for label in line.split():
            if label not in index:
                raise InputError(f"line {lineno}: unknown vertex label {label!r}")
            mask |= 1 << index[label]
    return mask


_INT = re.compile(r"-?\d+")


def label_key(label: str):
    """Sort key putting integer labels in numeric order before other labels."""
    return (0, int(label), "") if _INT.fullmatch(label) else (1, 0, label)


def format_solution(g: Graph, members: Iterable[int]) -> str:
    return " ".join(sorted((g.labels[v] for v in members), key=label_key))


@dataclass(frozen=True)
class CnfFormula:
    var_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for c in self.clauses:
            if not c:
                raise InputError("empty clause")
            for lit in c:
                if lit == 0 or abs(lit) > self.var_count:
                    raise InputError(f"literal {lit} out of range for {self.var_count} variables")

    @classmethod
    def of(cls, var_count: int, clauses: Sequence[Sequence[int]]) -> "CnfFormula":
        return cls(var_count, tuple(tuple(c) for c in clauses))


def parse_dimacs_cnf(text: str) -> CnfFormula:
    var_count = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, line in _content_lines(text, ("c", "%")):
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise InputError(f"line {lineno}: bad problem line {line!r}")
            try:
                var_count = int(parts[2])
            except ValueError:
                raise InputError(f"line {lineno}: bad variable count") from None
            continue
        if var_count is None:
            raise InputError(f"line {lineno}: clause before 'p cnf' line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise InputError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                if current:
                    clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if var_count is None:
        raise InputError("missing 'p cnf' line")
    if current:
        clauses.append(tuple(current))
    return CnfFormula(var_count, tuple(clauses))
