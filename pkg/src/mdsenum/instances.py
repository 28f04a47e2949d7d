"""Instance generators: random graph families and the SAT-to-extension reduction."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import InputError
from .graph import Graph, detect_classes
from .io import CnfFormula

__all__ = [
    "ExtensionInstance",
    "sat_to_extension_instance",
    "brute_force_satisfiable",
    "generate",
    "parse_generate_spec",
    "GENERATORS",
]


@dataclass(frozen=True)
class ExtensionInstance:
    """A bipartite graph and a forced vertex set; labels name each vertex's role."""

    graph: Graph
    forced: int
    roles: tuple[str, ...]


def sat_to_extension_instance(f: CnfFormula) -> ExtensionInstance:
    """Bipartite graph in which ``forced`` extends to a minimal dominating set iff ``f`` is satisfiable.

    One side holds the literals plus ``u`` and ``w``; the other holds a
    ``neg`` vertex per variable (joined to both of its literals), a vertex
    per clause (joined to ``u`` and to the clause's literals) plus ``v`` and
    ``z``.  The path ``u v w z`` closes the gadget and the forced set is the
    ``neg`` vertices together with ``v`` and ``w``.
    """
    nv, m = f.var_count, len(f.clauses)
    if nv == 0 and m == 0:
        raise InputError("empty formula")
    roles = []
    for i in range(1, nv + 1):
        roles += [f"x{i}", f"~x{i}"]
    roles += [f"neg_x{i}" for i in range(1, nv + 1)]
    roles += [f"y_C{j}" for j in range(1, m + 1)]
    roles += ["u", "v", "w", "z"]

    def lit(l: int) -> int:
        return 2 * (abs(l) - 1) + (1 if l < 0 else 0)

    neg0 = 2 * nv
    clause0 = neg0 + nv
    u, v, w, z = (clause0 + m + k for k in range(4))
    edges = set()
    for i in range(nv):
        edges.add((2 * i, neg0 + i))
        edges.add((2 * i + 1, neg0 + i))
    for j, clause in enumerate(f.clauses):
        y = clause0 + j
        edges.add((y, u))
        for l in clause:
            edges.add((lit(l), y))
    edges |= {(u, v), (v, w), (w, z)}
    g = Graph(len(roles), sorted(edges), roles)
    forced = 0
    for i in range(nv):
        forced |= 1 << (neg0 + i)
    forced |= (1 << v) | (1 << w)
    return ExtensionInstance(g, forced, tuple(roles))


def brute_force_satisfiable(f: CnfFormula) -> bool:
    for bits in product((False, True), repeat=f.var_count):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in c) for c in f.clauses):
            return True
    return False


# -- random families ----------------------------------------------------------


def _gnp(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


def random_bipartite(n: int, p: float, rng: random.Random) -> Graph:
    left = n // 2
    return Graph(n, [(a, b) for a in range(left) for b in range(left, n) if rng.random() < p])


def random_split(n: int, p: float, rng: random.Random) -> Graph:
    """Clique on the first ``n // 2`` vertices, independent rest, random cross edges."""
    k = n // 2
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    edges += [(a, b) for a in range(k) for b in range(k, n) if rng.random() < p]
    return Graph(n, edges)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    part = []
    for j, s in enumerate(sizes):
        part += [j] * s
    n = len(part)
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if part[a] != part[b]])


def disjoint_cliques(sizes: Sequence[int]) -> Graph:
    edges, start = [], 0
    for s in sizes:
        edges += [(a, b) for a in range(start, start + s) for b in range(a + 1, start + s)]
        start += s
    return Graph(start, edges)


def random_rejection(cls: str, n: int, p: float, rng: random.Random, budget: int = 10_000) -> Graph:
    """Sample G(n, p) until it is ``cls``-free (triangle, diamond or paw)."""
    if cls not in ("triangle", "diamond", "paw"):
        raise InputError(f"unknown class {cls!r}")
    for _ in range(budget):
        g = _gnp(rng, n, p)
        if getattr(detect_classes(g), f"{cls}_free"):
            return g
    raise InputError(f"no {cls}-free sample within {budget} draws")


GENERATORS = ("gnp", "random_bipartite", "random_split", "complete_multipartite", "disjoint_cliques", "random_rejection")


def generate(kind: str, params: Sequence, seed: int = 0) -> Graph:
    """Build a graph of the given family; random families are seeded with ``seed``."""
    rng = random.Random(seed)
    try:
        if kind == "gnp":
            n, p = params
            return _gnp(rng, int(n), float(p))
        if kind == "random_bipartite":
            n, p = params
            return random_bipartite(int(n), float(p), rng)
        if kind == "random_split":
            n, p = params
            return random_split(int(n), float(p), rng)
        if kind == "complete_multipartite":
            return complete_multipartite([int(x) for x in params])
        if kind == "disjoint_cliques":
            return disjoint_cliques([int(x) for x in params])
        if kind == "random_rejection":
            cls, n, p = params
            return random_rejection(str(cls), int(n), float(p), rng)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad parameters for {kind}: {list(params)}") from exc
    raise InputError(f"unknown generator {kind!r}; choose from {', '.join(GENERATORS)}")


def parse_generate_spec(spec: str) -> tuple[str, list[str]]:
    """Split ``KIND:P1,P2,...`` into the kind and its raw parameters."""
    kind, _, rest = spec.partition(":")
    return kind, [x for x in rest.split(",") if x]
