"""Small graph builders, a pure-Python reference oracle and hypothesis strategies."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from mdsenum.graph import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(p, q):
    return Graph(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def star(m):
    return complete_bipartite(1, m)


def gnp(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p])


def random_subset(rng: random.Random, n: int) -> int:
    return rng.getrandbits(n) if n else 0


def naive_mds(g: Graph, a) -> set[frozenset]:
    """Definition-level double loop, independent of the numpy oracle."""
    a = set(a)
    nb = [set(g.neighbors(v)) | {v} for v in range(g.n)]
    found = set()
    for r in range(g.n + 1):
        for d in combinations(range(g.n), r):
            cover = set().union(*(nb[x] for x in d)) if d else set()
            if not a <= cover:
                continue
            ok = True
            for x in d:
                rest = set().union(*(nb[y] for y in d if y != x)) if r > 1 else set()
                if not (nb[x] - rest) & a:
                    ok = False
                    break
            if ok:
                found.add(frozenset(d))
    return found


def masks_to_sets(masks):
    return [frozenset(i for i in range(m.bit_length()) if m >> i & 1) for m in masks]


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def bicolored(draw, min_n=0, max_n=7):
    g = draw(graphs(min_n, max_n))
    a = draw(st.integers(0, g.full))
    return g, a


class RecordingAudit:
    """Audit that keeps per-level node counts and extension counts of the top-level tree."""

    def __init__(self, g: Graph, a: int):
        from mdsenum.ordered import Audit  # noqa: F401  (documents the interface)

        self.g, self.a = g, a
        self.levels: dict[int, int] = {}
        self.extension_counts: list[int] = []
        self.split_bounds: list[tuple[int, int, int]] = []
        self.max_stack = 0

    def _top(self, g, peel):
        return g is self.g and peel.levels[-1] == self.a

    def node(self, g, peel, i, d_star):
        if self._top(g, peel):
            self.levels[i] = self.levels.get(i, 0) + 1

    def extensions(self, g, peel, i, d_star, produced):
        if self._top(g, peel):
            self.extension_counts.append(produced)

    def split_bound(self, n, dh, candidates):
        self.split_bounds.append((n, dh, candidates))

    def stack_depth(self, depth):
        self.max_stack = max(self.max_stack, depth)
