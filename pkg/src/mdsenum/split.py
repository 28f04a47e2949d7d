"""Minimal dominating sets of split graphs with polynomial delay.

With the independent side ``s`` maximal, a minimal dominating set ``D`` is
determined by ``X = D & c``: ``D = X | (s - N(X))``, and ``X`` is admissible
iff each of its members has a private neighbour in ``s`` with respect to
``X``.  Admissible sets are closed under taking subsets, so a binary
include/exclude walk over ``c`` never hits a dead end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, iter_bits
from .ordered import SolutionStream

__all__ = ["SplitPartition", "maximalize_split", "enumerate_split_mds", "split_masks"]


@dataclass(frozen=True)
class SplitPartition:
    """The split graph ``graph[s | c]``; vertices outside ``s | c`` are ignored."""

    graph: Graph
    s: int
    c: int

    def is_valid(self) -> bool:
        g = self.graph
        return (
            self.s & self.c == 0
            and (self.s | self.c) & ~g.full == 0
            and g.is_independent(self.s)
            and g.is_clique(self.c)
            and all(g.nbr[x] & self.s for x in iter_bits(self.c))
        )


def maximalize_split(g: Graph, s: int, c: int) -> SplitPartition:
    """Move clique vertices without an ``s``-neighbour into ``s``, smallest index first."""
    if s & c or (s | c) & ~g.full or not g.is_independent(s) or not g.is_clique(c):
        raise InputError("not a split partition")
    nbr = g.nbr
    for x in iter_bits(c):
        if not nbr[x] & s:
            s |= 1 << x
            c &= ~(1 << x)
    return SplitPartition(g, s, c)


def _has_private_in_s(nbr, s: int, x: int, others: int) -> bool:
    cover = 0
    for y in iter_bits(others):
        cover |= nbr[y]
    return bool(nbr[x] & s & ~cover)


def split_masks(sp: SplitPartition) -> SolutionStream:
    g, s, c = sp.graph, sp.s, sp.c
    nbr = g.nbr
    order = tuple(iter_bits(c))

    def admissible_with(x_mask: int, new: int) -> bool:
        chosen = x_mask | (1 << new)
        for y in iter_bits(chosen):
            if not _has_private_in_s(nbr, s, y, chosen & ~(1 << y)):
                return False
        return True

    def walk(k: int, x_mask: int, covered: int):
        if k == len(order):
            yield x_mask | (s & ~covered)
            return
        yield from walk(k + 1, x_mask, covered)
        x = order[k]
        if admissible_with(x_mask, x):
            yield from walk(k + 1, x_mask | (1 << x), covered | nbr[x])

    return SolutionStream(lambda: walk(0, 0, 0))


def enumerate_split_mds(sp: SplitPartition) -> SolutionStream:
    """Stream of the minimal dominating sets of the split graph, as bitmasks."""
    return split_masks(sp)
