"""Peelings of bicolored graphs.

A peeling strips the prescribed set one closed neighbourhood at a time:
``levels[p]`` is the prescribed set, ``levels[0]`` is empty and
``levels[i-1] = levels[i] - N[vertices[i-1]]``.  Levels are bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import BicoloredGraph, Graph, to_set

__all__ = ["Peeling", "compute_peeling", "peel_mask", "validate_peeling"]


@dataclass(frozen=True)
class Peeling:
    levels: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.vertices)

    def level_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(to_set(m) for m in self.levels)


def peel_mask(g: Graph, a: int) -> Peeling:
    """Peel ``a`` by always removing the closed neighbourhood of its smallest vertex."""
    closed = g.closed
    stack = [a]
    removed = []
    cur = a
    while cur:
        v = (cur & -cur).bit_length() - 1
        removed.append(v)
        cur &= ~closed[v]
        stack.append(cur)
    # built from V_p down to V_0; the i-th removal is v_{p-i+1}
    return Peeling(levels=tuple(reversed(stack)), vertices=tuple(reversed(removed)))


def compute_peeling(bg: BicoloredGraph) -> Peeling:
    return peel_mask(bg.graph, bg.mask)


def validate_peeling(bg: BicoloredGraph, p: Peeling) -> bool:
    closed = bg.graph.closed
    levels, vs = p.levels, p.vertices
    if len(levels) != len(vs) + 1 or levels[0] != 0 or levels[-1] != bg.mask:
        return False
    for i in range(1, len(levels)):
        v = vs[i - 1]
        if not 0 <= v < bg.graph.n or not (levels[i] >> v) & 1:
            return False
        if levels[i - 1] != levels[i] & ~closed[v]:
            return False
    return True
