"""Top-level enumeration entry points, one per graph class.

Every function returns a :class:`SolutionStream` of ``frozenset`` vertex
sets; the ``*_masks`` variants yield bitmasks and are what the recursive
algorithms call internally.  A plain :class:`Graph` argument means "dominate
every vertex".
"""

from __future__ import annotations

from typing import Optional, Union

from .errors import ClassViolation, InputError
from .extensions import (
    extensions_diamond_free,
    extensions_general,
    extensions_paw_free,
    extensions_triangle_free,
)
from .graph import (
    BicoloredGraph,
    Graph,
    as_bicolored,
    find_diamond,
    find_paw,
    find_triangle,
    is_min_dom_mask,
    iter_bits,
    to_set,
)
from .ordered import Audit, SolutionStream, dedup, ordered_masks

__all__ = [
    "enum_mds_triangle_free",
    "enum_mds_general",
    "enum_maximal_independent_sets",
    "enum_mds_kt_plus_k2",
    "enum_mds_diamond_free",
    "enum_mds_paw_free",
    "general_masks",
    "mis_masks",
]

GraphLike = Union[Graph, BicoloredGraph]


def triangle_free_masks(g: Graph, a: int, audit: Optional[Audit] = None) -> SolutionStream:
    return ordered_masks(g, a, extensions_triangle_free, audit)


def general_masks(
    g: Graph, a: int, audit: Optional[Audit] = None, triangle_free_base: bool = False
) -> SolutionStream:
    """Minimal dominating sets of ``g(a)`` for any graph.

    The enumeration of the candidate extensions recursively enumerates
    minimal dominating sets of strictly smaller neighbourhoods, so the
    recursion depth is bounded by the clique number of ``g[a]``.
    """
    if triangle_free_base and find_triangle(g, a) is None:
        return triangle_free_masks(g, a, audit)

    def recurse(gg: Graph, sub: int) -> SolutionStream:
        return general_masks(gg, sub, audit, triangle_free_base)

    return ordered_masks(g, a, lambda ctx: dedup(extensions_general(ctx, recurse)), audit)


def enum_mds_general(
    bg: GraphLike, *, audit: Optional[Audit] = None, triangle_free_base: bool = False
) -> SolutionStream:
    bg = as_bicolored(bg)
    return general_masks(bg.graph, bg.mask, audit, triangle_free_base).map(to_set)


def enum_mds_triangle_free(bg: GraphLike, *, audit: Optional[Audit] = None) -> SolutionStream:
    """Requires ``g[a]`` triangle-free; the rest of the graph is unrestricted."""
    bg = as_bicolored(bg)
    tri = find_triangle(bg.graph, bg.mask)
    if tri is not None:
        raise ClassViolation("triangle", tri)
    return triangle_free_masks(bg.graph, bg.mask, audit).map(to_set)


def enum_mds_diamond_free(bg: GraphLike, *, audit: Optional[Audit] = None) -> SolutionStream:
    """Requires the whole graph to be diamond-free."""
    bg = as_bicolored(bg)
    w = find_diamond(bg.graph)
    if w is not None:
        raise ClassViolation("diamond", w)
    ext = lambda ctx: dedup(extensions_diamond_free(ctx))
    return ordered_masks(bg.graph, bg.mask, ext, audit).map(to_set)


def enum_mds_paw_free(bg: GraphLike, *, audit: Optional[Audit] = None) -> SolutionStream:
    """Requires the whole graph to be paw-free."""
    bg = as_bicolored(bg)
    w = find_paw(bg.graph)
    if w is not None:
        raise ClassViolation("paw", w)
    return ordered_masks(bg.graph, bg.mask, extensions_paw_free, audit).map(to_set)


# -- maximal independent sets ------------------------------------------------


def _greedy_complete(nbr, prefix: int, ind: int) -> int:
    """Extend ``ind`` to a maximal independent set of ``g[prefix]`` in index order."""
    blocked = ind
    for y in iter_bits(ind):
        blocked |= nbr[y]
    for x in iter_bits(prefix & ~blocked):
        if not (blocked >> x) & 1:
            ind |= 1 << x
            blocked |= nbr[x] | (1 << x)
    return ind


def mis_masks(g: Graph) -> SolutionStream:
    """Maximal independent sets by a depth-first walk over vertex prefixes.

    A node at depth ``k`` is a maximal independent set of ``g[0..k-1]``.
    Adding vertex ``k`` either keeps the set (when ``k`` has a neighbour in
    it), or swaps ``k`` in for its neighbours; the swapped set is a child
    only if greedily completing it without ``k`` gives back the node.  Each
    node has at least one child, so the delay is polynomial.
    """
    nbr, n = g.nbr, g.n

    def children(ind: int, k: int):
        if not nbr[k] & ind:
            yield ind | (1 << k)
            return
        yield ind
        prefix = (1 << (k + 1)) - 1
        swapped = (ind & ~nbr[k]) | (1 << k)
        dominated = swapped
        for y in iter_bits(swapped):
            dominated |= nbr[y]
        if prefix & ~dominated:
            return
        if _greedy_complete(nbr, prefix & ~(1 << k), swapped & ~(1 << k)) == ind:
            yield swapped

    def run():
        if n == 0:
            yield 0
            return
        stack = [(0, children(0, 0))]
        while stack:
            k, cursor = stack[-1]
            child = next(cursor, None)
            if child is None:
                stack.pop()
            elif k + 1 == n:
                yield child
            else:
                stack.append((k + 1, children(child, k + 1)))

    return SolutionStream(run)


def enum_maximal_independent_sets(g: Graph) -> SolutionStream:
    return mis_masks(g).map(to_set)


# -- (K_t + K_2)-free ----------------------------------------------------------


def kt_plus_k2_masks(g: Graph, audit: Optional[Audit] = None) -> SolutionStream:
    closed, nbr = g.closed, g.nbr
    full = g.full

    def first_edge(d: int):
        for x in iter_bits(d):
            m = nbr[x] & d & ~((2 << x) - 1)
            if m:
                return x, (m & -m).bit_length() - 1
        return None

    def raw():
        yield from mis_masks(g).start()
        for u, v in g.edges():
            pair = (1 << u) | (1 << v)
            a_uv = full & ~closed[u] & ~closed[v]
            for d in general_masks(g, a_uv, audit):
                m = d | pair
                if first_edge(m) == (u, v) and is_min_dom_mask(closed, full, m):
                    yield m

    return dedup(SolutionStream(raw))


def enum_mds_kt_plus_k2(g: GraphLike, *, audit: Optional[Audit] = None) -> SolutionStream:
    """Independent minimal dominating sets first, then those inducing an edge."""
    if isinstance(g, BicoloredGraph):
        if g.mask != g.graph.full:
            raise InputError("the (K_t+K_2) enumerator only handles A = V")
        g = g.graph
    return kt_plus_k2_masks(g, audit).map(to_set)
