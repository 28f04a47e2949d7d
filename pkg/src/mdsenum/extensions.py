"""Candidate-extension providers for the ordered-generation engine.

Each provider takes an :class:`ExtensionContext` and returns a restartable
stream of the minimal dominating sets of ``ctx.target`` (as bitmasks).
Providers documented as "possibly with repeats" must be wrapped with
:func:`mdsenum.ordered.dedup` before being handed to the engine.

Throughout, ``v`` is the peeled vertex of the next level and ``s`` is the
rest of the target; ``s`` always lies inside ``N(v)``.
"""

from __future__ import annotations

from dataclasses import replace
from itertools import combinations, product
from typing import Callable, Optional

from .errors import ContractViolation
from .graph import Graph, domination_counts, find_paw, is_min_dom_mask, iter_bits
from .ordered import Audit, ExtensionContext, SolutionStream, dedup, ordered_masks
from .split import SplitPartition, maximalize_split, split_masks

__all__ = [
    "build_aux_split_graph",
    "extensions_triangle_free",
    "extensions_general",
    "clique_mds",
    "cluster_mds",
    "extensions_diamond_free",
    "extensions_paw_free",
    "complete_multipartition",
]

Recurse = Callable[[Graph, int], SolutionStream]


def _independent_witness(g: Graph, s: int) -> tuple[int, int]:
    for x in iter_bits(s):
        m = g.nbr[x] & s
        if m:
            return x, (m & -m).bit_length() - 1
    raise AssertionError("set is independent")


# -- triangle-free ----------------------------------------------------------


def build_aux_split_graph(ctx: ExtensionContext) -> SplitPartition:
    """Split graph on ``s`` plus its outside neighbours (``v`` excluded), the latter made a clique."""
    g, s, v = ctx.graph, ctx.s, ctx.v
    if not g.is_independent(s):
        x, y = _independent_witness(g, s)
        raise ContractViolation(f"vertices {x} and {y} to dominate are adjacent; the triangle {sorted((v, x, y))} breaks the split construction")
    nbr = g.nbr
    c = g.closed_of(s) & ~s & ~(1 << v)
    aux = [0] * g.n
    for x in iter_bits(s):
        aux[x] = nbr[x] & c
    for y in iter_bits(c):
        aux[y] = (nbr[y] & s) | (c & ~(1 << y))
    h = Graph.from_masks(aux, g.labels)
    return maximalize_split(h, s, c)


def extensions_triangle_free(ctx: ExtensionContext) -> SolutionStream:
    """Candidate extensions without repeats, assuming the set left to dominate besides ``v`` is independent.

    Candidates are ``{v}``, the minimal dominating sets of the auxiliary split
    graph, and those sets augmented by one neighbour ``u`` of ``v``; each is
    kept iff it minimally dominates the target.  An augmented set is only
    kept when ``v`` is the sole private neighbour of ``u``, which makes the
    augmentation vertex (and hence the candidate) unique.
    """
    g, target, v = ctx.graph, ctx.target, ctx.v
    sp = build_aux_split_graph(ctx)
    audit = ctx.audit
    undominated = not ctx.v_dominated

    def run():
        closed = g.closed
        emitted = 0
        vb = 1 << v
        if is_min_dom_mask(closed, target, vb):
            emitted += 1
            yield vb
        dh = 0
        for d in split_masks(sp):
            dh += 1
            if is_min_dom_mask(closed, target, d):
                emitted += 1
                yield d
        if undominated:
            for d in split_masks(sp):
                for u in iter_bits(g.nbr[v] & ~d):
                    x = d | (1 << u)
                    if not is_min_dom_mask(closed, target, x):
                        continue
                    _, twice = domination_counts(closed, x)
                    if closed[u] & target & ~twice == vb:
                        emitted += 1
                        yield x
        if audit is not None:
            audit.split_bound(g.n, dh, emitted)

    return SolutionStream(run)


# -- general (any graph) ----------------------------------------------------


def extensions_general(ctx: ExtensionContext, recurse: Recurse) -> SolutionStream:
    """Candidate extensions via recursive enumeration on subsets of ``s``; may repeat.

    If ``v`` is already dominated the candidates are exactly the minimal
    dominating sets of ``s``.  Otherwise each candidate is ``Q | {w}`` for
    some ``w`` in ``N[v]`` and ``Q`` minimally dominating ``s - N[w]``; a
    candidate shows up once per such ``w``.
    """
    g, target, s, v = ctx.graph, ctx.target, ctx.s, ctx.v

    if ctx.v_dominated:
        return SolutionStream(lambda: recurse(g, s).start())

    def run():
        closed = g.closed
        for w in iter_bits(closed[v]):
            wb = 1 << w
            for q in recurse(g, s & ~closed[w]):
                x = q | wb
                if is_min_dom_mask(closed, target, x):
                    yield x

    return SolutionStream(run)


# -- diamond-free ------------------------------------------------------------


def clique_mds(g: Graph, k: int, v_center: int) -> SolutionStream:
    """Minimal dominating sets of a clique ``k`` inside ``N(v_center)`` of a diamond-free graph."""
    nbr, closed = g.nbr, g.closed
    if k & ~nbr[v_center]:
        raise ContractViolation("clique is not inside the neighbourhood of the centre")
    if not g.is_clique(k):
        raise ContractViolation("prescribed set is not a clique")
    outside = ~closed[v_center]
    factors = []
    seen = 0
    for x in iter_bits(k):
        f = nbr[x] & outside
        if f & seen:
            u = ((f & seen) & -(f & seen)).bit_length() - 1
            a, b = sorted(y for y in iter_bits(k & nbr[u]))[:2]
            raise ContractViolation(f"diamond on {sorted((u, a, b, v_center))}: vertex {u} sees two clique vertices")
        seen |= f
        factors.append(tuple(iter_bits(f)))

    def run():
        if not k:
            yield 0
            return
        yield 1 << v_center
        for u in iter_bits(nbr[v_center]):
            if (k >> u) & 1 or nbr[u] & k:
                if k & ~closed[u]:
                    raise ContractViolation(f"neighbour {u} of {v_center} touches the clique without being complete to it")
                yield 1 << u
        if all(factors):
            for pick in product(*factors):
                m = 0
                for y in pick:
                    m |= 1 << y
                yield m

    return SolutionStream(run)


def _check_cluster(g: Graph, w: int) -> None:
    nbr = g.nbr
    for x in iter_bits(w):
        comp = nbr[x] & w
        for y in iter_bits(comp):
            if comp & ~g.closed[y] & ~(1 << y):
                z = ((comp & ~g.closed[y]) & -(comp & ~g.closed[y])).bit_length() - 1
                raise ContractViolation(f"induced path {y}-{x}-{z} inside a neighbourhood: not a cluster graph")


def cluster_mds(g: Graph, w: int, v_center: int, audit: Optional[Audit] = None) -> SolutionStream:
    """Minimal dominating sets of ``w``, a union of cliques inside ``N(v_center)``.

    Runs the ordered generation on ``g(w)``; every peeling step removes one
    whole clique, and candidate extensions come from :func:`clique_mds`.
    """
    if w & ~g.nbr[v_center]:
        raise ContractViolation("set is not inside the neighbourhood of the centre")
    _check_cluster(g, w)

    def raw(ctx: ExtensionContext) -> SolutionStream:
        gg, target, s2, u = ctx.graph, ctx.target, ctx.s, ctx.v
        if ctx.v_dominated:
            return clique_mds(gg, s2, v_center)

        def run():
            closed = gg.closed
            for x in iter_bits(closed[u]):
                xb = 1 << x
                for q in clique_mds(gg, s2 & ~closed[x], v_center):
                    cand = q | xb
                    if is_min_dom_mask(closed, target, cand):
                        yield cand

        return SolutionStream(run)

    return ordered_masks(g, w, lambda ctx: dedup(raw(ctx)), audit)


def extensions_diamond_free(ctx: ExtensionContext) -> SolutionStream:
    """Candidate extensions for diamond-free graphs; may repeat."""
    v, audit = ctx.v, ctx.audit
    return extensions_general(ctx, lambda g, a: cluster_mds(g, a, v, audit))


# -- paw-free ----------------------------------------------------------------


def complete_multipartition(g: Graph, s: int, v: int) -> list[int]:
    """Parts of ``g[s]`` when it is complete multipartite, smallest member order.

    Raises :class:`ContractViolation` naming a paw on ``v`` plus an edge and a
    vertex of ``s`` missing both of its ends.
    """
    nbr, closed = g.nbr, g.closed
    for a in iter_bits(s):
        for b in iter_bits(nbr[a] & s):
            if b < a:
                continue
            lone = s & ~closed[a] & ~closed[b]
            if lone:
                c = (lone & -lone).bit_length() - 1
                raise ContractViolation(f"paw on {sorted((v, a, b, c))}: the set to dominate is not complete multipartite")
    parts = []
    left = s
    while left:
        x = (left & -left).bit_length() - 1
        part = left & ~nbr[x]
        parts.append(part)
        left &= ~part
    return parts


def extensions_paw_free(ctx: ExtensionContext) -> SolutionStream:
    """Candidate extensions for paw-free graphs, without repeats.

    An independent ``s`` goes to the triangle-free provider on a copy of
    the graph without edges that cannot matter (both ends outside the
    target).  Otherwise ``g[s]`` is complete multipartite and every
    candidate is a part of it or has at most two vertices (three when ``v``
    still needs domination).
    """
    g, target, s, v = ctx.graph, ctx.target, ctx.s, ctx.v
    if g.is_independent(s):
        work = g.drop_edges_outside(target)
        return extensions_triangle_free(replace(ctx, graph=work))

    parts = complete_multipartition(g, s, v)
    nbr = g.nbr
    for u in iter_bits(g.closed_of(s) & ~s & ~g.closed[v]):
        if s & ~nbr[u]:
            witness = find_paw(g)
            raise ContractViolation(f"vertex {u} sees part of the set to dominate but not all of it; paw {witness}")
    limit = 2 if ctx.v_dominated else 3
    universe = tuple(iter_bits(g.closed_of(target)))
    part_set = frozenset(parts)

    def run():
        closed = g.closed
        for part in parts:
            if is_min_dom_mask(closed, target, part):
                yield part
        for size in range(limit + 1):
            for combo in combinations(universe, size):
                m = 0
                for y in combo:
                    m |= 1 << y
                if m in part_set:
                    continue
                if is_min_dom_mask(closed, target, m):
                    yield m

    return SolutionStream(run)
