"""Brute-force ground truth over all vertex subsets (desk-scale graphs only)."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import OracleCapExceeded
from .graph import BicoloredGraph, Graph, as_bicolored, to_set

__all__ = ["DEFAULT_CAP", "oracle_masks", "oracle_mds", "oracle_extension"]

DEFAULT_CAP = 22


def oracle_masks(g: Graph, a: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Sorted bitmasks of every minimal dominating set of ``g(a)``.

    Domination is monotone, so a dominating set is minimal iff dropping any
    single member breaks domination; both tests are vectorised over all
    ``2**n`` subsets.
    """
    n = g.n
    if n > cap:
        raise OracleCapExceeded(f"oracle refuses n={n} (cap {cap})")
    if n == 0:
        return [0]
    size = 1 << n
    dom = np.zeros(size, dtype=np.int64)
    for v in range(n):
        lo = 1 << v
        dom[lo : 2 * lo] = dom[:lo] | g.closed[v]
    dominating = (dom & a) == a
    minimal = dominating.copy()
    for v in range(n):
        lo = 1 << v
        # rows: subsets split on bit v; [:, 1, :] holds the ones containing v
        m3 = minimal.reshape(-1, 2, lo)
        d3 = dominating.reshape(-1, 2, lo)
        m3[:, 1, :] &= ~d3[:, 0, :]
    return np.flatnonzero(minimal).tolist()


def oracle_mds(bg: "Graph | BicoloredGraph", cap: int = DEFAULT_CAP) -> set[frozenset[int]]:
    bg = as_bicolored(bg)
    return {to_set(m) for m in oracle_masks(bg.graph, bg.mask, cap)}


def oracle_extension(g: Graph, a: Iterable[int], cap: int = DEFAULT_CAP) -> bool:
    """Is ``a`` contained in some minimal dominating set of ``g``?"""
    am = g.check_vertices(a)
    return any(m & am == am for m in oracle_masks(g, g.full, cap))
