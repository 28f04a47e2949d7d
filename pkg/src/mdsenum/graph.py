"""Immutable graphs, neighbourhood algebra and domination predicates.

Internally every vertex set is an ``int`` bitmask (bit ``v`` set iff vertex
``v`` is a member).  The public helpers at the bottom of this module accept
any iterable of vertex indices and return ``frozenset`` objects; the
enumeration engine works on masks throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InputError

__all__ = [
    "Graph",
    "BicoloredGraph",
    "ClassReport",
    "bit",
    "iter_bits",
    "to_mask",
    "to_set",
    "closed_neighborhood",
    "private_neighbors",
    "is_minimal_dominating",
    "detect_classes",
]


def bit(v: int) -> int:
    return 1 << v


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``labels`` maps indices back to the names used in the input file; by
    default the label of ``v`` is ``str(v)``.
    """

    __slots__ = ("n", "nbr", "closed", "labels", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Optional[Sequence[str]] = None,
    ):
        if n < 0:
            raise InputError("negative vertex count")
        nbr = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        if labels is None:
            labels = [str(v) for v in range(n)]
        elif len(labels) != n:
            raise InputError("label table size does not match vertex count")
        self.n = n
        self.nbr = tuple(nbr)
        self.closed = tuple(m | (1 << v) for v, m in enumerate(nbr))
        self.labels = tuple(labels)
        self._adj = tuple(tuple(iter_bits(m)) for m in nbr)

    @classmethod
    def from_masks(cls, nbr: Sequence[int], labels: Optional[Sequence[str]] = None) -> "Graph":
        n = len(nbr)
        edges = [(u, v) for u in range(n) for v in iter_bits(nbr[u]) if u < v]
        return cls(n, edges, labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbours of ``v``."""
        return self._adj[v]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if v > u:
                    yield u, v

    def edge_count(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def closed_of(self, mask: int) -> int:
        out = 0
        closed = self.closed
        while mask:
            low = mask & -mask
            out |= closed[low.bit_length() - 1]
            mask ^= low
        return out

    def is_independent(self, mask: int) -> bool:
        nbr = self.nbr
        for v in iter_bits(mask):
            if nbr[v] & mask:
                return False
        return True

    def is_clique(self, mask: int) -> bool:
        closed = self.closed
        for v in iter_bits(mask):
            if mask & ~closed[v]:
                return False
        return True

    def drop_edges_outside(self, keep: int) -> "Graph":
        """Copy of the graph without the edges whose ends both lie outside ``keep``."""
        nbr = [m if (keep >> v) & 1 else m & keep for v, m in enumerate(self.nbr)]
        return Graph.from_masks(nbr, self.labels)

    def check_vertices(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise InputError(f"vertex {v!r} out of range for n={self.n}")
            m |= 1 << v
        return m

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.nbr == other.nbr

    def __hash__(self) -> int:
        return hash(self.nbr)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class BicoloredGraph:
    """A graph together with the set of vertices that must be dominated."""

    graph: Graph
    mask: int

    def __post_init__(self):
        if self.mask & ~self.graph.full:
            raise InputError("prescribed set is not a subset of the vertex set")

    @classmethod
    def of(cls, graph: Graph, prescribed: Optional[Iterable[int]] = None) -> "BicoloredGraph":
        if prescribed is None:
            return cls(graph, graph.full)
        return cls(graph, graph.check_vertices(prescribed))

    @property
    def prescribed(self) -> frozenset[int]:
        return to_set(self.mask)


def as_bicolored(g: "Graph | BicoloredGraph") -> BicoloredGraph:
    return g if isinstance(g, BicoloredGraph) else BicoloredGraph(g, g.full)


# -- mask-level domination predicates (hot paths) ---------------------------


def domination_counts(closed: Sequence[int], d: int) -> tuple[int, int]:
    """Return ``(once, twice)``: vertices dominated at least once / twice by ``d``."""
    once = twice = 0
    while d:
        low = d & -d
        c = closed[low.bit_length() - 1]
        twice |= once & c
        once |= c
        d ^= low
    return once, twice


def is_min_dom_mask(closed: Sequence[int], a: int, d: int) -> bool:
    once = twice = 0
    m = d
    while m:
        low = m & -m
        c = closed[low.bit_length() - 1]
        twice |= once & c
        once |= c
        m ^= low
    if a & ~once:
        return False
    a_priv = a & ~twice
    m = d
    while m:
        low = m & -m
        if not closed[low.bit_length() - 1] & a_priv:
            return False
        m ^= low
    return True


# -- public set-level API ----------------------------------------------------


def closed_neighborhood(g: Graph, x: Iterable[int]) -> frozenset[int]:
    return to_set(g.closed_of(g.check_vertices(x)))


def private_neighbors(g: Graph, s: Iterable[int], x: int) -> frozenset[int]:
    """Vertices dominated by ``x`` and by no other member of ``s``."""
    sm = g.check_vertices(s)
    if not (isinstance(x, int) and 0 <= x < g.n and (sm >> x) & 1):
        raise InputError(f"vertex {x} is not a member of the set")
    return to_set(g.closed[x] & ~g.closed_of(sm & ~(1 << x)))


def is_minimal_dominating(g: Graph, a: Iterable[int], d: Iterable[int]) -> bool:
    """True iff ``d`` dominates ``a`` and every member keeps a private neighbour in ``a``."""
    return is_min_dom_mask(g.closed, g.check_vertices(a), g.check_vertices(d))


# -- forbidden induced subgraphs ---------------------------------------------


@dataclass(frozen=True)
class ClassReport:
    triangle_free: bool
    diamond_free: bool
    paw_free: bool
    witnesses: dict = field(default_factory=dict)

    def witness(self, cls: str) -> Optional[tuple[int, ...]]:
        return self.witnesses.get(cls)


def _induced_edges(g: Graph, vs: Sequence[int]) -> int:
    return sum(1 for a, b in combinations(vs, 2) if g.adjacent(a, b))


def is_diamond(g: Graph, vs: Sequence[int]) -> bool:
    # K4 minus one edge: 5 edges on 4 vertices
    return len(vs) == 4 and _induced_edges(g, vs) == 5


def is_paw(g: Graph, vs: Sequence[int]) -> bool:
    # triangle plus a pendant: 4 edges, degree sequence (1, 2, 2, 3)
    if len(vs) != 4 or _induced_edges(g, vs) != 4:
        return False
    degs = sorted(sum(1 for b in vs if b != a and g.adjacent(a, b)) for a in vs)
    return degs == [1, 2, 2, 3]


def find_triangle(g: Graph, within: Optional[int] = None) -> Optional[tuple[int, int, int]]:
    """Lexicographically first triangle of ``g[within]``."""
    sub = g.full if within is None else within
    nbr = g.nbr
    for u in iter_bits(sub):
        for v in iter_bits(nbr[u] & sub & ~((2 << u) - 1)):
            common = nbr[u] & nbr[v] & sub & ~((2 << v) - 1)
            if common:
                return u, v, (common & -common).bit_length() - 1
    return None


def find_diamond(g: Graph) -> Optional[tuple[int, ...]]:
    nbr = g.nbr
    for u, v in g.edges():
        common = nbr[u] & nbr[v]
        for a in iter_bits(common):
            rest = common & ~nbr[a] & ~((2 << a) - 1)
            if rest:
                b = (rest & -rest).bit_length() - 1
                return tuple(sorted((u, v, a, b)))
    return None


def find_paw(g: Graph) -> Optional[tuple[int, ...]]:
    nbr = g.nbr
    for u, v in g.edges():
        for w in iter_bits(nbr[u] & nbr[v] & ~((2 << v) - 1)):
            tri = (1 << u) | (1 << v) | (1 << w)
            for x in (u, v, w):
                others = tri & ~(1 << x)
                pend = nbr[x] & ~tri
                for d in iter_bits(pend):
                    if not nbr[d] & others:
                        return tuple(sorted((u, v, w, d)))
    return None


def detect_classes(g: Graph) -> ClassReport:
    witnesses = {}
    tri = find_triangle(g)
    if tri is not None:
        witnesses["triangle"] = tri
    dia = find_diamond(g)
    if dia is not None:
        witnesses["diamond"] = dia
    paw = find_paw(g)
    if paw is not None:
        witnesses["paw"] = paw
    return ClassReport(
        triangle_free=tri is None,
        diamond_free=dia is None,
        paw_free=paw is None,
        witnesses=witnesses,
    )
