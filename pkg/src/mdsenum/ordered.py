"""Ordered generation over the parent tree of a peeling, and replay dedup.

The tree has a node ``(D, i)`` for every minimal dominating set ``D`` of
``levels[i]``; the parent of ``(D, i+1)`` is obtained by repeatedly
dropping the smallest member without a private neighbour in ``levels[i]``.
Its leaves are exactly the minimal dominating sets of the prescribed set, so
a depth-first walk that only expands children with the right parent lists
every solution once.  Children are produced lazily by an extension provider
and each level keeps one paused cursor on the walk stack.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .errors import ContractViolation
from .graph import BicoloredGraph, Graph, domination_counts, is_min_dom_mask
from .peeling import Peeling, peel_mask

__all__ = [
    "SolutionStream",
    "ExtensionContext",
    "Audit",
    "parent",
    "check_parent",
    "dedup",
    "enumerate_ordered",
    "ordered_masks",
]


class SolutionStream:
    """A restartable producer of solutions.

    Every call to :meth:`start` returns a fresh cursor (an iterator) that
    must replay exactly the same sequence as any other cursor of the same
    stream.  Iterating the stream directly starts a new cursor.
    """

    __slots__ = ("_factory",)

    def __init__(self, factory: Callable[[], Iterable]):
        self._factory = factory

    def start(self) -> Iterator:
        return iter(self._factory())

    __iter__ = start

    def map(self, fn: Callable) -> "SolutionStream":
        factory = self._factory
        return SolutionStream(lambda: map(fn, factory()))

    @classmethod
    def of(cls, items: Iterable) -> "SolutionStream":
        items = tuple(items)
        return cls(lambda: items)


class Audit:
    """Optional observer threaded through an enumeration for test-time checks.

    Records per-level node counts of the parent tree, per-node extension
    counts, split-graph bound data from the triangle-free provider and the
    deepest cursor stack seen.  The base class records nothing.
    """

    def node(self, g: Graph, peel: Peeling, i: int, d_star: int) -> None:
        pass

    def extensions(self, g: Graph, peel: Peeling, i: int, d_star: int, produced: int) -> None:
        pass

    def split_bound(self, n: int, dh: int, candidates: int) -> None:
        pass

    def stack_depth(self, depth: int) -> None:
        pass


@dataclass(frozen=True)
class ExtensionContext:
    """Everything a provider needs to list the candidate extensions of ``(d_star, i)``.

    ``target`` is the part of ``levels[i+1]`` left undominated by ``d_star``
    (computed once, in the original graph) and ``s`` is ``target`` without
    the peeled vertex ``v``.  Providers may swap ``graph`` for a working copy
    that differs only in edges irrelevant to dominating ``target``.
    """

    graph: Graph
    peel: Peeling
    i: int
    d_star: int
    target: int
    audit: Optional[Audit] = None

    @classmethod
    def at(cls, g: Graph, peel: Peeling, i: int, d_star: int, audit: Optional[Audit] = None) -> "ExtensionContext":
        return cls(g, peel, i, d_star, peel.levels[i + 1] & ~g.closed_of(d_star), audit)

    @property
    def v(self) -> int:
        return self.peel.vertices[self.i]

    @property
    def s(self) -> int:
        return self.target & ~(1 << self.v)

    @property
    def v_dominated(self) -> bool:
        return not (self.target >> self.v) & 1

    def is_candidate(self, x: int) -> bool:
        return is_min_dom_mask(self.graph.closed, self.target, x)


ExtensionProvider = Callable[[ExtensionContext], SolutionStream]


def _parent_mask(g: Graph, below: int, d: int) -> int:
    closed = g.closed
    while True:
        _, twice = domination_counts(closed, d)
        keep = below & ~twice
        m = d
        while m:
            low = m & -m
            if not closed[low.bit_length() - 1] & keep:
                d ^= low
                break
            m ^= low
        else:
            return d


def parent(bg: BicoloredGraph, peel: Peeling, d: int, i: int) -> tuple[int, int]:
    """Parent ``(d_star, i-1)`` of the tree node ``(d, i)``."""
    if not 1 <= i <= peel.depth:
        raise ContractViolation(f"level {i} outside 1..{peel.depth}")
    if not is_min_dom_mask(bg.graph.closed, peel.levels[i], d):
        raise ContractViolation("set does not minimally dominate the peeling level")
    return _parent_mask(bg.graph, peel.levels[i - 1], d), i - 1


def check_parent(bg: BicoloredGraph, peel: Peeling, d_child: int, i: int, d_star: int) -> bool:
    if not 1 <= i <= peel.depth:
        return False
    g = bg.graph
    return is_min_dom_mask(g.closed, peel.levels[i], d_child) and (
        _parent_mask(g, peel.levels[i - 1], d_child) == d_star
    )


def dedup(stream: SolutionStream) -> SolutionStream:
    """Drop repeated outputs of a deterministic stream without remembering them.

    For the ``k``-th output ``y`` a second cursor is replayed until it first
    produces ``y``; ``y`` is new iff that happens at position ``k``.  At most
    two cursors are alive at any time and no solution is stored.
    """

    def run():
        main = stream.start()
        for k, y in enumerate(main):
            replay = stream.start()
            j = 0
            for z in replay:
                if z == y:
                    break
                if j == k:
                    raise ContractViolation("stream replay diverged: inner stream is not deterministic")
                j += 1
            else:
                raise ContractViolation("stream replay ended early: inner stream is not deterministic")
            close = getattr(replay, "close", None)
            if close is not None:
                close()
            if j == k:
                yield y

    return SolutionStream(run)


def ordered_masks(g: Graph, a: int, ext: ExtensionProvider, audit: Optional[Audit] = None) -> SolutionStream:
    """Minimal dominating sets of ``g(a)`` as bitmasks, via the parent tree."""

    def run():
        if not a:
            yield 0
            return
        peel = peel_mask(g, a)
        closed, levels, p = g.closed, peel.levels, peel.depth
        if audit is not None:
            audit.node(g, peel, 0, 0)
        # one frame per tree level: (d_star, i, cursor, produced)
        stack = [[0, 0, ext(ExtensionContext.at(g, peel, 0, 0, audit)).start(), 0]]
        while stack:
            frame = stack[-1]
            d_star, i, cursor, _ = frame
            x = next(cursor, None)
            if x is None:
                if audit is not None:
                    audit.extensions(g, peel, i, d_star, frame[3])
                stack.pop()
                continue
            frame[3] += 1
            d = d_star | x
            if not is_min_dom_mask(closed, levels[i + 1], d):
                continue
            if _parent_mask(g, levels[i], d) != d_star:
                continue
            if audit is not None:
                audit.node(g, peel, i + 1, d)
            if i + 1 == p:
                yield d
            else:
                stack.append([d, i + 1, ext(ExtensionContext.at(g, peel, i + 1, d, audit)).start(), 0])
                if audit is not None:
                    audit.stack_depth(len(stack))

    return SolutionStream(run)


def enumerate_ordered(bg: BicoloredGraph, ext: ExtensionProvider, audit: Optional[Audit] = None) -> SolutionStream:
    return ordered_masks(bg.graph, bg.mask, ext, audit)
