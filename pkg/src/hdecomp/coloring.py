"""Proper colouring enumeration and exact chromatic number.

Partitions are generated through restricted-growth assignments (a vertex
may only open colour max_used+1), which enumerates partitions exactly once
up to colour-class relabeling.
"""

from __future__ import annotations

from typing import Iterator

from .errors import SizeError
from .graph import EMBED_CAP, Graph


def proper_colorings(g: Graph, r: int,
                     cap: int = EMBED_CAP) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All proper colourings of g with exactly r non-empty classes, one per
    class-relabeling orbit.  Classes are ordered by smallest member."""
    if g.n > cap:
        raise SizeError(f"colouring enumeration capped at n <= {cap}")
    if r < 1 or r > g.n:
        return
    color = [0] * g.n

    def rec(v: int, used: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if g.n - v < r - used:
            return  # not enough vertices left to open the remaining colours
        if v == g.n:
            if used == r:
                classes = [[] for _ in range(r)]
                for u, c in enumerate(color):
                    classes[c].append(u)
                yield tuple(tuple(c) for c in classes)
            return
        for c in range(min(used + 1, r)):
            if all(color[u] != c for u in range(v) if g.has_edge(u, v)):
                color[v] = c
                yield from rec(v + 1, max(used, c + 1))
        color[v] = 0

    yield from rec(0, 0)


def has_proper_coloring(g: Graph, r: int) -> bool:
    """True iff g is r-colourable (classes may be empty)."""
    if g.n == 0:
        return True
    if r <= 0:
        return False
    color = [0] * g.n

    def rec(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for c in range(min(used + 1, r)):
            if all(color[u] != c for u in range(v) if g.has_edge(u, v)):
                color[v] = c
                if rec(v + 1, max(used, c + 1)):
                    return True
        return False

    return rec(0, 0)


def chromatic_number(g: Graph, cap: int = EMBED_CAP) -> int:
    if g.n > cap:
        raise SizeError(f"chromatic number capped at n <= {cap}")
    if g.n == 0:
        return 0
    for r in range(1, g.n + 1):
        if has_proper_coloring(g, r):
            return r
    raise AssertionError("unreachable: every graph is n-colourable")
