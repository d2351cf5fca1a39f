"""Isomorph-free exhaustive enumeration of small graphs.

Graphs on k+1 vertices are generated by attaching a new vertex with every
possible neighbourhood to each class representative on k vertices, with
canonical-form rejection of duplicates.  Every isomorphism class on k+1
vertices arises this way (delete any vertex), so the enumeration is
exhaustive.  Output order is by canonical encoding, hence deterministic.
"""

from __future__ import annotations

from typing import Callable, Iterator

from .canon import canonical_key
from .errors import SizeError
from .graph import ENUM_CAP, Graph


def enumerate_graphs(n: int, cap: int = ENUM_CAP) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex graphs."""
    if n > cap:
        raise SizeError(f"whole-class enumeration capped at n <= {cap}, "
                        f"got {n}")
    for key in sorted(level := _level(n, None)):
        yield level[key]


def enumerate_graphs_filtered(n: int, keep: Callable[[Graph], bool],
                              cap: int = ENUM_CAP,
                              count_node: Callable[[], None] | None = None,
                              ) -> dict[bytes, Graph]:
    """Representatives of n-vertex classes satisfying a subgraph-monotone
    predicate, generated with pruning: a graph failing `keep` is never
    extended.  `count_node` (if given) is called once per extension tried."""
    if n > cap:
        raise SizeError(f"whole-class enumeration capped at n <= {cap}, "
                        f"got {n}")
    return _level(n, keep, count_node)


def _level(n, keep, count_node=None):
    if n == 0:
        return {}
    cur = {None: Graph(1, (0,))}
    g0 = next(iter(cur.values()))
    if keep is not None and not keep(g0):
        return {}
    cur = {canonical_key(g0): g0}
    for k in range(2, n + 1):
        nxt: dict[bytes, Graph] = {}
        for g in cur.values():
            base_rows = list(g.rows) + [0]
            for mask in range(1 << (k - 1)):
                if count_node is not None:
                    count_node()
                rows = list(base_rows)
                rows[k - 1] = mask
                for v in range(k - 1):
                    if mask >> v & 1:
                        rows[v] |= 1 << (k - 1)
                h = Graph(k, tuple(rows))
                if keep is not None and not keep(h):
                    continue
                key = canonical_key(h)
                if key not in nxt:
                    nxt[key] = h
        cur = nxt
    return cur
