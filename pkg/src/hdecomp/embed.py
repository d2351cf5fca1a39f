"""Backtracking subgraph embedding search (non-induced semantics).

Pattern vertices are processed by descending degree (index as tie-break),
host candidates ascending by index, so results come out in a fixed
deterministic order.  Isolated pattern vertices only claim distinct unused
host vertices, which is what makes patterns like K_2 + isolated vertex
strictly weaker than K_2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError, DomainError, SizeError
from .graph import EMBED_CAP, Graph, bits


@dataclass(frozen=True)
class Embedding:
    pattern: Graph
    host: Graph
    map: tuple[int, ...]  # map[pattern_vertex] = host_vertex

    def check(self) -> None:
        if len(set(self.map)) != self.pattern.n:
            raise DomainError("embedding map is not injective")
        for u, v in self.pattern.edges():
            if not self.host.has_edge(self.map[u], self.map[v]):
                raise DomainError(
                    f"pattern edge ({u},{v}) not mapped to a host edge")

    def edge_set(self) -> frozenset[tuple[int, int]]:
        out = set()
        for u, v in self.pattern.edges():
            a, b = self.map[u], self.map[v]
            out.add((a, b) if a < b else (b, a))
        return frozenset(out)


class SearchBudget:
    """Mutable search-node counter shared across nested searches."""

    def __init__(self, nodes: int):
        self.remaining = nodes

    def spend(self, k: int = 1) -> None:
        self.remaining -= k
        if self.remaining < 0:
            raise BudgetError("search-node budget exhausted")


def find_embeddings(pattern: Graph, host: Graph, limit: int | None = None,
                    constraints=None, cap: int = EMBED_CAP,
                    budget: SearchBudget | None = None) -> list[Embedding]:
    """All embeddings of pattern into host, up to limit.

    constraints: optional dict {pattern_vertex: iterable-or-mask of allowed
    host vertices}.  Returns fewer than limit only when the search space is
    exhausted.
    """
    if pattern.n == 0 or host.n == 0:
        raise DomainError("pattern and host must be non-empty")
    if limit is not None and limit < 1:
        raise DomainError("limit must be >= 1")
    if host.n > cap:
        raise SizeError(f"embedding search capped at host n <= {cap}, "
                        f"got {host.n}")
    if pattern.n > host.n:
        return []

    allowed = [(1 << host.n) - 1] * pattern.n
    if constraints:
        for pv, hs in constraints.items():
            allowed[pv] = hs if isinstance(hs, int) else _mask(hs)

    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    results: list[Embedding] = []
    mapping = [-1] * pattern.n

    def rec(depth: int, used: int) -> bool:
        if budget is not None:
            budget.spend()
        if depth == pattern.n:
            results.append(Embedding(pattern, host, tuple(mapping)))
            return limit is not None and len(results) >= limit
        pv = order[depth]
        cand = allowed[pv] & ~used
        for nb in bits(pattern.rows[pv]):
            hv = mapping[nb]
            if hv >= 0:
                cand &= host.rows[hv]
        for hv in bits(cand):
            mapping[pv] = hv
            if rec(depth + 1, used | (1 << hv)):
                return True
        mapping[pv] = -1
        return False

    rec(0, 0)
    return results


def contains_subgraph(host: Graph, pattern: Graph, cap: int = EMBED_CAP,
                      budget: SearchBudget | None = None) -> bool:
    """Non-induced containment, isolated-vertex aware: the edged part must
    embed and the host must have enough spare vertices for the isolated
    pattern vertices."""
    if pattern.n > host.n:
        return False
    if pattern.n == 0:
        return True
    edged = [v for v in range(pattern.n) if pattern.rows[v]]
    if not edged:
        return True
    core = pattern.induced(edged)
    if core.edge_count() > host.edge_count():
        return False
    return bool(find_embeddings(core, host, limit=1, cap=cap, budget=budget))


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
