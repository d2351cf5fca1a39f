"""Labeled simple undirected graphs on vertex set [n], stored as bit rows.

rows[v] is an integer bitmask of the neighbours of v, so degree and
common-neighbourhood queries are word-parallel.  Graphs are immutable;
edits return new instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError

# Exact-search caps.  Exceeding a cap is an error, never silent truncation.
EMBED_CAP = 16        # subgraph embedding search
ENUM_CAP = 10         # whole-class isomorph-free enumeration
PHI_SCAN_CAP = 8      # phi maximisation over all n-vertex graphs


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    label: str | None = None

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise DomainError("rows length must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise DomainError(f"row {v} references vertices >= n")
            if row >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in range(v):
                if (self.rows[v] >> u & 1) != (self.rows[u] >> v & 1):
                    raise DomainError(f"adjacency not symmetric at ({u},{v})")

    @staticmethod
    def from_edges(n: int, edges, label: str | None = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows), label)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def add_edges(self, edges) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows), self.label)

    def remove_edges(self, edges) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows), self.label)

    def induced(self, vertices) -> "Graph":
        """Induced subgraph; vertex i of the result is vertices[i]."""
        vertices = list(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise DomainError("duplicate vertices in induced subgraph")
        rows = [0] * len(vertices)
        for i, v in enumerate(vertices):
            for u in bits(self.rows[v]):
                j = pos.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(vertices), tuple(rows))

    def permuted(self, perm) -> "Graph":
        """Relabel: vertex v becomes perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            for u in bits(self.rows[v]):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows), self.label)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# Generators

def complete_multipartite(sizes) -> Graph:
    sizes = list(sizes)
    n = sum(sizes)
    part_of = []
    for p, s in enumerate(sizes):
        part_of.extend([p] * s)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if part_of[u] != part_of[v]]
    return Graph.from_edges(n, edges)


def turan_part_sizes(n: int, k: int) -> list[int]:
    """Part sizes of the Turan graph T_k(n), descending, differing by <= 1."""
    q, rem = divmod(n, k)
    return [q + 1] * rem + [q] * (k - rem)


def turan_graph(n: int, k: int) -> Graph:
    if k < 1:
        raise DomainError("Turan graph needs at least one part")
    return complete_multipartite(turan_part_sizes(n, k))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def plant(base: Graph, pattern: Graph, target_vertices) -> tuple[Graph, int]:
    """Insert pattern's edges onto the given base vertices.

    target_vertices[i] hosts pattern vertex i.  Returns the new graph and
    the number of pattern edges that were already present (counted, not an
    error).
    """
    tv = list(target_vertices)
    if len(tv) != pattern.n:
        raise DomainError("target vertex set size must match pattern order")
    if len(set(tv)) != len(tv):
        raise DomainError("target vertices must be distinct")
    overlaps = 0
    new_edges = []
    for u, v in pattern.edges():
        a, b = tv[u], tv[v]
        if base.has_edge(a, b):
            overlaps += 1
        else:
            new_edges.append((a, b))
    return base.add_edges(new_edges), overlaps


# ---------------------------------------------------------------------------
# Named builtin patterns

def named_graph(name: str) -> Graph:
    key = name.lower()
    if key in _BUILTINS:
        return _BUILTINS[key]()
    raise DomainError(f"unknown builtin graph {name!r} "
                      f"(known: {', '.join(sorted(_BUILTINS))})")


def _clique(k):
    return Graph.from_edges(k, [(u, v) for u in range(k)
                                for v in range(u + 1, k)], label=f"k{k}")


def _cycle(k):
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)],
                            label=f"c{k}")


def _bowtie():
    # two triangles sharing vertex 0
    g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    return Graph(g.n, g.rows, "bowtie")


def _k222():
    g = complete_multipartite([2, 2, 2])
    return Graph(g.n, g.rows, "k222")


_BUILTINS = {
    "k3": lambda: _clique(3),
    "k4": lambda: _clique(4),
    "k5": lambda: _clique(5),
    "c4": lambda: _cycle(4),
    "c5": lambda: _cycle(5),
    "c7": lambda: _cycle(7),
    "bowtie": _bowtie,
    "k222": _k222,
}
