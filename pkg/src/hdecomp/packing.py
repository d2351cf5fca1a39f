"""Exact maximum edge-disjoint packing of a pattern, phi(G), and the
maximum of phi over all n-vertex graphs.

phi_H(G) = e(G) - (e(H)-1) * (maximum packing size): every H-part saves
e(H)-1 parts relative to covering its edges by singles, so minimising the
part count is exactly maximising the packing.  The packing itself is a
branch-and-bound over the pre-enumerated copy list (copies deduplicated by
edge set so pattern automorphisms do not inflate the search).
"""

from __future__ import annotations

from dataclasses import dataclass

from .embed import Embedding, find_embeddings
from .enumeration import enumerate_graphs
from .errors import DomainError, SizeError
from .graph import PHI_SCAN_CAP, Graph

COPY_CAP = 10**5


@dataclass(frozen=True)
class Packing:
    host: Graph
    pattern: Graph
    copies: tuple[Embedding, ...]


@dataclass(frozen=True)
class HDecomposition:
    host: Graph
    pattern: Graph
    copies: tuple[Embedding, ...]
    singles: tuple[tuple[int, int], ...]

    def part_count(self) -> int:
        return len(self.copies) + len(self.singles)


def enumerate_copies(host: Graph, pattern: Graph, cap: int,
                     copy_cap: int = COPY_CAP) -> list[Embedding]:
    """Distinct pattern copies (one embedding per mapped edge set)."""
    if pattern.edge_count() < 2:
        raise DomainError("pattern must have at least 2 edges")
    if pattern.n > host.n:
        return []
    seen: dict[frozenset, Embedding] = {}
    for emb in find_embeddings(pattern, host, cap=cap):
        es = emb.edge_set()
        if es not in seen:
            seen[es] = emb
            if len(seen) > copy_cap:
                raise SizeError(f"copy count exceeds cap {copy_cap}")
    return [seen[k] for k in sorted(seen, key=lambda s: sorted(s))]


def max_packing(host: Graph, pattern: Graph, cap: int | None = None) -> Packing:
    """Maximum-cardinality set of pairwise edge-disjoint pattern copies."""
    if cap is None:
        cap = max(host.n, 16)
    copies = enumerate_copies(host, pattern, cap)
    edge_index = {e: i for i, e in enumerate(host.edges())}
    masks = []
    for emb in copies:
        m = 0
        for e in emb.edge_set():
            m |= 1 << edge_index[e]
        masks.append(m)
    # ascending by minimum incident edge index, ties by full edge tuple
    order = sorted(range(len(copies)),
                   key=lambda i: sorted(edge_index[e]
                                        for e in copies[i].edge_set()))
    masks = [masks[i] for i in order]
    copies = [copies[i] for i in order]

    e_host = host.edge_count()
    e_pat = pattern.edge_count()
    best_count = -1
    best_choice: list[int] = []
    chosen: list[int] = []

    def rec(i: int, used: int, count: int) -> None:
        nonlocal best_count, best_choice
        if count + (e_host - used.bit_count()) // e_pat <= best_count:
            return
        if i == len(masks):
            if count > best_count:
                best_count = count
                best_choice = chosen.copy()
            return
        if masks[i] & used:
            rec(i + 1, used, count)
            return
        chosen.append(i)
        rec(i + 1, used | masks[i], count + 1)
        chosen.pop()
        rec(i + 1, used, count)

    rec(0, 0, 0)
    return Packing(host, pattern, tuple(copies[i] for i in best_choice))


def phi_exact(host: Graph, pattern: Graph,
              cap: int | None = None) -> tuple[int, HDecomposition]:
    """Minimum part count over decompositions into pattern copies and
    single edges, with a witness decomposition."""
    packing = max_packing(host, pattern, cap=cap)
    covered = set()
    for emb in packing.copies:
        covered |= emb.edge_set()
    singles = tuple(e for e in host.edges() if e not in covered)
    dec = HDecomposition(host, pattern, packing.copies, singles)
    t = host.edge_count() - (pattern.edge_count() - 1) * len(packing.copies)
    assert dec.part_count() == t
    return t, dec


def phi_max_over_n(n: int, pattern: Graph,
                   cap: int = PHI_SCAN_CAP) -> tuple[int, list[Graph], int]:
    """max of phi over all n-vertex graphs; returns (value, witnesses,
    graphs_scanned).  Witnesses are every attaining isomorphism class."""
    if n > cap:
        raise SizeError(f"phi scan capped at n <= {cap}, got {n}")
    best = -1
    witnesses: list[Graph] = []
    scanned = 0
    for g in enumerate_graphs(n):
        scanned += 1
        t, _ = phi_exact(g, pattern)
        if t > best:
            best = t
            witnesses = [g]
        elif t == best:
            witnesses.append(g)
    return best, witnesses, scanned
