"""Exact extremal numbers: ex(n, K_r) in closed form, ex(n, F) for finite
families by isomorph-free generation with family-free pruning, and the
derived biex(n, H).

Records can be persisted to an append-only JSON-lines cache keyed by
(n, canonical family encoding); exact entries are reused on reruns.
"""

from __future__ import annotations

import json
import random
import warnings
from dataclasses import dataclass

from .canon import canonical_key
from .embed import contains_subgraph
from .errors import DomainError
from .family import (GraphFamily, chromatic_excess, decomposition_family,
                     minimal_subfamily)
from .graph import ENUM_CAP, Graph, turan_graph, turan_part_sizes
from .graph6 import emit_graph6, parse_graph6

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    family_key: str
    value: int
    witness: Graph
    status: str  # "exact" | "lower-bound"


def turan_number(n: int, r: int) -> int:
    """Edges of the Turan graph T_{r-1}(n) = ex(n, K_r)."""
    if n < 1 or r < 2:
        raise DomainError("turan_number needs n >= 1, r >= 2")
    sizes = turan_part_sizes(n, r - 1)
    return (n * n - sum(s * s for s in sizes)) // 2


def family_cache_key(graphs) -> str:
    return "|".join(sorted(canonical_key(g).hex() for g in graphs))


def extremal_number(n: int, family: GraphFamily, budget: int = DEFAULT_BUDGET,
                    cap: int = ENUM_CAP,
                    cache_path: str | None = None) -> ExtremalRecord:
    """Maximum edges over n-vertex graphs containing no family member.

    Exact for n <= cap via generation with family-free pruning (a graph
    containing a member is never extended).  Budget counts extension nodes;
    exhaustion degrades status to lower-bound, never a wrong exact.
    """
    patterns = []
    for g in family.graphs():
        if g.n <= n:
            patterns.append(g)
        else:
            warnings.warn(f"family member on {g.n} vertices cannot embed in "
                          f"n={n}; ignored")
    key = family_cache_key(family.graphs())
    if cache_path:
        hit = _cache_lookup(cache_path, n, key)
        if hit is not None:
            return hit

    if not patterns:
        rec = ExtremalRecord(n, key, n * (n - 1) // 2, _complete(n), "exact")
    elif any(p.edge_count() == 1 for p in patterns):
        # a single-edge member (possibly with isolated vertices) fitting in
        # n vertices forbids every edge
        rec = ExtremalRecord(n, key, 0, Graph(n, (0,) * n), "exact")
    elif n > cap:
        rec = _local_search_lower_bound(n, patterns, budget, key)
    else:
        rec = _exhaustive(n, patterns, budget, cap, key)

    _verify_witness(rec, patterns)
    if cache_path and rec.status == "exact":
        _cache_append(cache_path, rec)
    return rec


def _complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n)
                                for v in range(u + 1, n)])


def _free(g, patterns):
    return not any(contains_subgraph(g, p) for p in patterns)


def _exhaustive(n, patterns, budget, cap, key):
    from .enumeration import enumerate_graphs_filtered

    spent = [0]
    exhausted = [False]

    def count_node():
        spent[0] += 1
        if spent[0] > budget:
            exhausted[0] = True
            raise _BudgetStop()

    best = None  # (edges, canon_key, graph)
    try:
        level = enumerate_graphs_filtered(
            n, lambda g: _free(g, patterns), cap=cap, count_node=count_node)
        for ck in sorted(level):
            g = level[ck]
            e = g.edge_count()
            if best is None or e > best[0] or (e == best[0] and ck < best[1]):
                best = (e, ck, g)
    except _BudgetStop:
        if best is None:
            best = (0, b"", Graph(n, (0,) * n))
    status = "lower-bound" if exhausted[0] else "exact"
    return ExtremalRecord(n, key, best[0], best[2], status)


class _BudgetStop(Exception):
    pass


def _local_search_lower_bound(n, patterns, budget, key):
    """Randomized edge-add local search with pattern repair; fixed seed."""
    rng = random.Random(0)
    g = Graph(n, (0,) * n)
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    steps = min(budget, 20 * len(non_edges))
    for _ in range(steps):
        u, v = non_edges[rng.randrange(len(non_edges))]
        if g.has_edge(u, v):
            continue
        h = g.add_edges([(u, v)])
        if _free(h, patterns):
            g = h
    return ExtremalRecord(n, key, g.edge_count(), g, "lower-bound")


def _verify_witness(rec, patterns):
    # independent re-check of the family-freeness of the witness
    if not _free(rec.witness, patterns):
        raise AssertionError("extremal witness contains a family member")


_biex_memo: dict[tuple[bytes, int, int], ExtremalRecord] = {}


def biex(n: int, h: Graph, budget: int = DEFAULT_BUDGET,
         cap: int = ENUM_CAP, cache_path: str | None = None) -> ExtremalRecord:
    """ex(n, F*_H) for the minimal decomposition subfamily of h."""
    memo_key = (canonical_key(h), n, cap)
    hit = _biex_memo.get(memo_key)
    if hit is not None:
        return hit
    fam = minimal_subfamily(decomposition_family(h))
    rec = extremal_number(n, fam, budget=budget, cap=cap,
                          cache_path=cache_path)
    if rec.status == "exact":
        _biex_memo[memo_key] = rec
    return rec


def check_fact_biex_sigma(h: Graph, n: int, budget: int = DEFAULT_BUDGET,
                          cap: int = ENUM_CAP) -> dict:
    """If biex(n,H) < n-1 then the chromatic excess must be 1."""
    rec = biex(n, h, budget=budget, cap=cap)
    if rec.status != "exact":
        raise DomainError("fact check requires an exact biex value")
    sigma = chromatic_excess(h)
    return {
        "biex_value": rec.value,
        "sigma": sigma,
        "consistent": rec.value >= n - 1 or sigma == 1,
    }


# ---------------------------------------------------------------------------
# Cache (JSON lines: {n, family_key, value, witness_graph6, status})

def _cache_lookup(path, n, key):
    try:
        fh = open(path, "r", encoding="ascii")
    except FileNotFoundError:
        return None
    with fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            if rec["n"] == n and rec["family_key"] == key \
                    and rec["status"] == "exact":
                return ExtremalRecord(n, key, rec["value"],
                                      parse_graph6(rec["witness_graph6"]),
                                      "exact")
    return None


def _cache_append(path, rec):
    entry = {"n": rec.n, "family_key": rec.family_key, "value": rec.value,
             "witness_graph6": emit_graph6(rec.witness),
             "status": rec.status}
    with open(path, "a", encoding="ascii", newline="\n") as fh:
        fh.write(json.dumps(entry, sort_keys=True) + "\n")
