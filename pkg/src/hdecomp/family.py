"""Decomposition family of an r-chromatic graph, its minimal subfamily,
chromatic excess, and edge-criticality.

A family member is the graph left after keeping two colour classes of a
proper r-colouring (isolated vertices retained — they matter for
containment).  Each member carries one provenance record (the colouring
and the kept pair) so the deletion pipeline can rebuild the full pattern
around an embedded member.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .canon import canonical_key
from .coloring import chromatic_number, proper_colorings
from .errors import DomainError
from .graph import Graph
from .embed import contains_subgraph


@dataclass(frozen=True)
class FamilyMember:
    graph: Graph
    h_vertices: tuple[int, ...]       # member vertex i is this vertex of H
    coloring: tuple[tuple[int, ...], ...]  # full r-partition of V(H)
    kept_pair: tuple[int, int]        # indices of the two kept classes


@dataclass(frozen=True)
class GraphFamily:
    members: tuple[FamilyMember, ...]
    minimal: bool
    source: str

    def graphs(self) -> list[Graph]:
        return [m.graph for m in self.members]


def decomposition_family(h: Graph, r: int | None = None) -> GraphFamily:
    if r is None:
        r = chromatic_number(h)
    if r < 3:
        raise DomainError(f"decomposition family needs chromatic number >= 3, "
                          f"got {r}")
    if chromatic_number(h) != r:
        raise DomainError("r must equal the chromatic number of the pattern")
    seen: dict[bytes, FamilyMember] = {}
    for classes in proper_colorings(h, r):
        for a in range(r):
            for b in range(a + 1, r):
                verts = tuple(sorted(classes[a] + classes[b]))
                sub = h.induced(verts)
                key = canonical_key(sub)
                if key not in seen:
                    seen[key] = FamilyMember(sub, verts, classes, (a, b))
    members = tuple(seen[k] for k in sorted(seen))
    return GraphFamily(members, False,
                       f"F_H for H={h.label or 'pattern'}")


def minimal_subfamily(fam: GraphFamily) -> GraphFamily:
    """Members minimal under subgraph containment.  Every family member
    contains a kept member (containment is transitive and well-founded),
    which is re-checked on construction."""
    if not fam.members:
        raise DomainError("family must be non-empty")
    graphs = fam.graphs()
    kept = []
    for i, m in enumerate(fam.members):
        if any(j != i and contains_subgraph(m.graph, g)
               for j, g in enumerate(graphs)):
            continue
        kept.append(m)
    for g in graphs:
        if not any(contains_subgraph(g, m.graph) for m in kept):
            raise AssertionError("minimal subfamily fails to cover the family")
    return GraphFamily(tuple(kept), True, fam.source + " (minimal)")


def chromatic_excess(h: Graph) -> int:
    """Smallest colour-class size over all proper chi(h)-colourings."""
    r = chromatic_number(h)
    return min(min(len(c) for c in classes)
               for classes in proper_colorings(h, r))


def min_class_colorings(h: Graph) -> list[tuple[tuple[tuple[int, ...], ...], int]]:
    """All (colouring, class-index) pairs where the class attains the
    chromatic excess, in enumeration order."""
    r = chromatic_number(h)
    sigma = chromatic_excess(h)
    out = []
    for classes in proper_colorings(h, r):
        for i, c in enumerate(classes):
            if len(c) == sigma:
                out.append((classes, i))
    return out


def is_edge_critical(h: Graph) -> bool:
    chi = chromatic_number(h)
    return any(chromatic_number(h.remove_edges([e])) < chi
               for e in h.edges())
