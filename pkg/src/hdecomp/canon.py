"""Canonical labeling by iterative refinement plus backtracking.

The ordered partition of the vertices is refined by neighbour counts until
stable; non-discrete cells are resolved by individualizing each member in
turn and taking the minimum encoding.  Self-contained on purpose: the
inputs are tiny and correctness is property-tested against brute-force
permutation isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeError
from .graph import EMBED_CAP, Graph, bits


@dataclass(frozen=True)
class CanonicalForm:
    encoding: bytes
    relabeling: tuple[int, ...]  # relabeling[old_vertex] = canonical position


def canonical_form(g: Graph, cap: int = EMBED_CAP) -> CanonicalForm:
    if g.n > cap:
        raise SizeError(f"canonical form capped at n <= {cap}, got {g.n}")
    encoding, perm = _canonical(g.n, g.rows)
    return CanonicalForm(encoding, perm)


def canonical_key(g: Graph, cap: int = EMBED_CAP) -> bytes:
    return canonical_form(g, cap).encoding


def are_isomorphic(a: Graph, b: Graph, cap: int = EMBED_CAP) -> bool:
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    return canonical_key(a, cap) == canonical_key(b, cap)


@lru_cache(maxsize=200_000)
def _canonical(n: int, rows: tuple[int, ...]) -> tuple[bytes, tuple[int, ...]]:
    if n == 0:
        return bytes([0]), ()
    best = [None, None]  # encoding, perm
    _search(n, rows, _refine(n, rows, [list(range(n))]), best)
    return best[0], best[1]


def _refine(n, rows, cells):
    """Split cells by neighbour counts into the current cells until stable."""
    cells = [sorted(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [_cell_mask(c) for c in cells]
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                sig.setdefault(key, []).append(v)
            if len(sig) > 1:
                changed = True
            for key in sorted(sig):
                new_cells.append(sig[key])
        cells = new_cells
    return cells


def _cell_mask(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _search(n, rows, cells, best):
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        perm = [0] * n  # perm[old] = new position
        for pos, cell in enumerate(cells):
            perm[cell[0]] = pos
        enc = _encode(n, rows, perm)
        if best[0] is None or enc < best[0]:
            best[0] = enc
            best[1] = tuple(perm)
        return
    cell = cells[target]
    tried: list[int] = []
    for v in cell:
        # twins (swap is an automorphism) give identical encodings: skip
        if any(rows[v] & ~(1 << u) == rows[u] & ~(1 << v) for u in tried):
            continue
        tried.append(v)
        branched = (cells[:target]
                    + [[v], [u for u in cell if u != v]]
                    + cells[target + 1:])
        _search(n, rows, _refine(n, rows, branched), best)


def _encode(n, rows, perm):
    # byte 0: n; then upper-triangle bits of the relabeled adjacency,
    # row-major, packed big-endian.
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    out = bytearray([n])
    acc = 0
    nbits = 0
    for i in range(n):
        ri = rows[inv[i]]
        for j in range(i + 1, n):
            acc = acc << 1 | (ri >> inv[j] & 1)
            nbits += 1
            if nbits == 8:
                out.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(acc << (8 - nbits))
    return bytes(out)
