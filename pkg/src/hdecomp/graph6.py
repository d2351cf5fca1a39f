"""graph6 text format: parse and emit, plus multi-line file helpers.

Single-byte size header (n <= 62), then the upper-triangle adjacency bits
column-major, 6 bits per printable byte offset by 63.  Trailing pad bits
must be zero.  Comment lines starting with '#' are ignored in files.
"""

from __future__ import annotations

from .errors import DomainError, ParseError
from .graph import Graph


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if not line:
        raise ParseError("empty graph6 line")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = line.encode("ascii", errors="replace")
    first = data[0]
    if not 63 <= first <= 126:
        raise ParseError(f"byte 0 out of printable graph6 range: {first}")
    if first == 126:
        raise ParseError("byte 0: extended size headers (n > 62) unsupported")
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise ParseError(f"expected {nbytes} body bytes for n={n}, "
                         f"got {len(body)} (byte {1 + len(body)})")
    bitbuf = 0
    for off, b in enumerate(body):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {off + 1} out of printable range: {b}")
        bitbuf = bitbuf << 6 | (b - 63)
    total = 6 * nbytes
    pad = total - nbits
    if pad and bitbuf & ((1 << pad) - 1):
        raise ParseError(f"nonzero trailing pad bits in byte {nbytes}")
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bitbuf >> (total - 1 - idx) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    if g.n > 62:
        raise DomainError("graph6 emission limited to n <= 62")
    out = [g.n + 63]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = acc << 1 | (g.rows[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_graph6_lines(text: str) -> list[Graph]:
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graphs.append(parse_graph6(line))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return graphs


def read_graph6_file(path) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return parse_graph6_lines(fh.read())


def write_graph6_file(path, graphs) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")
