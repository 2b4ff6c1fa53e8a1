"""Textual graph formats: standard graph6 and a plain edge-list format.

graph6 packs the upper-triangle adjacency bits column-major, six bits
per printable byte (offset 63); the header is n+63 for n <= 62 and the
long form '~' + three 6-bit chunks up to n = 258047.  Encoding and
decoding are bit-exact inverses.

The edge-list format is: first non-comment line "n", then one "u v"
pair per line, 0-based, '#' starts a comment.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Graph

_SHORT_MAX = 62
_LONG_MAX = 258047


def encode_graph6(g: Graph) -> str:
    if g.n > _LONG_MAX:
        raise ValueError(f"graph6 supports at most {_LONG_MAX} vertices")
    out = bytearray()
    if g.n <= _SHORT_MAX:
        out.append(g.n + 63)
    else:
        out.append(126)
        out.extend(((g.n >> shift) & 0x3F) + 63 for shift in (12, 6, 0))
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = acc << 1 | (g.adj[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def decode_graph6(text: str) -> Graph:
    data = text.strip().encode("ascii")
    if not data:
        raise ParseError("empty graph6 string", offset=0)
    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ParseError("graph6 >258047 vertices not supported", offset=1)
        if len(data) < 4:
            raise ParseError("truncated graph6 long-form header", offset=len(data))
        chunks = [data[i] - 63 for i in (1, 2, 3)]
        if any(not 0 <= c < 64 for c in chunks):
            raise ParseError("invalid graph6 header byte", offset=1)
        n = chunks[0] << 12 | chunks[1] << 6 | chunks[2]
        pos = 4
    else:
        n = data[0] - 63
        if not 0 <= n <= _SHORT_MAX:
            raise ParseError("invalid graph6 header byte", offset=0)
        pos = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise ParseError(
            f"graph6 body has {len(data) - pos} bytes, expected {nbytes}", offset=pos
        )
    bitstream = 0
    for i, byte in enumerate(data[pos:]):
        val = byte - 63
        if not 0 <= val < 64:
            raise ParseError("invalid graph6 body byte", offset=pos + i)
        bitstream = bitstream << 6 | val
    bitstream >>= 6 * nbytes - nbits  # drop padding
    edges = []
    for v in range(1, n):
        for u in range(v):
            nbits -= 1
            if bitstream >> nbits & 1:
                edges.append((u, v))
    return Graph.from_edge_list(n, edges)


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("first line must be the vertex count", line=lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"bad vertex count {fields[0]!r}", line=lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", line=lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", line=lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range in {line!r}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("no vertex count line found", line=1)
    return Graph.from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
