"""graph6 encoding and decoding (Brendan McKay's format, as used by nauty)."""

from __future__ import annotations

from .errors import ParseError
from .graph import Graph

HEADER = ">>graph6<<"


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, bytes consumed)`` for the size prefix of ``data``."""
    if not data:
        raise ParseError("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise ParseError("truncated graph6 size field", len(data))
    n = 0
    for b in data[start:start + width]:
        n = (n << 6) | (b - 63)
    return n, start + width


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.

    An optional ``>>graph6<<`` header and surrounding whitespace are ignored.
    Errors report the byte offset (relative to the stripped string) of the
    offending character.
    """
    if isinstance(text, str):
        try:
            data = text.strip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII character in graph6 string", exc.start) from None
    else:
        data = text.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise ParseError(f"character {chr(b)!r} outside graph6 range 63..126", i)

    n, pos = _decode_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise ParseError(f"truncated graph6 body: expected {nbytes} bytes, got {len(body)}", len(data))
    if len(body) > nbytes:
        raise ParseError("trailing bytes after graph6 body", pos + nbytes)

    rows = [0] * n
    k = 0
    i, j = 0, 1
    for b in body:
        chunk = b - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if chunk >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def encode_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    out = bytearray(_encode_size(g.n))
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc + 63)
                acc = nacc = 0
    if nacc:
        out.append((acc << (6 - nacc)) + 63)
    s = out.decode("ascii")
    return HEADER + s if header else s
