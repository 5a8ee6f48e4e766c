"""graph6 and edge-list codecs.

graph6 packs the upper triangle of the adjacency matrix column by column,
x(0,1), x(0,2), x(1,2), x(0,3), ..., six bits per printable character
(value + 63), most significant bit first, zero padded. Orders up to 62 use a
one-character header; orders up to 258047 use ``~`` plus three characters.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError, build_graph

log = logging.getLogger(__name__)

SHORT_MAX = 62
LONG_MAX = 258047


class Graph6Error(ValueError):
    """A malformed graph6 record. ``offset`` is the 0-based byte offset in the line."""

    def __init__(self, message: str, offset: int | None = None, record: int | None = None):
        self.offset = offset
        self.record = record
        where = []
        if record is not None:
            where.append(f"record {record}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class EdgeListError(ValueError):
    pass


@dataclass(frozen=True)
class Graph6Record:
    line: str

    def decode(self) -> Graph:
        return decode_graph6(self.line)


def _header(n: int) -> str:
    if 1 <= n <= SHORT_MAX:
        return chr(63 + n)
    if SHORT_MAX < n <= LONG_MAX:
        return "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))
    raise Graph6Error(f"order {n} outside the supported graph6 range 1..{LONG_MAX}")


def encode_graph6(g: Graph) -> str:
    n = g.n
    out = [_header(n)]
    rows = g.rows
    acc = 0
    nbits = 0
    for v in range(1, n):
        row = rows[v]
        for u in range(v):
            acc = acc << 1 | (row >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def record_length(n: int) -> int:
    """Characters in the graph6 record of an ``n``-vertex graph (header included)."""
    body = -(-(n * (n - 1) // 2) // 6)
    return (1 if n <= SHORT_MAX else 4) + body


def decode_graph6(line: str, record: int | None = None) -> Graph:
    """Parse one graph6 record; trailing newline characters are ignored."""
    line = line.rstrip("\r\n")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
        base = len(">>graph6<<")
    else:
        base = 0
    if not line:
        raise Graph6Error("empty record", base, record)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126", base + i, record)
    if line[0] != "~":
        n = ord(line[0]) - 63
        pos = 1
    else:
        if len(line) < 4:
            raise Graph6Error("truncated extended header", base + len(line), record)
        if line[1] == "~":
            raise Graph6Error("orders above 258047 are not supported", base + 1, record)
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - 63)
        if n <= SHORT_MAX:
            raise Graph6Error(f"order {n} must use the short header", base + 1, record)
        pos = 4
    if n < 1:
        raise Graph6Error("order 0 graphs are not supported", base, record)
    need = -(-(n * (n - 1) // 2) // 6)
    body = line[pos:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated bit vector: need {need} characters, found {len(body)}",
            base + len(line),
            record,
        )
    if len(body) > need:
        raise Graph6Error("unexpected characters after the bit vector", base + pos + need, record)

    rows = [0] * n
    u, v = 0, 1
    total = n * (n - 1) // 2
    k = 0
    for ci, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if k < total:
                if bit:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                u += 1
                if u == v:
                    u = 0
                    v += 1
            elif bit:
                raise Graph6Error("nonzero padding bits", base + pos + ci, record)
            k += 1
    return Graph.unchecked(n, tuple(rows))


def stream_decode(
    lines: Iterable[str], skip_bad: bool = False
) -> Iterator[tuple[int, Graph]]:
    """Yield ``(index, graph)`` for each record, where ``index`` is the 1-based line number.

    Blank lines and ``>`` banner lines are skipped but still counted, so
    indices always point at physical lines. With ``skip_bad`` a malformed
    record is logged and dropped instead of raising.
    """
    for index, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith(">") and not line.startswith(">>graph6<<"):
            continue
        if line.startswith(">>graph6<<") and len(line) == len(">>graph6<<"):
            continue
        try:
            g = decode_graph6(line, record=index)
        except Graph6Error as exc:
            if not skip_bad:
                raise
            log.warning("skipping malformed record: %s", exc)
            continue
        yield index, g


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(encode_graph6(g) + "\n")
        count += 1
    return count


def encode_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def stream_edgelist(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Read consecutive ``n m`` blocks, each followed by ``m`` lines ``u v``.

    Yields ``(line_number_of_header, graph)``. Blank lines and ``#`` comments
    are ignored.
    """
    it = iter(enumerate(lines, start=1))

    def next_tokens() -> tuple[int, list[str]] | None:
        for lineno, raw in it:
            text = raw.split("#", 1)[0].strip()
            if text:
                return lineno, text.split()
        return None

    while True:
        head = next_tokens()
        if head is None:
            return
        lineno, toks = head
        if len(toks) != 2:
            raise EdgeListError(f"line {lineno}: expected header 'n m', got {' '.join(toks)!r}")
        try:
            n, m = int(toks[0]), int(toks[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: header values must be integers") from None
        edges = []
        for _ in range(m):
            nxt = next_tokens()
            if nxt is None:
                raise EdgeListError(f"line {lineno}: expected {m} edges, input ended after {len(edges)}")
            eline, etoks = nxt
            if len(etoks) != 2:
                raise EdgeListError(f"line {eline}: expected 'u v'")
            try:
                edges.append((int(etoks[0]), int(etoks[1])))
            except ValueError:
                raise EdgeListError(f"line {eline}: vertex labels must be integers") from None
        try:
            yield lineno, build_graph(n, edges)
        except GraphError as exc:
            raise EdgeListError(f"line {lineno}: {exc}") from None
