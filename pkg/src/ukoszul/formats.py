"""graph6, edge-list and DOT input/output."""

from __future__ import annotations

from .errors import IndexOutOfRange, LoopEdge, MalformedGraph6, MalformedInput
from .graph import Graph, build_graph, check_cap, graph_from_bits, graph_to_bits


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    nbits = g.n * (g.n - 1) // 2
    if not nbits:
        return _encode_n(g.n)
    # bit k of the pair-order integer is the k-th bit of the stream
    stream = format(graph_to_bits(g), f"0{nbits}b")[::-1]
    stream += "0" * (-nbits % 6)
    body = "".join(chr(int(stream[k:k + 6], 2) + 63) for k in range(0, len(stream), 6))
    return _encode_n(g.n) + body


def parse_graph6(line: str, *, cap: int | None = None) -> Graph:
    """Decode one graph6 string.  Trailing newline characters are ignored.

    The decoder is strict so that ``emit_graph6(parse_graph6(s)) == s``:
    nonzero padding bits and wrong lengths are rejected.
    """
    s = line.rstrip("\r\n")
    if not s:
        raise MalformedGraph6("empty graph6 string", offset=0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"character {ch!r} outside the graph6 range", offset=pos)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(s) >= 2 and vals[1] != 63:
        if len(s) < 4:
            raise MalformedGraph6("truncated 4-byte size header", offset=len(s))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
        if n <= 62:
            raise MalformedGraph6("long size header used for n <= 62", offset=0)
    else:
        if len(s) < 8:
            raise MalformedGraph6("truncated 8-byte size header", offset=len(s))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
        if n <= 258047:
            raise MalformedGraph6("8-byte size header used for small n", offset=0)
    check_cap(n, cap)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(s) - pos != nbytes:
        raise MalformedGraph6(f"expected {nbytes} data bytes for n={n}, found {len(s) - pos}",
                              offset=min(len(s), pos + nbytes))
    data = vals[pos:]
    pad = nbytes * 6 - nbits
    if pad and data[-1] & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits", offset=len(s) - 1)
    if not nbits:
        return Graph(n, (0,) * n)
    stream = "".join(format(v, "06b") for v in data)[:nbits]
    return graph_from_bits(n, int(stream[::-1], 2))


def parse_edgelist(text: str, *, cap: int | None = None) -> Graph:
    """Parse ``n <count>`` followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are skipped.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise MalformedInput("first line must be 'n <count>'", line=lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise MalformedInput(f"vertex count {parts[1]!r} is not an integer", line=lineno) from None
            if n < 0:
                raise MalformedInput("negative vertex count", line=lineno)
            check_cap(n, cap)
            continue
        if len(parts) != 2:
            raise MalformedInput(f"expected 'u v', got {line!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedInput(f"non-integer vertex in {line!r}", line=lineno) from None
        if u == v:
            raise LoopEdge(f"loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise MalformedInput("missing 'n <count>' header", line=1)
    return build_graph(n, edges, cap=cap)


def emit_edgelist(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def emit_dot(g: Graph, classification=None) -> str:
    """Graphviz rendering.  Witness vertices and edges are drawn in red."""
    marked: set[int] = set()
    label = None
    if classification is not None:
        label = classification.verdict.value
        if classification.witness is not None:
            marked = set(classification.witness.vertices)
    out = ["graph G {"]
    if label:
        out.append(f'  label="{label}";')
    out.append("  node [shape=circle];")
    for v in range(g.n):
        attrs = ' [color=red, style=filled, fillcolor="#ffd0d0"]' if v in marked else ""
        out.append(f"  {v}{attrs};")
    for u, v in g.edges():
        attrs = " [color=red, penwidth=2]" if u in marked and v in marked else ""
        out.append(f"  {u} -- {v}{attrs};")
    out.append("}")
    return "\n".join(out) + "\n"
