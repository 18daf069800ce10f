"""Text formats: the ``n m`` edge list, DOT export and label files."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import ParseError
from .graph import Graph


def parse_graph(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` lines are comments."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("missing header line 'n m'", 1)
    lineno, header = rows[0]
    if len(header) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = (_int(tok, lineno) for tok in header)
    if n < 0 or m < 0:
        raise ParseError("n and m must be non-negative", lineno)
    body = rows[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"expected {m} edge lines, found {len(body)}", line)
    edges = set()
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        u, v = (_int(tok, lineno) for tok in toks)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range for n={n}", lineno)
        if u == v:
            raise ParseError("self-loops are not allowed", lineno)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ParseError(f"duplicate edge {e[0]} {e[1]}", lineno)
        edges.add(e)
    return Graph.from_edges(n, edges)


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"not a decimal integer: {tok!r}", lineno) from None


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {u};" for u in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(g: Graph) -> str:
    return "u,v\n" + "".join(f"{u},{v}\n" for u, v in g.edges())


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def format_label_file(labels: Iterable[str], scheme: str, n=None, D=None, seed=None) -> str:
    """Label file: a ``# scheme=...`` header, then ``vertex<TAB>bits`` lines."""

    def show(x):
        return "-" if x is None else str(x)

    out = [f"# scheme={scheme} n={show(n)} D={show(D)} seed={show(seed)}"]
    out += [f"{u}\t{bits}" for u, bits in enumerate(labels)]
    return "\n".join(out) + "\n"


def parse_label_file(text: str) -> tuple[dict, list[str]]:
    header: dict = {}
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip(" \r\n")  # keep the tab before an empty label
        if not line.strip():
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                key, _, value = tok.partition("=")
                header[key] = None if value == "-" else value
            continue
        parts = line.split("\t")
        if len(parts) != 2 or set(parts[1]) - {"0", "1"}:
            raise ParseError("label line must be 'vertex<TAB>bits'", lineno)
        labels[_int(parts[0], lineno)] = parts[1]
    if sorted(labels) != list(range(len(labels))):
        raise ParseError("vertex ids must be 0..n-1")
    return header, [labels[u] for u in range(len(labels))]
