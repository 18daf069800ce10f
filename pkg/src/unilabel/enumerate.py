"""Exhaustive generators for the graph families the verifiers sweep."""

from __future__ import annotations

from typing import Iterator

from .errors import SizeGuard
from .graph import Graph, Kind

DEG2_FAMILY_CAP = 14
BOUNDED_DEGREE_CAP = 7


def component_multisets(n: int, acyclic: bool) -> Iterator[tuple[tuple[Kind, int], ...]]:
    """All multisets of paths (and cycles unless ``acyclic``) of total size ``n``.

    Each multiset is a tuple of ``(kind, size)`` sorted with paths before
    cycles and by increasing size.
    """
    parts = [(Kind.PATH, s) for s in range(1, n + 1)]
    if not acyclic:
        parts += [(Kind.CYCLE, s) for s in range(3, n + 1)]

    def rec(i, remaining):
        if remaining == 0:
            yield ()
            return
        if i == len(parts):
            return
        kind, size = parts[i]
        for count in range(remaining // size, -1, -1):
            for rest in rec(i + 1, remaining - count * size):
                yield ((kind, size),) * count + rest

    yield from rec(0, n)


def graph_from_components(parts) -> Graph:
    """Lay out components on consecutive vertex indices."""
    edges, offset = [], 0
    for kind, size in parts:
        edges.extend((offset + i, offset + i + 1) for i in range(size - 1))
        if kind is Kind.CYCLE:
            edges.append((offset, offset + size - 1))
        offset += size
    return Graph.from_edges(offset, edges)


def enumerate_deg2_family(n: int, acyclic: bool, cap: int = DEG2_FAMILY_CAP) -> Iterator[Graph]:
    """One canonical graph per multiset of components with ``n`` vertices."""
    if n > cap:
        raise SizeGuard(f"n={n} exceeds the family enumeration cap {cap}")
    for parts in component_multisets(n, acyclic):
        yield graph_from_components(parts)


def enumerate_bounded_degree(n: int, d: int, cap: int = BOUNDED_DEGREE_CAP) -> Iterator[Graph]:
    """Every labelled graph on ``[n]`` with maximum degree at most ``d``.

    Edges of ``K_n`` are decided one at a time; a branch is cut as soon as a
    degree would exceed ``d``, which yields the same set as filtering all
    ``2^C(n,2)`` subsets.
    """
    if n > cap:
        raise SizeGuard(f"n={n} exceeds the labelled enumeration cap {cap}")
    if d < 0:
        raise ValueError("degree bound must be non-negative")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def rec(i):
        if i == len(pairs):
            yield Graph.from_edges(n, chosen)
            return
        yield from rec(i + 1)
        u, v = pairs[i]
        if deg[u] < d and deg[v] < d:
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1

    yield from rec(0)
