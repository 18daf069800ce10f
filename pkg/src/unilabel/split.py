"""Euler-circuit orientation and the split of a ``2k``-bounded graph into ``k``
edge-disjoint subgraphs of maximum degree 2.

The split orients every edge along closed trails (after pairing up odd
vertices through one dummy vertex), so each vertex has in- and out-degree at
most ``k``. The directed edges then form a bipartite graph between tail copies
and head copies with maximum degree ``k``, which is properly edge-coloured with
``k`` colours by alternating-path recolouring. A colour class gives every
vertex at most one outgoing and one incoming edge.
"""

from __future__ import annotations

from .errors import DegreeExceeded
from .graph import Graph, Orientation


def euler_orientation(g: Graph) -> Orientation:
    """Orient ``g`` so every vertex has out-degree at most ``ceil(deg/2)``."""
    dummy = g.n
    edges = list(g.edges())
    odd = [u for u in range(g.n) if g.degree(u) % 2]
    edges += [(u, dummy) for u in odd]
    incident: list[list[int]] = [[] for _ in range(g.n + 1)]
    for eid, (u, v) in enumerate(edges):
        incident[u].append(eid)
        incident[v].append(eid)
    used = [False] * len(edges)
    cursor = [0] * (g.n + 1)
    arcs = []

    def next_edge(u):
        lst = incident[u]
        while cursor[u] < len(lst) and used[lst[cursor[u]]]:
            cursor[u] += 1
        return lst[cursor[u]] if cursor[u] < len(lst) else None

    # every vertex has even degree, so each walk closes where it started
    for start in range(g.n + 1):
        while (eid := next_edge(start)) is not None:
            u = start
            while eid is not None:
                used[eid] = True
                a, b = edges[eid]
                v = b if a == u else a
                if u != dummy and v != dummy:
                    arcs.append((u, v))
                u = v
                eid = next_edge(u)
    return Orientation(g.n, tuple(arcs))


def orient_bounded_outdegree(g: Graph, c: int) -> Orientation:
    if g.max_degree() > 2 * c:
        raise DegreeExceeded(f"maximum degree {g.max_degree()} exceeds 2*{c}")
    return euler_orientation(g)


def _bipartite_edge_coloring(arcs, n: int, k: int) -> list[int]:
    """Colour arcs ``(u, v)`` so no tail ``u`` and no head ``v`` repeats a colour."""
    tail = [dict() for _ in range(n)]  # colour -> head
    head = [dict() for _ in range(n)]  # colour -> tail
    for u, v in arcs:
        alpha = next(c for c in range(k) if c not in tail[u])
        beta = next(c for c in range(k) if c not in head[v])
        if alpha in head[v]:
            # swap alpha/beta along the path leaving v on alpha
            path, side, x, col = [], "head", v, alpha
            while True:
                table = head[x] if side == "head" else tail[x]
                if col not in table:
                    break
                y = table[col]
                path.append((y, x, col) if side == "head" else (x, y, col))
                side = "tail" if side == "head" else "head"
                x = y
                col = beta if col == alpha else alpha
            for t, h, col in path:
                del tail[t][col]
                del head[h][col]
            for t, h, col in path:
                other = beta if col == alpha else alpha
                tail[t][other] = h
                head[h][other] = t
        tail[u][alpha] = v
        head[v][alpha] = u
    colour_of = {}
    for u in range(n):
        for col, v in tail[u].items():
            colour_of[(u, v)] = col
    return [colour_of[a] for a in arcs]


def euler_split(g: Graph, k: int) -> list[Graph]:
    """Partition the edges of ``g`` into ``k`` subgraphs of maximum degree 2."""
    if g.max_degree() > 2 * k:
        raise DegreeExceeded(f"maximum degree {g.max_degree()} exceeds 2*{k}")
    if k == 0:
        return []
    orientation = euler_orientation(g)
    colours = _bipartite_edge_coloring(orientation.arcs, g.n, k)
    parts: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for (u, v), col in zip(orientation.arcs, colours):
        parts[col].append((u, v))
    return [Graph.from_edges(g.n, p) for p in parts]
