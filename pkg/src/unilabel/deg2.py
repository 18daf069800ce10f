"""The ``(2n-1)``-vertex induced universal graph ``U_n`` for maximum degree 2.

``U_n`` lives on ``[2n-1]``. Vertex 2 is isolated; otherwise ``u`` and ``v``
are adjacent when they differ by one or one is the successor of the other,
where even ``x`` has successor ``x+4`` and odd ``x`` has successor ``x+3``.
The rule never looks at ``n``, so ``U_n`` is the prefix of ``U_{n+1}``.

The embedder peels long components (paths with at least 3 vertices, cycles
with at least 4) into the top of the vertex range, recursing on the prefix,
and packs the remaining triangles, edges and isolated vertices greedily from
the bottom.
"""

from __future__ import annotations

from .embedding import is_induced_embedding
from .errors import DegreeExceeded
from .graph import Component, EmbeddingMap, Graph, Kind, decompose_components


def u_successor(x: int) -> int:
    return x + 4 if x % 2 == 0 else x + 3


def deg2_universal_size(n: int) -> int:
    return max(0, 2 * n - 1)


def deg2_universal_edge_count(n: int) -> int:
    return max(0, n - 1, 3 * n - 5, 4 * n - 9)


def u_adjacent(u: int, v: int) -> bool:
    if u == v or u == 2 or v == 2:
        return False
    return abs(u - v) == 1 or u == u_successor(v) or v == u_successor(u)


def u_neighbors(v: int, size: int) -> list[int]:
    if v == 2:
        return []
    cand = (v - 4, v - 3, v - 1, v + 1, v + 3, v + 4)
    return [w for w in cand if 0 <= w < size and u_adjacent(v, w)]


def build_deg2_universal(n: int) -> Graph:
    size = deg2_universal_size(n)
    edges = [(u, u + 1) for u in range(3, size - 1)]
    edges += [(u, u_successor(u)) for u in range(size) if u != 2 and u_successor(u) < size]
    if size > 1:
        edges.append((0, 1))
    return Graph.from_edges(size, edges)


def _trace(vertices) -> list[list[int]]:
    """Components of the subgraph of ``U`` induced by ``vertices``, in traversal order."""
    vs = sorted(vertices)
    index = {v: i for i, v in enumerate(vs)}
    top = vs[-1] + 1 if vs else 0
    edges = [(index[a], index[b]) for a in vs for b in u_neighbors(a, top) if b in index and a < b]
    sub = Graph.from_edges(len(vs), edges)
    return [[vs[i] for i in c.vertices] for c in decompose_components(sub)]


def peel_vertices(n: int, k: int, kind: Kind) -> list[int]:
    """Host vertices in the top ``2k`` positions of ``U_n`` that induce ``P_k`` or ``C_k``.

    Returned in traversal order of the induced path or cycle.
    """
    lo = 2 * (n - k)
    first = lo + 1 if kind is Kind.PATH else lo + 3
    chosen = {first, 2 * n - 3} | {i for i in range(lo + 4, 2 * n - 1) if i % 2 == 0}
    (order,) = _trace(chosen)
    return order


def base_case_vertices(n1: int, n2: int, n3: int) -> tuple[list[int], list[int], list[int]]:
    """The host vertex sets for ``n3/3`` triangles, ``n2/2`` edges and ``n1`` isolated vertices.

    The index range ``{-1, ..., 2n-2}`` is cut into consecutive regions of
    sizes ``2 n3``, ``2 n2`` and ``2 n1``. Position ``-1`` is never a vertex
    and position 2, being isolated in ``U``, is moved to the last region.
    """
    n = n1 + n2 + n3
    start2 = 2 * n3 - 1  # first index of the middle region
    start1 = 2 * (n3 + n2) - 1
    region3 = [i for i in range(-1, start2) if i not in (-1, 2)]
    region2 = [i for i in range(start2, start1) if i not in (-1, 2)]
    v3 = [i for i in region3 if i % 6 in (0, 1, 4)]
    v2 = [i for i in region2 if (i - start2) % 8 in (1, 2, 4, 7)]
    if n1 == 0:
        v1 = []
    elif n1 == 1:
        v1 = [2]
    else:
        # odd vertices of the last region only touch even vertices of that region
        v1 = [2] + [i for i in range(2 * (n - n1) + 1, 2 * n - 1, 2)]
    return v1, v2, v3


def _base_case(comps: list[Component], mapping: dict[int, int]) -> None:
    ones = [c for c in comps if c.size == 1]
    twos = [c for c in comps if c.kind is Kind.PATH and c.size == 2]
    tris = [c for c in comps if c.kind is Kind.CYCLE and c.size == 3]
    n1, n2, n3 = len(ones), 2 * len(twos), 3 * len(tris)
    if n1 + n2 + n3 == 1:
        mapping[ones[0].vertices[0]] = 0
        return
    v1, v2, v3 = base_case_vertices(n1, n2, n3)
    pieces2 = _trace(v2)
    pieces3 = _trace(v3)
    # traced pieces come out sorted by smallest vertex, i.e. region order
    for comp, piece in zip(tris, pieces3, strict=True):
        for u, h in zip(comp.vertices, piece, strict=True):
            mapping[u] = h
    for comp, piece in zip(twos, pieces2, strict=True):
        for u, h in zip(comp.vertices, piece, strict=True):
            mapping[u] = h
    for comp, h in zip(ones, v1, strict=True):
        mapping[comp.vertices[0]] = h


def embed_deg2(g: Graph) -> EmbeddingMap:
    """Embed any graph of maximum degree 2 into ``U_{g.n}``."""
    if g.max_degree() > 2:
        raise DegreeExceeded(f"maximum degree {g.max_degree()} exceeds 2")
    comps = decompose_components(g)
    long_ones = sorted(
        (c for c in comps if (c.kind is Kind.PATH and c.size >= 3) or (c.kind is Kind.CYCLE and c.size >= 4)),
        key=lambda c: (-c.size, c.kind is Kind.CYCLE, c.vertices),
    )
    short_ones = [c for c in comps if c not in long_ones]
    mapping: dict[int, int] = {}
    n = g.n
    # the largest component goes to the top of U_n, the next one below it, ...
    for comp in long_ones:
        host = peel_vertices(n, comp.size, comp.kind)
        for u, h in zip(comp.vertices, host, strict=True):
            mapping[u] = h
        n -= comp.size
    _base_case(short_ones, mapping)

    result = EmbeddingMap.from_mapping(g.n, mapping)
    check = is_induced_embedding(g, build_deg2_universal(g.n), result)
    assert check, f"degree-2 embedding failed ({check.reason}) for {g}"
    return result
