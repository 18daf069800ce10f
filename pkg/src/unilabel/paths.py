"""The ``floor(3n/2)``-vertex induced universal graph for linear forests.

Vertices come in blocks ``B_j = {3j, 3j+1, 3j+2}``. Inside a block ``3j`` is a
pendant on ``3j+1``, and ``3j+1 - 3j+2`` is a spine edge; consecutive blocks
are joined by ``3j+2 - 3j+4``. The embedder packs the components of the guest
into consecutive blocks, spending at most three host vertices for every two
guest vertices.
"""

from __future__ import annotations

from .embedding import is_induced_embedding
from .errors import DegreeExceeded, NotAcyclic
from .graph import EmbeddingMap, Graph, Kind, decompose_components


def up_successor(x: int) -> int:
    return x + 2 if x % 3 == 2 else x + 1


def path_universal_size(n: int) -> int:
    return 3 * n // 2


def path_universal_edge_count(n: int) -> int:
    return max(0, 3 * (n // 2) - 1)


def build_path_universal(n: int) -> Graph:
    size = path_universal_size(n)
    return Graph.from_edges(size, [(u, up_successor(u)) for u in range(size) if up_successor(u) < size])


def up_adjacent(u: int, v: int) -> bool:
    """Adjacency in every ``U^p_n`` that contains both vertices."""
    return u != v and (v == up_successor(u) or u == up_successor(v))


def _even_path(block: int, length: int) -> list[int]:
    # pendant 3b, then the spine 3b+1, 3b+2, 3b+4, ... ending on 3(b+k-1)+1
    base = 3 * block
    k = length // 2
    spine = []
    for j in range(k):
        spine.append(base + 3 * j + 1)
        if j < k - 1:
            spine.append(base + 3 * j + 2)
    return [base] + spine


def _odd_path(block: int, length: int) -> list[int]:
    # even path on k blocks plus the pendant of the last block
    k = length // 2
    return _even_path(block, 2 * k) + [3 * (block + k - 1)]


def _p3_pair(block: int) -> tuple[list[int], list[int]]:
    b = 3 * block
    return [b, b + 1, b + 2], [b + 5, b + 7, b + 6]


def _singletons(block: int, count: int) -> list[int]:
    out = []
    for m in range(count // 2):
        out += [3 * (block + m), 3 * (block + m) + 2]
    if count % 2:
        out.append(3 * (block + count // 2))
    return out


def _p3_with_singletons(block: int, count: int) -> tuple[list[int], list[int]]:
    b = 3 * block
    singles = []
    for i in range(count):
        m = i // 2
        singles.append(3 * (block + m + 1) + 2 if i % 2 == 0 else 3 * (block + m + 2))
    return [b, b + 1, b + 2], singles


def embed_acyclic(g: Graph) -> EmbeddingMap:
    """Embed a graph whose components are paths into ``U^p_{g.n}``.

    Components are placed in the order even paths, odd paths of length at
    least 5, pairs of ``P_3``, a left-over ``P_3`` together with the isolated
    vertices, and finally the remaining isolated vertices. Each earlier group
    ends on a block boundary, which is what lets the groups be stacked.
    """
    if g.max_degree() > 2:
        raise DegreeExceeded(f"maximum degree {g.max_degree()} exceeds 2")
    comps = decompose_components(g)
    if any(c.kind is Kind.CYCLE for c in comps):
        raise NotAcyclic("graph contains a cycle")

    def by_size(pred):
        return sorted((c for c in comps if pred(c.size)), key=lambda c: (-c.size, c.vertices))

    evens = by_size(lambda s: s % 2 == 0)
    odds = by_size(lambda s: s % 2 == 1 and s >= 5)
    threes = by_size(lambda s: s == 3)
    ones = by_size(lambda s: s == 1)

    mapping: dict[int, int] = {}
    block = 0

    def place(comp, host_vertices):
        for u, h in zip(comp.vertices, host_vertices, strict=True):
            mapping[u] = h

    for c in evens:
        place(c, _even_path(block, c.size))
        block += c.size // 2
    for c in odds:
        place(c, _odd_path(block, c.size))
        block += c.size // 2
    for a, b in zip(threes[0::2], threes[1::2]):
        first, second = _p3_pair(block)
        place(a, first)
        place(b, second)
        block += 3
    single_vertices = [c.vertices[0] for c in ones]
    if len(threes) % 2:
        path, singles = _p3_with_singletons(block, len(single_vertices))
        place(threes[-1], path)
    else:
        singles = _singletons(block, len(single_vertices))
    for u, h in zip(single_vertices, singles, strict=True):
        mapping[u] = h

    result = EmbeddingMap.from_mapping(g.n, mapping)
    check = is_induced_embedding(g, build_path_universal(g.n), result)
    assert check, f"path embedding failed ({check.reason}) for {g}"
    return result
