"""Checking and searching for induced embeddings.

:func:`find_induced_embedding` is a plain backtracking search. It shares no
code with the constructive embedders and is the oracle they are tested
against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeGuard
from .graph import EmbeddingMap, Graph

DEFAULT_SEARCH_CAP = 16


@dataclass(frozen=True)
class EmbeddingCheck:
    """Truthy iff the map is an induced embedding; ``reason`` says why not."""

    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_induced_embedding(guest: Graph, host: Graph, mapping) -> EmbeddingCheck:
    """Check that ``mapping`` is an injective map preserving edges and non-edges.

    ``mapping`` may be an :class:`EmbeddingMap`, a sequence indexed by guest
    vertex, or a dict. Every guest vertex needs an integer image in
    ``[host.n]``.
    """
    try:
        images = [mapping[u] for u in range(guest.n)]
    except (KeyError, IndexError):
        return EmbeddingCheck(False, "map-incomplete")
    for img in images:
        if not isinstance(img, int) or not 0 <= img < host.n:
            return EmbeddingCheck(False, f"image-out-of-range:{img}")
    if len(set(images)) != guest.n:
        return EmbeddingCheck(False, "not-injective")
    preimage = {img: u for u, img in enumerate(images)}
    # compare neighborhoods restricted to the image; linear in total degree
    for u in range(guest.n):
        want = {images[v] for v in guest.adjacency[u]}
        got = {h for h in host.adjacency[images[u]] if h in preimage}
        if want != got:
            missing = sorted(want - got)
            if missing:
                v = preimage[missing[0]]
                return EmbeddingCheck(False, f"edge-lost:{u}-{v}")
            v = preimage[sorted(got - want)[0]]
            return EmbeddingCheck(False, f"edge-added:{u}-{v}")
    return EmbeddingCheck(True)


def find_induced_embedding(guest: Graph, host: Graph, cap: int = DEFAULT_SEARCH_CAP):
    """Return some induced embedding of ``guest`` into ``host`` or ``None``.

    Guest vertices are placed in BFS order (so each new vertex usually has an
    already placed neighbor), host candidates in increasing order; the result
    is therefore deterministic.
    """
    if guest.n > cap:
        raise SizeGuard(f"guest has {guest.n} vertices, search cap is {cap}")
    if guest.n > host.n:
        return None
    if guest.n == 0:
        return EmbeddingMap(0, ())
    order = _bfs_order(guest)
    pos = {u: i for i, u in enumerate(order)}
    # for each guest vertex, the earlier-placed vertices and whether adjacent
    earlier = [
        [(w, w in guest.adjacency[u]) for w in order[: pos[u]]] for u in order
    ]
    host_deg = [host.degree(h) for h in range(host.n)]
    assign: dict[int, int] = {}
    used = [False] * host.n

    def candidates(i):
        u = order[i]
        anchored = [assign[w] for w, adj in earlier[i] if adj]
        if anchored:
            pool = sorted(host.adjacency[anchored[0]])
        else:
            pool = range(host.n)
        need = guest.degree(u)
        for h in pool:
            if used[h] or host_deg[h] < need:
                continue
            if all((assign[w] in host.adjacency[h]) == adj for w, adj in earlier[i]):
                yield h

    def extend(i):
        if i == len(order):
            return True
        u = order[i]
        for h in candidates(i):
            assign[u] = h
            used[h] = True
            if extend(i + 1):
                return True
            used[h] = False
            del assign[u]
        return False

    if not extend(0):
        return None
    return EmbeddingMap.from_mapping(guest.n, assign)


def _bfs_order(g: Graph) -> list[int]:
    seen = [False] * g.n
    order = []
    # larger components first tends to fail faster
    starts = sorted(range(g.n), key=lambda u: -g.degree(u))
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        queue = [s]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    return order


def is_prefix_induced(small: Graph, big: Graph) -> EmbeddingCheck:
    """Identity map on ``[small.n]`` is an induced embedding into ``big``."""
    if small.n > big.n:
        return EmbeddingCheck(False, "prefix-longer-than-host")
    return is_induced_embedding(small, big, range(small.n))
