"""Graphs containing every cycle of length ``3..n`` as an induced subgraph.

Size-aware
    An ``n``-cycle ``v_1 .. v_n`` with shortcut nodes ``w_i`` joining
    ``v_{x(i)}`` to ``v_{x(i+1)}``, where consecutive anchors are
    ``2^{i-1} + 2`` apart. Skipping an arc through ``w_i`` shortens the cycle
    by ``2^{i-1}``, so every length from about ``2k`` up to ``n`` is a choice of
    arcs. Shorter lengths come from hub nodes adjacent to ``v`` at positions
    whose gaps grow by one.

Size-oblivious
    Built only at sizes ``K^2 + 1``: a path ``v_1 .. v_{K^2}``, a node ``u_p``
    closing ``v_1 .. v_{p^2}`` into a cycle for each ``p``, shortcut nodes
    between anchors ``1, 4, 8, 14, 24, ...`` and one separate triangle.
    Vertex ids follow the growth order, so each level is an id prefix of the
    next one.

Vertex ids: ``v_i`` is ``i - 1`` in the aware graph; the oblivious id layout is
in :class:`ObliviousLayout`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .embedding import is_induced_embedding
from .errors import LengthOutOfRange
from .graph import Graph, cycle_graph
from .subset_sum import subset_sum_greedy


def hub_positions(k: int) -> list[int]:
    """``y(2), ..., y(2k)`` with ``y(2) = 1`` and ``y(i+1) = y(i) + i - 1``."""
    ys = [1]
    for i in range(2, 2 * k):
        ys.append(ys[-1] + i - 1)
    return ys


@dataclass(frozen=True)
class AwareLayout:
    n: int
    x: tuple[int, ...]  # x(1) .. x(k+1); x(k+1) = n + 1 stands for v_1
    hubs: tuple[tuple[int, tuple[int, ...]], ...]  # (shortest length, positions)

    @property
    def k(self) -> int:
        return len(self.x) - 1

    @property
    def size(self) -> int:
        return self.n + self.k + len(self.hubs)

    @property
    def base_length(self) -> int:
        """Length of the cycle that takes every shortcut."""
        return 2 * self.k + 1 if self.x[-1] == self.n else 2 * self.k

    def v(self, i: int) -> int:
        return (i - 1) % self.n

    def w(self, i: int) -> int:
        return self.n + i - 1

    def hub(self, h: int) -> int:
        return self.n + self.k + h


@lru_cache(maxsize=512)
def aware_layout(n: int) -> AwareLayout:
    if n < 3:
        raise ValueError("cycle constructions need n >= 3")
    xs = [1]
    while xs[-1] + 2 ** (len(xs) - 1) + 2 < n:
        xs.append(xs[-1] + 2 ** (len(xs) - 1) + 2)
    xs.append(min(xs[-1] + 2 ** (len(xs) - 1) + 2, n + 1))
    k = len(xs) - 1
    top = (2 * k + 1 if xs[-1] == n else 2 * k) - 1
    # One hub serves lengths 3..top when its positions y(2..top) fit on the
    # cycle. When they do not (small n) further hubs take over, each starting
    # again at v_1.
    hubs = []
    ell = 3
    while ell <= top:
        first, pos = ell, [1]
        while ell <= top and pos[-1] + ell - 2 <= n:
            pos.append(pos[-1] + ell - 2)
            ell += 1
        hubs.append((first, tuple(pos)))
    return AwareLayout(n, tuple(xs), tuple(hubs))


def aware_size(n: int) -> int:
    return aware_layout(n).size


@lru_cache(maxsize=64)
def build_cycle_aware(n: int) -> Graph:
    lay = aware_layout(n)
    edges = {(lay.v(i), lay.v(i + 1)) for i in range(1, n + 1)}
    for i in range(1, lay.k + 1):
        edges.add((lay.v(lay.x[i - 1]), lay.w(i)))
        edges.add((lay.v(lay.x[i]), lay.w(i)))
    for h, (_, pos) in enumerate(lay.hubs):
        edges.update((lay.v(p), lay.hub(h)) for p in pos)
    return Graph.from_edges(lay.size, {(min(e), max(e)) for e in edges})


def embed_cycle_aware(ell: int, n: int) -> list[int]:
    """Vertices of an induced ``ell``-cycle of the size-``n`` graph, in cycle order."""
    if not 3 <= ell <= n:
        raise LengthOutOfRange(f"length {ell} outside [3, {n}]")
    lay = aware_layout(n)
    if ell == n:
        out = list(range(n))
    elif ell >= lay.base_length:
        x = lay.x
        gaps = [x[i + 1] - x[i] - 2 for i in range(lay.k)]
        useful = sorted((i for i in range(lay.k) if gaps[i] > 0), key=lambda i: gaps[i])
        picked = subset_sum_greedy([gaps[i] for i in useful], ell - lay.base_length)
        arcs = {useful[j] for j in picked}
        out = []
        for i in range(lay.k):
            out.append(lay.v(x[i]))
            if i in arcs:
                out.extend(lay.v(p) for p in range(x[i] + 1, x[i + 1]))
            else:
                out.append(lay.w(i + 1))
        if x[-1] == n:
            out.append(lay.v(n))
    else:
        for h, (first, pos) in enumerate(lay.hubs):
            j = ell - first
            if 0 <= j < len(pos) - 1:
                out = [lay.hub(h)] + [lay.v(p) for p in range(pos[j], pos[j + 1] + 1)]
                break
        else:  # pragma: no cover - the layout covers every length below the base cycle
            raise AssertionError(f"no hub covers length {ell} at n={n}")
    check = is_induced_embedding(cycle_graph(ell), build_cycle_aware(n), out)
    assert check, f"aware cycle {ell} in n={n}: {check.reason}"
    return out


def anchor(i: int) -> int:
    """``x(i)`` with ``x(1) = 1`` and ``x(i+1) = x(i) + 2^{i-1} + 2``."""
    return 2 ** (i - 1) + 2 * (i - 1)


def oblivious_level(n: int) -> int:
    """``K`` with ``K^2 + 1`` the least size of that form that is at least ``n``."""
    if n < 3:
        raise ValueError("cycle constructions need n >= 3")
    return math.isqrt(n - 2) + 1


@dataclass(frozen=True)
class ObliviousLayout:
    """Vertex ids of the level-``K`` graph.

    Level 2 lays out ``v_1..v_4``, ``u_2``, ``w_1`` and the triangle. Every
    further level ``p`` appends ``v_{(p-1)^2+1}..v_{p^2}``, then ``u_p``, then
    the shortcut nodes whose far anchor falls in the new stretch of path.
    """

    K: int
    v_ids: tuple[int, ...]  # v_ids[j - 1] is v_j
    u_ids: dict
    w_ids: dict
    triangle: tuple[int, int, int]
    size: int

    def v(self, j: int) -> int:
        return self.v_ids[j - 1]


@lru_cache(maxsize=128)
def oblivious_layout(K: int) -> ObliviousLayout:
    if K < 2:
        raise ValueError("the smallest level is 2")
    v_ids, u_ids, w_ids = [], {}, {}
    nxt = 0
    triangle = ()
    for p in range(2, K + 1):
        lo = 1 if p == 2 else (p - 1) ** 2 + 1
        for _ in range(lo, p * p + 1):
            v_ids.append(nxt)
            nxt += 1
        u_ids[p] = nxt
        nxt += 1
        i = 1
        while anchor(i + 1) <= p * p:
            if anchor(i + 1) >= lo:
                w_ids[i] = nxt
                nxt += 1
            i += 1
        if p == 2:
            triangle = (nxt, nxt + 1, nxt + 2)
            nxt += 3
    return ObliviousLayout(K, tuple(v_ids), u_ids, w_ids, triangle, nxt)


def oblivious_size(n: int) -> int:
    return oblivious_layout(oblivious_level(n)).size


@lru_cache(maxsize=128)
def _level_graph(K: int) -> Graph:
    lay = oblivious_layout(K)
    edges = [(lay.v(j), lay.v(j + 1)) for j in range(1, K * K)]
    for p, u in lay.u_ids.items():
        edges += [(lay.v(p * p), u), (lay.v(1), u)]
    for i, w in lay.w_ids.items():
        edges += [(lay.v(anchor(i)), w), (lay.v(anchor(i + 1)), w)]
    a, b, c = lay.triangle
    edges += [(a, b), (b, c), (a, c)]
    return Graph.from_edges(lay.size, edges)


def build_cycle_oblivious(n: int) -> Graph:
    return _level_graph(oblivious_level(n))


def oblivious_adjacent(a: int, b: int) -> bool:
    """Adjacency of two vertex ids, valid in every level that contains both."""
    if a == b:
        return False
    top = max(a, b)
    K = 2
    while oblivious_layout(K).size <= top:
        K += 1
    return b in _level_graph(K).adjacency[a]


def window(p: int) -> tuple[int, int, int]:
    """``(r, shortest, longest)`` for cycles through ``u_p``.

    ``x(r)`` is the last anchor not beyond ``p^2``. Such a cycle runs from
    ``v_1`` to ``v_{x(r)}`` taking each shortcut or its arc, then along the
    path to ``v_{p^2}`` and back to ``v_1`` through ``u_p``.
    """
    r = 1
    while anchor(r + 1) <= p * p:
        r += 1
    return r, 2 * r + p * p - anchor(r), p * p + 1


def embed_cycle_oblivious(ell: int, n: int) -> list[int]:
    """Vertices of an induced ``ell``-cycle of the size-``n`` graph, in cycle order."""
    if not 3 <= ell <= n:
        raise LengthOutOfRange(f"length {ell} outside [3, {n}]")
    K = oblivious_level(n)
    lay = oblivious_layout(K)
    out = None
    if ell == 3:
        out = list(lay.triangle)
    for p in range(2, K + 1):
        if out is not None:
            break
        r, lo, hi = window(p)
        if lo <= ell <= hi:
            gaps = [anchor(i + 1) - anchor(i) - 2 for i in range(1, r)]
            arcs = {i + 1 for i in subset_sum_greedy(gaps, ell - lo)}
            out = []
            for i in range(1, r):
                out.append(lay.v(anchor(i)))
                if i in arcs:
                    out.extend(lay.v(j) for j in range(anchor(i) + 1, anchor(i + 1)))
                else:
                    out.append(lay.w_ids[i])
            out.extend(lay.v(j) for j in range(anchor(r), p * p + 1))
            out.append(lay.u_ids[p])
    if out is None:
        # a shortcut together with the arc it skips
        for i, w in lay.w_ids.items():
            if anchor(i + 1) - anchor(i) + 2 == ell:
                out = [lay.v(j) for j in range(anchor(i), anchor(i + 1) + 1)] + [w]
                break
    if out is None:  # pragma: no cover
        raise AssertionError(f"no oblivious cycle of length {ell} at n={n}")
    check = is_induced_embedding(cycle_graph(ell), _level_graph(K), out)
    assert check, f"oblivious cycle {ell} in n={n}: {check.reason}"
    return out
