"""Induced universal graphs and labels for graphs of maximum degree ``D``.

Two constructions, with ``k = ceil(D/2)`` throughout:

* a deterministic product: vertices are pairs ``(x, A)`` with ``x`` a vertex
  of ``U_n`` and ``A`` a set of at most ``k-1`` vertices of ``U_n``; ``(x, A)``
  and ``(y, B)`` are adjacent iff ``x`` is in ``B``, ``y`` is in ``A``, or
  ``x`` and ``y`` are adjacent in ``U_n``;
* a randomised labelling: vertices are placed on a circle of odd length by a
  random permutation and each vertex stores the offsets of its neighbours in
  the following half of the circle.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from math import comb
from typing import NamedTuple, Sequence

from .deg2 import deg2_universal_size, embed_deg2, u_adjacent, u_neighbors
from .errors import DegreeExceeded, RetryExhausted, SchemeMismatch, SizeGuard
from .graph import EmbeddingMap, Graph
from .split import euler_split, orient_bounded_outdegree

PRODUCT_VERTEX_CAP = 10**6
DEFAULT_CHERNOFF_CONSTANT = 2.0
DEFAULT_RETRY_CAP = 64


def half_degree(D: int) -> int:
    return -(-D // 2)


class ProductVertex(NamedTuple):
    x: int
    A: tuple[int, ...]


def product_vertex_count(n: int, D: int) -> int:
    base = deg2_universal_size(n)
    return base * _subsets_below(base, half_degree(D))


def _subsets_below(size: int, k: int) -> int:
    """Number of subsets of a ``size``-set with fewer than ``k`` elements."""
    return sum(comb(size, i) for i in range(k))


def _colex_rank(A: Sequence[int]) -> int:
    return sum(comb(a, i + 1) for i, a in enumerate(A))


def _colex_unrank(r: int, size: int) -> tuple[int, ...]:
    out = []
    for i in range(size, 0, -1):
        a = i - 1
        while comb(a + 1, i) <= r:
            a += 1
        out.append(a)
        r -= comb(a, i)
    return tuple(reversed(out))


def product_vertex_id(v: ProductVertex, n: int, D: int) -> int:
    """Rank of ``(x, A)``: by ``x``, then by ``|A|``, then colexicographically."""
    base = deg2_universal_size(n)
    per_x = _subsets_below(base, half_degree(D))
    return v.x * per_x + _subsets_below(base, len(v.A)) + _colex_rank(v.A)


def product_vertex_from_id(i: int, n: int, D: int) -> ProductVertex:
    base = deg2_universal_size(n)
    per_x = _subsets_below(base, half_degree(D))
    x, r = divmod(i, per_x)
    size = 0
    while r >= comb(base, size):
        r -= comb(base, size)
        size += 1
    return ProductVertex(x, _colex_unrank(r, size))


def product_adjacent(a: ProductVertex, b: ProductVertex) -> bool:
    if a == b:
        return False
    return a.x in b.A or b.x in a.A or u_adjacent(a.x, b.x)


def build_product_universal(n: int, D: int, cap: int = PRODUCT_VERTEX_CAP) -> Graph:
    """Materialise the product graph; vertex ``i`` is ``product_vertex_from_id(i)``."""
    if n < 1 or D < 1:
        raise ValueError("need n >= 1 and D >= 1")
    total = product_vertex_count(n, D)
    if total > cap:
        raise SizeGuard(f"product graph has {total} vertices, cap is {cap}")
    base = deg2_universal_size(n)
    vertices = [product_vertex_from_id(i, n, D) for i in range(total)]
    by_x: list[list[int]] = [[] for _ in range(base)]
    containing: list[list[int]] = [[] for _ in range(base)]
    for i, v in enumerate(vertices):
        by_x[v.x].append(i)
        for a in v.A:
            containing[a].append(i)
    adj: list[set[int]] = [set() for _ in range(total)]
    for i, v in enumerate(vertices):
        nbrs = adj[i]
        for y in v.A:
            nbrs.update(by_x[y])
        nbrs.update(containing[v.x])
        for y in u_neighbors(v.x, base):
            nbrs.update(by_x[y])
        nbrs.discard(i)
    # the rule is symmetric, so the sets already are
    return Graph(total, tuple(frozenset(s) for s in adj))


def embed_degD(g: Graph, D: int) -> EmbeddingMap:
    """Map each vertex ``u`` to ``(f(u), f(S_u))``.

    ``f`` embeds one max-degree-2 part of an Euler split into ``U_n`` and
    ``S_u`` are the out-neighbours of ``u`` in an orientation of the remaining
    parts with out-degree at most ``k-1``.
    """
    if D < 1:
        raise ValueError("degree bound D must be at least 1")
    if g.max_degree() > D:
        raise DegreeExceeded(f"maximum degree {g.max_degree()} exceeds {D}")
    k = half_degree(D)
    parts = euler_split(g, k)
    main = max(range(k), key=lambda i: (parts[i].num_edges, -i))
    rest = [e for i, p in enumerate(parts) if i != main for e in p.edges()]
    h0, h1 = parts[main], Graph.from_edges(g.n, rest)
    out = orient_bounded_outdegree(h1, k - 1).out_neighbors()
    f = embed_deg2(h0)
    return EmbeddingMap(
        g.n, tuple(ProductVertex(f[u], tuple(sorted(f[v] for v in out[u]))) for u in range(g.n))
    )


def embedding_to_ids(emb: EmbeddingMap, n: int, D: int) -> EmbeddingMap:
    return EmbeddingMap(emb.guest_n, tuple(product_vertex_id(v, n, D) for v in emb.assignments))


@dataclass(frozen=True)
class RandScheme:
    n_padded: int
    D: int
    permutation: tuple[int, ...]
    D_cap: int
    attempts: int = 1


@dataclass(frozen=True)
class RandLabel:
    position: int
    diffs: tuple[int, ...]
    n_padded: int


def neighbour_cap(n_padded: int, D: int, c: float = DEFAULT_CHERNOFF_CONSTANT) -> int:
    d_prime = math.floor(D / 2 + c * math.sqrt(D * math.log(2 * n_padded)))
    return min(n_padded // 2, d_prime)


def _forward_offsets(g: Graph, perm: Sequence[int], N: int) -> list[tuple[int, ...]]:
    half = N // 2
    out = []
    for u in range(len(perm)):
        nbrs = g.adjacency[u] if u < g.n else ()
        diffs = ((perm[v] - perm[u]) % N for v in nbrs)
        out.append(tuple(sorted(d for d in diffs if 1 <= d <= half)))
    return out


def rand_encode(
    g: Graph,
    D: int,
    seed=None,
    *,
    c: float = DEFAULT_CHERNOFF_CONSTANT,
    max_retries: int = DEFAULT_RETRY_CAP,
    permutation: Sequence[int] | None = None,
) -> tuple[RandScheme, list[RandLabel]]:
    """Label ``g`` for the randomised scheme.

    An even vertex count is padded by one isolated vertex so the circle has
    odd length. Permutations are drawn from ``random.Random(seed)`` until
    every vertex stores at most ``D_cap`` offsets. ``permutation`` fixes the
    permutation instead (one attempt only).
    """
    if D < 1:
        raise ValueError("degree bound D must be at least 1")
    if g.max_degree() > D:
        raise DegreeExceeded(f"maximum degree {g.max_degree()} exceeds {D}")
    N = g.n if g.n % 2 else g.n + 1
    cap = neighbour_cap(N, D, c)
    rng = random.Random(seed)
    attempts = 0
    while attempts < (1 if permutation is not None else max_retries):
        attempts += 1
        if permutation is not None:
            perm = tuple(permutation)
            if sorted(perm) != list(range(N)):
                raise ValueError(f"permutation must be a bijection on [{N}]")
        else:
            perm = list(range(N))
            rng.shuffle(perm)
            perm = tuple(perm)
        offsets = _forward_offsets(g, perm, N)
        if max((len(s) for s in offsets), default=0) <= cap:
            scheme = RandScheme(N, D, perm, cap, attempts)
            return scheme, [RandLabel(perm[u], offsets[u], N) for u in range(g.n)]
    raise RetryExhausted(f"no permutation kept every vertex within {cap} offsets after {attempts} tries")


def rand_decode(lu: RandLabel, lv: RandLabel) -> bool:
    if lu.n_padded != lv.n_padded:
        raise SchemeMismatch("labels come from circles of different length")
    N = lu.n_padded
    d = (lu.position - lv.position) % N
    if d == 0:
        return False
    if d <= N // 2:
        return d in lv.diffs
    return (lv.position - lu.position) % N in lu.diffs


def _width(m: int) -> int:
    """Bits needed for values in ``[m]``."""
    return max(0, (m - 1).bit_length())


def _field(value: int, width: int) -> str:
    if value >> width:
        raise ValueError(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b") if width else ""


def product_label_bits(v: ProductVertex, n: int, D: int) -> str:
    bx = _width(deg2_universal_size(n))
    bk = _width(half_degree(D))
    return _field(v.x, bx) + _field(len(v.A), bk) + "".join(_field(a, bx) for a in v.A)


def parse_product_label(bits: str, n: int, D: int) -> ProductVertex:
    bx = _width(deg2_universal_size(n))
    bk = _width(half_degree(D))
    x = int(bits[:bx] or "0", 2)
    size = int(bits[bx : bx + bk] or "0", 2)
    rest = bits[bx + bk :]
    if len(rest) != size * bx:
        raise ValueError("product label length does not match its size field")
    return ProductVertex(x, tuple(int(rest[i * bx : (i + 1) * bx] or "0", 2) for i in range(size)))


def product_label_max_bits(n: int, D: int) -> int:
    bx = _width(deg2_universal_size(n))
    return bx + _width(half_degree(D)) + (half_degree(D) - 1) * bx


def rand_label_bits(label: RandLabel) -> str:
    w = _width(label.n_padded)
    return _field(label.position, w) + _field(len(label.diffs), w) + "".join(_field(d, w) for d in label.diffs)


def parse_rand_label(bits: str, n_padded: int) -> RandLabel:
    w = _width(n_padded)
    pos = int(bits[:w] or "0", 2)
    size = int(bits[w : 2 * w] or "0", 2)
    rest = bits[2 * w :]
    if len(rest) != size * w:
        raise ValueError("randomised label length does not match its size field")
    return RandLabel(pos, tuple(int(rest[i * w : (i + 1) * w] or "0", 2) for i in range(size)), n_padded)


def rand_label_max_bits(n_padded: int, D_cap: int) -> int:
    return (D_cap + 2) * _width(n_padded)
