"""Simple undirected graphs on the vertex set ``[n] = {0, ..., n-1}``.

Everything in the package passes :class:`Graph` instances around. They are
immutable; the helpers at the bottom of this module build the small graphs
(paths, cycles, cliques) the tests and embedders need.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Sequence

from .errors import DegreeExceeded


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency must have one entry per vertex")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at {u}")
                if u not in self.adjacency[v]:
                    raise ValueError(f"asymmetric adjacency {u}-{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls._trusted(n, tuple(frozenset(s) for s in adj))

    @classmethod
    def _trusted(cls, n: int, adjacency: tuple[frozenset[int], ...]) -> Graph:
        # symmetric and loop-free by construction, so skip the checks
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adjacency", adjacency)
        return g

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, tuple(frozenset() for _ in range(n)))

    def neighbors(self, u: int) -> list[int]:
        return sorted(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabelled ``vertices[i] -> i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self.adjacency[u]
            if v in index and index[u] < index[v]
        ]
        return Graph.from_edges(len(vertices), edges)

    def prefix(self, m: int) -> Graph:
        return self.induced(range(m))

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        return Graph.from_edges(self.n, edges)

    def without_edge(self, u: int, v: int) -> Graph:
        return Graph.from_edges(self.n, [e for e in self.edges() if e != (min(u, v), max(u, v))])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


class Kind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Component:
    """A connected component of a graph with maximum degree 2.

    ``vertices`` is the traversal order: end to end for a path, around the
    cycle for a cycle.
    """

    kind: Kind
    vertices: tuple[int, ...]

    def __post_init__(self):
        if self.kind is Kind.CYCLE and len(self.vertices) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if not self.vertices:
            raise ValueError("a component needs at least one vertex")

    @property
    def size(self) -> int:
        return len(self.vertices)

    def __repr__(self):
        name = "Path" if self.kind is Kind.PATH else "Cycle"
        return f"{name}{self.vertices}"


@dataclass(frozen=True)
class EmbeddingMap:
    """Vertex map ``guest vertex i -> assignments[i]`` into some host."""

    guest_n: int
    assignments: tuple[Any, ...]

    def __post_init__(self):
        if len(self.assignments) != self.guest_n:
            raise ValueError("one assignment per guest vertex is required")

    @classmethod
    def from_mapping(cls, guest_n: int, mapping: dict[int, Any]) -> EmbeddingMap:
        return cls(guest_n, tuple(mapping[u] for u in range(guest_n)))

    def __getitem__(self, u: int):
        return self.assignments[u]

    def __len__(self):
        return self.guest_n

    def image(self) -> set:
        return set(self.assignments)

    def is_injective(self) -> bool:
        return len(set(self.assignments)) == self.guest_n


@dataclass(frozen=True)
class Orientation:
    n: int
    arcs: tuple[tuple[int, int], ...] = field(default=())

    def out_degrees(self) -> list[int]:
        out = [0] * self.n
        for u, _ in self.arcs:
            out[u] += 1
        return out

    def out_neighbors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return [sorted(o) for o in out]

    def support(self) -> set[tuple[int, int]]:
        return {(min(u, v), max(u, v)) for u, v in self.arcs}


def decompose_components(g: Graph) -> list[Component]:
    """Split a graph of maximum degree 2 into its paths and cycles.

    Components are returned in order of their smallest vertex. A path is
    traversed from its smaller endpoint; a cycle starts at its smallest vertex
    and continues towards its smaller neighbor.
    """
    if g.max_degree() > 2:
        raise DegreeExceeded(f"maximum degree {g.max_degree()} exceeds 2")
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        # collect the component, then pick a traversal start
        stack, members = [start], []
        seen[start] = True
        while stack:
            u = stack.pop()
            members.append(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        ends = sorted(u for u in members if g.degree(u) < 2)
        if ends or len(members) == 1:
            kind, first = Kind.PATH, (ends[0] if ends else members[0])
        else:
            kind, first = Kind.CYCLE, min(members)
        order = [first]
        prev, cur = None, first
        while True:
            nxt = [v for v in g.neighbors(cur) if v != prev and v != first]
            if not nxt or (kind is Kind.CYCLE and len(order) == len(members)):
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        components.append(Component(kind, tuple(order)))
    return components


def path_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph.from_edges(offset, edges)


def is_acyclic(g: Graph) -> bool:
    """Forest test via edge count per connected component."""
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        stack, nv, deg_sum = [s], 0, 0
        seen[s] = True
        while stack:
            u = stack.pop()
            nv += 1
            deg_sum += g.degree(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        if deg_sum // 2 != nv - 1:
            return False
    return True
