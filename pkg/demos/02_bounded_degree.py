"""
Bounded degree: the product graph and the randomised labels
===========================================================

For maximum degree ``D`` we split the guest into ``k = ceil(D/2)`` parts of
maximum degree two, embed one of them into ``U_n`` and store the out-
neighbours of an orientation of the rest in a set. The randomised scheme
instead stores neighbour offsets on a shuffled circle.
"""

import random

from unilabel import (
    build_product_universal,
    embed_degD,
    euler_split,
    is_induced_embedding,
    product_vertex_count,
    rand_decode,
    rand_encode,
)
from unilabel.degd import embedding_to_ids
from unilabel.graph import Graph, complete_graph

# K_5 has degree 4, so two parts suffice
parts = euler_split(complete_graph(5), 2)
print("K_5 split:", [p.edges() for p in parts])

# every vertex of K_4 gets (x, A) with |A| <= 1 when D = 3
emb = embed_degD(complete_graph(4), 3)
for u, v in enumerate(emb.assignments):
    print(" ", u, "->", v)

host = build_product_universal(4, 3)
ids = embedding_to_ids(emb, 4, 3).assignments
print("product graph for n=4, D=3:", host.n, "vertices; K_4 induced:", bool(is_induced_embedding(complete_graph(4), host, ids)))

# sizes grow like n^k
for n in (10, 100, 1000):
    print("n=%d D=6: %d vertices" % (n, product_vertex_count(n, 6)))

# the randomised scheme on a random 10-regular-ish graph
rng = random.Random(0)
n, D = 101, 10
edges = set()
deg = [0] * n
for _ in range(4 * n * D):
    a, b = rng.randrange(n), rng.randrange(n)
    if a != b and deg[a] < D and deg[b] < D and (min(a, b), max(a, b)) not in edges:
        edges.add((min(a, b), max(a, b)))
        deg[a] += 1
        deg[b] += 1
g = Graph.from_edges(n, edges)
scheme, labels = rand_encode(g, D, seed=7)
wrong = sum(rand_decode(labels[u], labels[v]) != g.has_edge(u, v) for u in range(n) for v in range(n))
print("random graph: %d edges, cap %d offsets, %d attempt(s), %d wrong decodes"
      % (g.num_edges, scheme.D_cap, scheme.attempts, wrong))
