"""
Universal graphs for maximum degree two
=======================================

Build the linear-forest graph and ``U_n``, embed a few guests and check that
the embeddings are induced.
"""

from unilabel import (
    build_deg2_universal,
    build_path_universal,
    embed_acyclic,
    embed_deg2,
    is_induced_embedding,
    is_prefix_induced,
)
from unilabel.graph import cycle_graph, disjoint_union, path_graph

# U^p_11 has floor(33/2) = 16 vertices and 14 edges
up = build_path_universal(11)
print("U^p_11:", up.n, "vertices,", up.num_edges, "edges")

# a path on 8 vertices lands on {0,1,2,4,5,7,8,10}
emb = embed_acyclic(path_graph(8))
print("P_8 ->", sorted(emb.assignments))

# U_6 holds both P_6 and C_6
u6 = build_deg2_universal(6)
for name, g in (("P_6", path_graph(6)), ("C_6", cycle_graph(6))):
    image = embed_deg2(g).assignments
    print(name, "->", sorted(image), bool(is_induced_embedding(g, u6, image)))

# a mixed guest: two triangles, an edge and a lone vertex
g = disjoint_union(cycle_graph(3), cycle_graph(3), path_graph(2), path_graph(1))
host = build_deg2_universal(g.n)
image = embed_deg2(g).assignments
print("2C3+P2+P1 into U_%d:" % g.n, list(image), bool(is_induced_embedding(g, host, image)))

# the adjacency rule never looks at n, so each U_n is a prefix of the next
print("prefix chain up to 200:", all(is_prefix_induced(build_deg2_universal(n), build_deg2_universal(n + 1)) for n in range(200)))
