"""
Labels, decoding and the bound table
====================================
"""

from unilabel import Scheme, decode, encode, gv_bounds_table, scheme_label_bits
from unilabel.graph import cycle_graph, path_graph

# deg2 labels are fixed-width ids of U_n vertices
lg = encode(Scheme("deg2"), cycle_graph(3))
print("C_3 deg2 labels:", lg.labels)
print("decode(l0, l1):", decode("deg2", lg.labels[0], lg.labels[1]))

for name, g in (("paths", path_graph(11)), ("cycles_oblivious", cycle_graph(37))):
    lg = encode(Scheme(name), g)
    print(name, "n=%d:" % g.n, scheme_label_bits(lg.scheme), "bits per label")

# the randomised scheme needs n when decoding
lg = encode(Scheme("degD_rand", D=2, seed=1), cycle_graph(9))
print("degD_rand C_9, label 0 =", lg.labels[0], "adjacent to 1:", decode("degD_rand", lg.labels[0], lg.labels[1], n=9))

print()
print(gv_bounds_table(1000, 4).to_csv(), end="")
