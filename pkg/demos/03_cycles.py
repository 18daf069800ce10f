"""
Graphs holding every cycle length
=================================

The size-aware graph adds about ``log2 n`` vertices to an ``n``-cycle; the
size-oblivious one grows in levels ``K^2 + 1`` and keeps old vertex ids.
"""

import math

from unilabel import (
    aware_size,
    build_cycle_aware,
    build_cycle_oblivious,
    embed_cycle_aware,
    embed_cycle_oblivious,
    oblivious_size,
)
from unilabel.cycles import aware_layout

lay = aware_layout(24)
print("n=24 anchors:", lay.x, "hub positions:", lay.hubs[0][1])
print("C_5 in the n=24 graph:", embed_cycle_aware(5, 24))
print("C_9 (every shortcut):", embed_cycle_aware(9, 24))

# overhead over n for both constructions
print("%6s %10s %14s" % ("n", "aware-n", "oblivious-n"))
for n in (16, 64, 256, 1024, 4096):
    print("%6d %10d %14d   log2 n = %.1f, sqrt n = %.1f"
          % (n, aware_size(n) - n, oblivious_size(n) - n, math.log2(n), math.sqrt(n)))

# every length from 3 to n, for one n
n = 50
aware, obl = build_cycle_aware(n), build_cycle_oblivious(n)
print("n=50 aware graph:", aware.n, "vertices; oblivious graph:", obl.n, "vertices")
for ell in (3, 6, 17, 50):
    print("  length", ell, "oblivious ->", embed_cycle_oblivious(ell, n))
