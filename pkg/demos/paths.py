"""Orderings of long paths: the hub ordering against random orderings.

Run with ``python demos/paths.py``.
"""

import random

from wcol.graph import VertexOrdering, path_graph, wcol_under
from wcol.paths import path_lower_witness, thm1_lower, thm1_ordering, thm1_upper

rng = random.Random(0)

print(f"{'r':>3} {'lower':>5} {'hub order':>9} {'upper':>5} {'best of 50 random':>17}")
for r in (1, 2, 3, 4, 8, 16, 33, 64):
    p = path_graph(2 * r)
    hub = wcol_under(p, thm1_ordering(p, r), r)
    best_random = min(wcol_under(p, VertexOrdering.random(p.n, rng), r) for _ in range(50))
    print(f"{r:>3} {thm1_lower(r):>5} {hub:>9} {thm1_upper(r):>5} {best_random:>17}")

# No ordering escapes the lower bound: the witness vertex certifies it.
r = 8
sigma = VertexOrdering.random(2 * r, rng)
q, reach = path_lower_witness(2 * r, sigma, r)
print(f"\nrandom ordering of P_{2 * r}: vertex {q} weakly reaches {sorted(reach)}")
