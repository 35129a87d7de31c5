"""The layered lower-bound graphs G_{r,k} and their witness vertices.

Whatever ordering is chosen, the witness walk finds a vertex that weakly
r-reaches at least g(r, k) vertices. Here the claim is rechecked directly.
"""

import random

from wcol.graph import VertexOrdering, degeneracy_ordering, wreach_set
from wcol.lowerbound import build_grk, g_value, grk_decomposition, size_estimate, witness_vertex
from wcol.stw_order import stw_ordering
from wcol.treedecomp import is_k_simple, validate_td

rng = random.Random(1)
for r, k in [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)]:
    lc = build_grk(r, k)
    g = lc.graph
    td = grk_decomposition(lc)
    ok = validate_td(g, td) and is_k_simple(td, k)
    print(f"G_{r},{k}: {g.n} vertices (estimate {size_estimate(r, k)}), decomposition ok: {ok}")

    candidates = {
        "random": VertexOrdering.random(g.n, rng),
        "smallest-last": degeneracy_ordering(g)[0],
        "layered": stw_ordering(g, td, k, r),
    }
    for name, sigma in candidates.items():
        w, claim = witness_vertex(lc, sigma)
        seen = len(wreach_set(g, sigma, w, r))
        print(f"  {name:>13}: witness {w:6d} reaches {seen:3d} >= g = {g_value(r, k)}")
