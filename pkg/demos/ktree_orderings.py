"""Layered orderings for random simple k-trees.

A simple k-tree comes with a k-simple tree decomposition. The layered
ordering splits each component into BFS layers, recurses on every layer with
k - 1 and uses the path ordering at the bottom.
"""

from wcol.graph import degeneracy_ordering, wcol_under
from wcol.stw_order import f_bound, stw_orderings
from wcol.treedecomp import is_k_simple, random_simple_ktree, validate_td

radii = range(1, 7)
for k in (2, 3):
    g, td, trace = random_simple_ktree(k, 300, seed=11)
    assert validate_td(g, td) and is_k_simple(td, k)
    print(f"simple {k}-tree: n={g.n}, m={g.m}, bags={td.node_count}")

    orders = stw_orderings(g, td, k, radii)
    smallest_last, _ = degeneracy_ordering(g)
    for r in radii:
        layered = wcol_under(g, orders[r], r)
        baseline = wcol_under(g, smallest_last, r)
        print(f"  r={r}: layered {layered:3d}  smallest-last {baseline:3d}  bound {f_bound(r, k)}")
