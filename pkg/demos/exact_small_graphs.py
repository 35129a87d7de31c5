"""Exact solvers on small graphs.

Checks that the infinite-radius weak coloring number equals treedepth on a
few classic graphs, and compares strong and weak values.
"""

from wcol.exact import check_elimination_forest, exact_scol, exact_treedepth, exact_wcol
from wcol.graph import INF, Graph, complete_graph, cycle_graph, path_graph

petersen = Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                 + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                 + [(i, i + 5) for i in range(5)])
cases = {
    "P_7": path_graph(7),
    "C_6": cycle_graph(6),
    "K_4": complete_graph(4),
    "Petersen": petersen,
}

for name, g in cases.items():
    td = exact_treedepth(g)
    assert check_elimination_forest(g, td.forest)
    w_inf = exact_wcol(g, INF)
    row = [f"{name:>9}: td={td.value}  wcol_inf={w_inf.value}"]
    for r in (1, 2):
        s, w = exact_scol(g, r).value, exact_wcol(g, r).value
        row.append(f"r={r}: scol={s} wcol={w}")
    print("  ".join(row))
    print(f"{'':>11}optimal ordering for r=inf: {list(w_inf.ordering.sequence)}")
