"""Orderings for graphs with a k-simple tree decomposition.

The graph is first filled so every bag is a clique. Each connected component
is then split into BFS layers. Every layer gets a (k-1)-simple decomposition
and is ordered recursively, and the layer orderings are concatenated. At
k = 1 every component is a path, which gets the path ordering for radius
``r``. Only that last step depends on ``r``, so the recursion produces a
radius-independent list of paths (:func:`stw_plan`).
"""

from __future__ import annotations

from typing import Callable, Iterable

from .graph import BFSLayering, Graph, VertexOrdering, bfs_layering
from .paths import ceil_log2, path_enumeration, thm1_sequence
from .treedecomp import (
    TreeDecomposition,
    chordal_fill,
    is_k_simple,
    layer_decomposition,
    restrict_td,
    validate_td,
)

Observer = Callable[[Graph, BFSLayering], None]


def f_bound(r: int, k: int) -> int:
    """``(r + 1)^(k-1) * (ceil(log2 r) + 2)``, exact (Python integers do not wrap)."""
    if r < 1 or k < 1:
        raise ValueError("r and k must be >= 1")
    return (r + 1) ** (k - 1) * (ceil_log2(r) + 2)


def stw_plan(g: Graph, td: TreeDecomposition, k: int, observer: Observer | None = None) -> list[list[int]]:
    """The paths, end to end and in final order, whose path orderings make up
    the ordering for every radius.

    ``observer(filled_component, layering)`` is called for every component
    that gets split into layers, at every level of the recursion.
    """
    check = validate_td(g, td)
    if not check:
        raise ValueError(f"invalid tree decomposition: {check.reason}")
    if not is_k_simple(td, k):
        raise ValueError(f"decomposition is not {k}-simple")
    pieces: list[list[int]] = []
    _plan(g, td, k, list(range(g.n)), pieces, observer)
    return pieces


def _plan(g: Graph, td: TreeDecomposition, k: int, labels: list[int], out: list[list[int]], observer) -> None:
    filled = chordal_fill(g, td)
    for comp in filled.components():
        sub, local = filled.subgraph(comp)
        glob = [labels[x] for x in local]
        if k == 1:
            try:
                seq = path_enumeration(sub)
            except ValueError:
                raise ValueError("a 1-simple part is not a path; decomposition inconsistent") from None
            out.append([glob[x] for x in seq])
            continue
        sub_td = restrict_td(td, comp)
        layering = bfs_layering(sub, 0)
        if observer is not None:
            observer(sub, layering)
        for i, layer in enumerate(layering.layers):
            layer_td = layer_decomposition(sub, sub_td, layering, i, k)
            layer_graph, in_layer = sub.subgraph(layer)
            _plan(layer_graph, layer_td, k - 1, [glob[x] for x in in_layer], out, observer)


def ordering_from_plan(plan: Iterable[list[int]], r: int) -> VertexOrdering:
    seq = []
    for piece in plan:
        seq.extend(thm1_sequence(piece, r))
    return VertexOrdering(seq)


def stw_ordering(g: Graph, td: TreeDecomposition, k: int, r: int) -> VertexOrdering:
    """Ordering with ``wcol_r(g, sigma) <= f_bound(r, k)`` given a k-simple ``td``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return ordering_from_plan(stw_plan(g, td, k), r)


def stw_orderings(g: Graph, td: TreeDecomposition, k: int, radii: Iterable[int]) -> dict[int, VertexOrdering]:
    """:func:`stw_ordering` for several radii, sharing the layer recursion."""
    plan = stw_plan(g, td, k)
    return {r: ordering_from_plan(plan, r) for r in radii}
