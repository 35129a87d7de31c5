"""The lower-bound family ``G_{r,k}``: its multiplicities ``g(r, k)``, the
graph itself with construction metadata, a k-simple decomposition, and the
procedure that finds a vertex with many weakly reachable vertices under any
ordering.

``G_{r,1}`` is the path on ``2r`` vertices. For ``k >= 2`` there is a root
``s``; every vertex of layer ``i < r`` gets ``g(r, k)`` private copies of
``G_{i+1,k-1}``, all of whose vertices are joined to it, and those copies
make up layer ``i + 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, VertexOrdering
from .paths import ceil_log2, path_witness_vertex
from .treedecomp import TreeDecomposition

DEFAULT_MAX_VERTICES = 250_000


@lru_cache(maxsize=None)
def g_value(r: int, k: int) -> int:
    """``g(0, k) = 1``, ``g(r, 1) = ceil(log2 r) + 1``, ``g(r, k) = sum_{i<=r} g(i, k-1)``."""
    if r < 0 or k < 1:
        raise ValueError("need r >= 0 and k >= 1")
    if r == 0:
        return 1
    if k == 1:
        return ceil_log2(r) + 1
    return sum(g_value(i, k - 1) for i in range(r + 1))


def g_closed_form_rhs(r: int, k: int) -> float:
    return r ** (k - 1) * math.log(r) / math.factorial(k)


def g_closed_form_holds(r: int, k: int, rel_tol: float = 1e-9) -> bool:
    """Whether ``g(r, k) >= r^(k-1) ln(r) / k!`` (right side relaxed by ``rel_tol``)."""
    if r < 1 or k < 1:
        raise ValueError("need r, k >= 1")
    rhs = g_closed_form_rhs(r, k)
    return g_value(r, k) >= rhs - rel_tol * abs(rhs)


@lru_cache(maxsize=None)
def size_estimate(r: int, k: int, copies: int | None = None) -> int:
    """Vertex count of ``build_grk(r, k, copies)`` without building it."""
    if r < 1 or k < 1:
        raise ValueError("need r, k >= 1")
    if k == 1:
        return 2 * r
    m = g_value(r, k) if copies is None else copies
    total = layer = 1
    for i in range(r):
        layer = layer * m * size_estimate(i + 1, k - 1, copies)
        total += layer
    return total


@dataclass
class GrkPart:
    """One copy of ``G_{r,k}`` inside a larger graph, in global vertex ids.

    For ``k = 1`` ``vertices`` is the path end to end. For ``k >= 2``
    ``layers[0] == [root]`` and ``copies[v]`` lists the private copies of
    ``v``.
    """

    r: int
    k: int
    vertices: list[int]
    root: int | None = None
    layers: list[list[int]] = field(default_factory=list)
    copies: dict[int, list["GrkPart"]] = field(default_factory=dict)


@dataclass
class LayeredConstruction:
    graph: Graph
    part: GrkPart
    layer_of: list[int]
    copies_per_vertex: int | None
    faithful: bool

    @property
    def r(self) -> int:
        return self.part.r

    @property
    def k(self) -> int:
        return self.part.k

    @property
    def root(self) -> int:
        return self.part.root if self.part.k > 1 else self.part.vertices[0]

    @property
    def copies(self) -> dict[int, list[GrkPart]]:
        return self.part.copies


def build_grk(
    r: int,
    k: int,
    copies_override: int | None = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> LayeredConstruction:
    """Build ``G_{r,k}``.

    With ``copies_override = m`` every vertex gets ``m`` private copies at
    every level instead of ``g``; such thinned graphs keep the structure but
    not the lower bound, and are flagged ``faithful=False``.
    """
    if copies_override is not None and copies_override < 1:
        raise ValueError("copies_override must be >= 1")
    size = size_estimate(r, k, copies_override)
    if size > max_vertices:
        raise ValueError(f"G_{{{r},{k}}} has {size} vertices, over the budget of {max_vertices}")
    edges: list[tuple[int, int]] = []
    counter = [0]
    part = _build(r, k, copies_override, counter, edges)
    n = counter[0]
    if k == 1:
        layer_of = _path_distances(part.vertices)
    else:
        layer_of = [0] * n
        for i, layer in enumerate(part.layers):
            for v in layer:
                layer_of[v] = i
    return LayeredConstruction(
        Graph(n, edges),
        part,
        layer_of,
        g_value(r, k) if copies_override is None else copies_override,
        copies_override is None,
    )


def _path_distances(seq: list[int]) -> list[int]:
    out = [0] * len(seq)
    for i, v in enumerate(seq):
        out[v] = i
    return out


def _build(r: int, k: int, override, counter: list[int], edges: list) -> GrkPart:
    if k == 1:
        start = counter[0]
        counter[0] += 2 * r
        seq = list(range(start, start + 2 * r))
        edges.extend(zip(seq, seq[1:]))
        return GrkPart(r, 1, seq)
    m = g_value(r, k) if override is None else override
    root = counter[0]
    counter[0] += 1
    part = GrkPart(r, k, [root], root, [[root]])
    for i in range(r):
        nxt = []
        for v in part.layers[i]:
            mine = []
            for _ in range(m):
                sub = _build(i + 1, k - 1, override, counter, edges)
                edges.extend((v, x) for x in sub.vertices)
                mine.append(sub)
                nxt.extend(sub.vertices)
            part.copies[v] = mine
        part.layers.append(nxt)
        part.vertices.extend(nxt)
    return part


def grk_decomposition(lc: LayeredConstruction) -> TreeDecomposition:
    """k-simple decomposition following the construction.

    Root bag ``{s}``; each private copy of ``v`` contributes its own
    (k-1)-simple decomposition with ``v`` added to every bag, hung by its
    first node off the first bag that contains ``v``.
    """
    bags: list[frozenset[int]] = []
    tree_edges: list[tuple[int, int]] = []
    _decompose(lc.part, frozenset(), bags, tree_edges)
    return TreeDecomposition(tuple(bags), tuple(sorted(tree_edges)))


def _decompose(part: GrkPart, extra: frozenset, bags: list, tree_edges: list) -> dict[int, int]:
    """Append ``part``'s bags (each joined with ``extra``); return vertex -> first bag."""
    first = {}
    if part.k == 1:
        seq = part.vertices
        base = len(bags)
        if len(seq) == 1:
            bags.append(extra | {seq[0]})
        for j in range(len(seq) - 1):
            bags.append(extra | {seq[j], seq[j + 1]})
            if j:
                tree_edges.append((base + j - 1, base + j))
        for j, v in enumerate(seq):
            first[v] = base + max(0, j - 1)
        return first
    first[part.root] = len(bags)
    bags.append(extra | {part.root})
    for layer in part.layers[:-1]:
        for v in layer:
            for sub in part.copies[v]:
                start = len(bags)
                inner = _decompose(sub, extra | {v}, bags, tree_edges)
                tree_edges.append((first[v], start))
                first.update(inner)
    return first


def witness_vertex(lc: LayeredConstruction, sigma: VertexOrdering) -> tuple[int, int]:
    """A vertex ``w`` with at least ``g(r, k)`` vertices weakly ``r``-reachable from it.

    Walks down from the root: at ``v_i``, if every private copy has a vertex
    before ``v_i`` those copies already give ``g(r, k)`` reachable vertices;
    otherwise it descends into a copy lying entirely after ``v_i`` (smallest
    minimum id first) and recurses there with radius ``i + 1``. Paths use the
    path witness. Returns ``(w, g(r, k))``; the count is a claim to be checked
    against :func:`~wcol.graph.wreach_set`.
    """
    if not lc.faithful:
        raise ValueError("witness needs the faithful construction (no copies_override)")
    if len(sigma) != lc.graph.n:
        raise ValueError("ordering does not match the graph")
    return _witness(lc.part, sigma.position), g_value(lc.r, lc.k)


def _witness(part: GrkPart, pos) -> int:
    if part.k == 1:
        return path_witness_vertex(part.vertices, pos, part.r)
    v = part.root
    for _ in range(part.r):
        pv = pos[v]
        after = [h for h in part.copies[v] if min(pos[x] for x in h.vertices) > pv]
        if not after:
            return v
        h = min(after, key=lambda h: min(h.vertices))
        v = _witness(h, pos)
    return v
