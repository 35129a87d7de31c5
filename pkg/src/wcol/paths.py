"""Orderings of paths: treedepth orderings, the radius-``r`` upper-bound
ordering, and the lower-bound witness that works against any ordering.

A path is given either as a :class:`~wcol.graph.Graph` (enumerated from its
smaller-id endpoint) or, in the ``*_sequence`` helpers, as the explicit
end-to-end list of its vertices.
"""

from __future__ import annotations

from typing import Sequence

from .graph import INF, Graph, VertexOrdering, path_graph, wreach_set, wreach_sets


def ceil_log2(x: int) -> int:
    """``ceil(log2(x))`` for integers ``x >= 1``."""
    if x < 1:
        raise ValueError("ceil_log2 needs x >= 1")
    return (x - 1).bit_length()


def path_td_value(n: int) -> int:
    """Treedepth of the path on ``n`` vertices, ``ceil(log2(n + 1))``.

    ``n = 0`` is the degenerate empty path and gives 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return ceil_log2(n + 1)


def thm1_upper(r: int) -> int:
    """Upper bound ``ceil(log2 r) + 2`` on ``wcol_r`` of any path."""
    return ceil_log2(r) + 2


def thm1_lower(r: int) -> int:
    """Lower bound ``ceil(log2(r + 1)) + 1`` for paths on at least ``2r`` vertices."""
    return ceil_log2(r + 1) + 1


def path_enumeration(g: Graph) -> list[int]:
    """Vertices of a path graph from one end to the other.

    Starts at the smaller-id endpoint. Raises ``ValueError`` if ``g`` is not a
    single path.
    """
    if g.n == 0:
        return []
    if g.n == 1:
        return [0]
    ends = [v for v in g.vertices() if g.degree(v) == 1]
    if len(ends) != 2 or g.m != g.n - 1 or any(g.degree(v) > 2 for v in g.vertices()):
        raise ValueError("graph is not a path")
    seq = [ends[0]]
    prev = -1
    while len(seq) < g.n:
        x = seq[-1]
        nxt = [y for y in g.adjacency[x] if y != prev]
        if not nxt:
            raise ValueError("graph is not a path")
        prev = x
        seq.append(nxt[0])
    return seq


def path_td_sequence(seq: Sequence[int]) -> list[int]:
    """Treedepth ordering of a path given end to end.

    The middle vertex (position ``ceil(m/2)`` of an ``m``-vertex segment) comes
    first, then both halves recursively, level by level.
    """
    out = []
    level = [(0, len(seq))] if seq else []
    while level:
        nxt = []
        for lo, hi in level:
            mid = lo + (hi - lo + 1) // 2 - 1
            out.append(seq[mid])
            if mid > lo:
                nxt.append((lo, mid))
            if hi > mid + 1:
                nxt.append((mid + 1, hi))
        level = nxt
    return out


def path_td_ordering(p: Graph | int) -> VertexOrdering:
    """Ordering of a path with ``wcol_inf`` equal to its treedepth."""
    if isinstance(p, int):
        p = path_graph(p)
    return VertexOrdering(path_td_sequence(path_enumeration(p)))


def thm1_sequence(seq: Sequence[int], r: int) -> list[int]:
    """The upper-bound ordering for radius ``r`` on a path given end to end.

    For ``r = 1`` this is the enumeration itself. Otherwise every ``r``-th
    vertex (1-based positions ``r, 2r, ...``) comes first, left to right,
    followed by a treedepth ordering of each gap, gaps left to right.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if r == 1:
        return list(seq)
    n = len(seq)
    hubs = [seq[i] for i in range(r - 1, n, r)]
    out = list(hubs)
    start = 0
    for i in list(range(r - 1, n, r)) + [n]:
        out.extend(path_td_sequence(seq[start:i]))
        start = i + 1
    return out


def thm1_ordering(p: Graph | int, r: int) -> VertexOrdering:
    """Ordering of a path with ``wcol_r <= ceil(log2 r) + 2``."""
    if isinstance(p, int):
        p = path_graph(p)
    return VertexOrdering(thm1_sequence(path_enumeration(p), r))


def path_lower_witness(p: Graph | int, sigma: VertexOrdering, r: int) -> tuple[int, set[int]]:
    """A vertex whose weak ``r``-reach set has at least ``ceil(log2(r+1)) + 1`` members.

    Takes the ``sigma``-minimum vertex ``v0``, the ``r`` vertices next to it
    on a side that has at least ``r`` of them (left side first), and inside
    that subpath the vertex with the largest ``WReach_inf`` (smallest id on
    ties). Requires ``n >= 2r``.
    """
    if isinstance(p, int):
        p = path_graph(p)
    if r < 1:
        raise ValueError("r must be >= 1")
    if p.n < 2 * r:
        raise ValueError(f"path on {p.n} vertices is shorter than 2r = {2 * r}")
    q = path_witness_vertex(path_enumeration(p), sigma.position, r)
    return q, wreach_set(p, sigma, q, r)


def path_witness_vertex(seq: Sequence[int], pos: Sequence[int], r: int) -> int:
    """Witness vertex for a path given end to end, under positions ``pos``.

    ``pos`` may be the position map of an ordering of a larger graph; only
    the relative order of ``seq``'s vertices matters.
    """
    i0 = min(range(len(seq)), key=lambda i: pos[seq[i]])
    if i0 >= r:
        sub = seq[i0 - r:i0]
    else:
        sub = seq[i0 + 1:i0 + 1 + r]
    q_graph = path_graph(len(sub))
    local = VertexOrdering(sorted(range(len(sub)), key=lambda j: pos[sub[j]]))
    sizes = [len(s) for s in wreach_sets(q_graph, local, INF)]
    best = max(sizes)
    return min(sub[j] for j in range(len(sub)) if sizes[j] == best)
