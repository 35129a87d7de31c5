"""Exact solvers for small graphs: minimum weak (or strong) coloring number
over all orderings, and treedepth with an elimination-forest witness.

Both are exponential and meant as oracles for graphs of roughly a dozen
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import INF, Graph, VertexOrdering, degeneracy_ordering, normalize_radius, scol_under, wcol_under


@dataclass(frozen=True)
class EliminationForest:
    """Rooted forest on the vertices; ``parent[v]`` is ``None`` for roots."""

    parent: tuple

    @property
    def roots(self) -> list[int]:
        return [v for v, p in enumerate(self.parent) if p is None]

    def depth(self, v: int) -> int:
        """Number of vertices on the path from ``v`` up to its root."""
        d = 0
        seen = set()
        while v is not None:
            if v in seen:
                raise ValueError("parent pointers contain a cycle")
            seen.add(v)
            d += 1
            v = self.parent[v]
        return d

    def height(self) -> int:
        return max((self.depth(v) for v in range(len(self.parent))), default=0)

    def ancestors(self, v: int) -> set[int]:
        out = set()
        while v is not None:
            out.add(v)
            v = self.parent[v]
        return out


def check_elimination_forest(g: Graph, f: EliminationForest) -> bool:
    """True iff every edge of ``g`` joins an ancestor-descendant pair of ``f``."""
    if len(f.parent) != g.n:
        raise ValueError(f"forest spans {len(f.parent)} vertices, graph has {g.n}")
    for v, p in enumerate(f.parent):
        if p is not None and not 0 <= p < g.n:
            raise ValueError(f"parent of {v} out of range")
    f.height()  # raises on cycles
    anc = [f.ancestors(v) for v in range(g.n)]
    return all(u in anc[v] or v in anc[u] for u, v in g.edges())


@dataclass
class ExactResult:
    """Outcome of an exact search.

    ``optimal`` is False when the node budget ran out; ``value`` and the
    witness are then only the best incumbent found.
    """

    value: int
    ordering: VertexOrdering | None = None
    forest: EliminationForest | None = None
    nodes_explored: int = 0
    optimal: bool = True


class _Budget(Exception):
    pass


def exact_wcol(g: Graph, r, budget: int | None = None, strong: bool = False) -> ExactResult:
    """Minimum of ``wcol_r(g, sigma)`` (or ``scol_r`` with ``strong=True``) over all orderings.

    Depth-first over ordering prefixes, extending by ascending vertex id. When
    a vertex is appended, its reach set among the placed vertices is final
    (every unplaced vertex lies above all of them), so a prefix is cut as soon
    as one placed vertex reaches the incumbent value. The search starts from
    the smallest-last ordering's value as an inclusive bound, so the returned
    witness is the lexicographically smallest optimal ordering.
    """
    n = g.n
    if n == 0:
        raise ValueError("empty graph")
    r = normalize_radius(g, r)
    adj = g.adjacency
    start, _ = degeneracy_ordering(g)
    evaluate = scol_under if strong else wcol_under
    start_value = evaluate(g, start, r)

    unplaced = n  # position sentinel for vertices not yet placed
    pos = [unplaced] * n
    prefix: list[int] = []
    state = {"bound": start_value + 1, "best": None, "nodes": 0}

    def reach_size(x: int, p: int) -> int:
        if strong:
            return _strong_size(x, p)
        # largest achievable minimum position over x-walks of <= r edges
        best = {x: p}
        frontier = [x]
        steps = 0
        while frontier and steps < r:
            steps += 1
            changed = {}
            for y in frontier:
                by = best[y]
                for z in adj[y]:
                    c = by if by < pos[z] else pos[z]
                    if c > best.get(z, -1) and c > changed.get(z, -1):
                        changed[z] = c
            best.update(changed)
            frontier = list(changed)
        return sum(1 for u, b in best.items() if b == pos[u] and pos[u] <= p)

    def _strong_size(x: int, p: int) -> int:
        # earlier vertices reachable through unplaced vertices only
        count = 1
        seen = {x}
        frontier = [x]
        d = 0
        while frontier and d < r:
            d += 1
            nxt = []
            for y in frontier:
                for z in adj[y]:
                    if z in seen:
                        continue
                    seen.add(z)
                    if pos[z] < p:
                        count += 1
                    elif pos[z] == unplaced:
                        nxt.append(z)
            frontier = nxt
        return count

    def dfs(depth: int) -> None:
        if state["current"] >= state["bound"]:
            return  # the bound dropped below this prefix after it was extended
        if depth == n:
            state["best"] = tuple(prefix)
            state["bound"] = state["current"]
            return
        for x in range(n):
            if pos[x] != unplaced:
                continue
            state["nodes"] += 1
            if budget is not None and state["nodes"] > budget:
                raise _Budget
            pos[x] = depth
            size = reach_size(x, depth)
            if size < state["bound"]:
                prefix.append(x)
                saved = state.get("current", 0)
                state["current"] = max(saved, size)
                dfs(depth + 1)
                state["current"] = saved
                prefix.pop()
            pos[x] = unplaced

    state["current"] = 0
    optimal = True
    try:
        dfs(0)
    except _Budget:
        optimal = False
    if state["best"] is None:
        return ExactResult(start_value, start, nodes_explored=state["nodes"], optimal=False)
    sigma = VertexOrdering(state["best"])
    return ExactResult(state["bound"], sigma, nodes_explored=state["nodes"], optimal=optimal)


def exact_scol(g: Graph, r, budget: int | None = None) -> ExactResult:
    return exact_wcol(g, r, budget=budget, strong=True)


def exact_treedepth(g: Graph) -> ExactResult:
    """Treedepth by memoized recursion over vertex subsets (bitmasks).

    ``td(S) = 1 + min_v td(S - v)`` for connected ``S``, and the maximum over
    components otherwise. The witness forest roots each connected part at the
    smallest vertex attaining the minimum.
    """
    n = g.n
    if n == 0:
        return ExactResult(0, forest=EliminationForest(()))
    nbr = [0] * n
    for v in range(n):
        for u in g.adjacency[v]:
            nbr[v] |= 1 << u
    counter = [0]

    def components(mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            comp = low
            frontier = low
            while frontier:
                grow = 0
                f = frontier
                while f:
                    b = f & -f
                    grow |= nbr[b.bit_length() - 1]
                    f ^= b
                grow &= mask & ~comp
                comp |= grow
                frontier = grow
            out.append(comp)
            mask &= ~comp
        return out

    @lru_cache(maxsize=None)
    def td_connected(mask: int) -> tuple[int, int]:
        counter[0] += 1
        if mask & (mask - 1) == 0:
            return 1, mask.bit_length() - 1
        best, arg = n + 1, -1
        m = mask
        while m:
            b = m & -m
            m ^= b
            rest = mask ^ b
            h = 0
            for c in components(rest):
                h = max(h, td_connected(c)[0])
                if h + 1 >= best:
                    break
            if h + 1 < best:
                best, arg = h + 1, b.bit_length() - 1
        return best, arg

    parent: list = [None] * n

    def build(mask: int, above) -> None:
        for c in components(mask):
            _, v = td_connected(c)
            parent[v] = above
            build(c ^ (1 << v), v)

    full = (1 << n) - 1
    value = max(td_connected(c)[0] for c in components(full))
    build(full, None)
    return ExactResult(value, forest=EliminationForest(tuple(parent)), nodes_explored=counter[0])


def forest_ordering(f: EliminationForest) -> VertexOrdering:
    """Ordering listing vertices by depth (ancestors first), then by id."""
    n = len(f.parent)
    return VertexOrdering(sorted(range(n), key=lambda v: (f.depth(v), v)))
