"""Graphs, vertex orderings and weak/strong reachability.

Vertices are the integers ``0 .. n-1``. A radius is a nonnegative integer or
``INF`` (``math.inf``); finite radii of at least ``n - 1`` behave exactly like
``INF`` on an ``n``-vertex graph and are normalized to it internally.
"""

from __future__ import annotations

import heapq
import math
import random
from collections import deque
from typing import Iterable, Iterator, Sequence

INF = math.inf


class Graph:
    """Finite simple undirected graph on ``0 .. n-1``.

    Immutable after construction. ``adjacency[v]`` is the sorted tuple of
    neighbours of ``v``.
    """

    __slots__ = ("n", "adjacency", "_nbr_sets", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self.adjacency = tuple(tuple(sorted(s)) for s in sets)
        self._nbr_sets = tuple(frozenset(s) for s in sets)
        self._m = sum(len(s) for s in sets) // 2

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> "Graph":
        return cls(len(adjacency), ((u, v) for u, nb in enumerate(adjacency) for v in nb if u < v))

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.adjacency))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(self.n, [*self.edges(), *extra])

    def subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph, relabelled.

        Returns ``(h, labels)`` where vertex ``j`` of ``h`` is ``labels[j]``
        of ``self``; labels are in ascending order.
        """
        labels = sorted(set(vertices))
        index = {v: j for j, v in enumerate(labels)}
        edges = [
            (index[u], index[w])
            for u in labels
            for w in self.adjacency[u]
            if u < w and w in index
        ]
        return Graph(len(labels), edges), labels

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by minimum vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class VertexOrdering:
    """A linear order of the vertices; ``sequence[0]`` is the minimum."""

    __slots__ = ("sequence", "position")

    def __init__(self, sequence: Iterable[int]):
        seq = tuple(sequence)
        pos = [-1] * len(seq)
        for i, v in enumerate(seq):
            if not 0 <= v < len(seq) or pos[v] != -1:
                raise ValueError("ordering must be a permutation of 0..n-1")
            pos[v] = i
        self.sequence = seq
        self.position = tuple(pos)

    @classmethod
    def identity(cls, n: int) -> "VertexOrdering":
        return cls(range(n))

    @classmethod
    def random(cls, n: int, rng: random.Random | int | None = None) -> "VertexOrdering":
        if not isinstance(rng, random.Random):
            rng = random.Random(rng)
        seq = list(range(n))
        rng.shuffle(seq)
        return cls(seq)

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[int]:
        return iter(self.sequence)

    def __getitem__(self, i):
        return self.sequence[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexOrdering) and self.sequence == other.sequence

    def __hash__(self) -> int:
        return hash(self.sequence)

    def __repr__(self) -> str:
        return f"VertexOrdering({list(self.sequence)})"

    def less(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]

    def restrict(self, vertices: Iterable[int]) -> list[int]:
        """The given vertices listed in this order."""
        return sorted(vertices, key=self.position.__getitem__)


class BFSLayering:
    """Distance classes from ``root`` within its component."""

    __slots__ = ("root", "layer_of", "layers")

    def __init__(self, root: int, layer_of: dict[int, int], layers: list[list[int]]):
        self.root = root
        self.layer_of = layer_of
        self.layers = layers

    @property
    def depth(self) -> int:
        """Index ``q`` of the last nonempty layer."""
        return len(self.layers) - 1

    def __repr__(self) -> str:
        return f"BFSLayering(root={self.root}, sizes={[len(L) for L in self.layers]})"


def bfs_layering(g: Graph, root: int) -> BFSLayering:
    if not 0 <= root < g.n:
        raise ValueError(f"invalid root {root}")
    layer_of = {root: 0}
    layers = [[root]]
    frontier = [root]
    while frontier:
        nxt = []
        d = len(layers)
        for x in frontier:
            for y in g.adjacency[x]:
                if y not in layer_of:
                    layer_of[y] = d
                    nxt.append(y)
        if nxt:
            nxt.sort()
            layers.append(nxt)
        frontier = nxt
    return BFSLayering(root, layer_of, layers)


def normalize_radius(g: Graph, r) -> float | int:
    if isinstance(r, str):
        r = parse_radius(r)
    if r is None or r == INF:
        return INF
    if r < 0 or int(r) != r:
        raise ValueError(f"radius must be a nonnegative integer or INF, got {r!r}")
    r = int(r)
    return INF if g.n and r >= g.n - 1 else r


def parse_radius(text: str) -> float | int:
    t = text.strip().lower()
    if t in ("inf", "infinity", "oo"):
        return INF
    r = int(t)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return r


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"invalid vertex {v}")


def _check_ordering(g: Graph, sigma: VertexOrdering) -> None:
    if len(sigma) != g.n:
        raise ValueError(f"ordering has {len(sigma)} vertices, graph has {g.n}")


# -- single-vertex queries -------------------------------------------------

def wreach_set(g: Graph, sigma: VertexOrdering, v: int, r) -> set[int]:
    """Vertices weakly ``r``-reachable from ``v`` under ``sigma``.

    Uses bottleneck distances: ``best[x]`` is the largest achievable minimum
    position over ``v``-``x`` walks of at most ``d`` edges. ``u`` is weakly
    reachable iff that maximum equals ``u``'s own position.
    """
    _check_vertex(g, v)
    _check_ordering(g, sigma)
    r = normalize_radius(g, r)
    pos = sigma.position
    adj = g.adjacency
    pv = pos[v]
    if r == INF:
        # maximum-bottleneck search; only vertices below v matter
        best = {v: pv}
        heap = [(-pv, v)]
        done = set()
        while heap:
            negb, x = heapq.heappop(heap)
            if x in done:
                continue
            done.add(x)
            b = -negb
            for y in adj[x]:
                cand = min(b, pos[y])
                if cand > best.get(y, -1):
                    best[y] = cand
                    heapq.heappush(heap, (-cand, y))
        return {u for u, b in best.items() if b == pos[u]}
    best = {v: pv}
    frontier = {v}
    for _ in range(r):
        changed = {}
        for x in frontier:
            bx = best[x]
            for y in adj[x]:
                cand = bx if bx < pos[y] else pos[y]
                if cand > best.get(y, -1) and cand > changed.get(y, -1):
                    changed[y] = cand
        if not changed:
            break
        best.update(changed)
        frontier = set(changed)
    return {u for u, b in best.items() if b == pos[u]}


def sreach_set(g: Graph, sigma: VertexOrdering, v: int, r) -> set[int]:
    """``v`` plus the vertices strongly ``r``-reachable from ``v``."""
    _check_vertex(g, v)
    _check_ordering(g, sigma)
    r = normalize_radius(g, r)
    return _sreach_from(g.adjacency, sigma.position, v, r)


def _sreach_from(adj, pos, v, r) -> set[int]:
    pv = pos[v]
    out = {v}
    if r == 0:
        return out
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if dx >= r:
            continue
        for y in adj[x]:
            if y in dist:
                continue
            dist[y] = dx + 1
            if pos[y] < pv:
                out.add(y)
            elif pos[y] > pv:
                queue.append(y)
    return out


# -- all-vertex sweeps -----------------------------------------------------

def wreach_sets(g: Graph, sigma: VertexOrdering, r) -> list[set[int]]:
    """``WReach_r`` for every vertex at once.

    Finite ``r``: for each ``u`` in ascending order, BFS from ``u`` through
    vertices above ``u``; every vertex met within distance ``r`` weakly
    reaches ``u``. ``INF``: vertices are added in descending order and merged
    into components; each vertex weakly reaches exactly its ancestors in the
    resulting merge forest.
    """
    _check_ordering(g, sigma)
    r = normalize_radius(g, r)
    n = g.n
    adj = g.adjacency
    pos = sigma.position
    out: list[set[int]] = [set() for _ in range(n)]
    if r == INF:
        parent = _merge_forest(adj, sigma)
        for v in range(n):
            x = v
            s = out[v]
            while x != -1:
                s.add(x)
                x = parent[x]
        return out
    for u in sigma.sequence:
        pu = pos[u]
        out[u].add(u)
        if r == 0:
            continue
        dist = {u: 0}
        frontier = [u]
        for d in range(1, r + 1):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist and pos[y] > pu:
                        dist[y] = d
                        nxt.append(y)
                        out[y].add(u)
            if not nxt:
                break
            frontier = nxt
    return out


def _merge_forest(adj, sigma: VertexOrdering) -> list[int]:
    """Parent pointers of the reverse-order component-merge forest."""
    n = len(sigma)
    pos = sigma.position
    parent = [-1] * n
    uf = list(range(n))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for u in reversed(sigma.sequence):
        pu = pos[u]
        for y in adj[u]:
            if pos[y] > pu:
                ry = find(y)
                if ry != u:
                    # ry is the topmost (σ-least) vertex of y's component
                    parent[ry] = u
                    uf[ry] = u
    return parent


def wreach_sizes(g: Graph, sigma: VertexOrdering, r) -> list[int]:
    return [len(s) for s in wreach_sets(g, sigma, r)]


def wcol_under(g: Graph, sigma: VertexOrdering, r) -> int:
    """``max_v |WReach_r[g, sigma, v]|``."""
    if g.n == 0:
        raise ValueError("empty graph")
    return max(wreach_sizes(g, sigma, r))


def sreach_sets(g: Graph, sigma: VertexOrdering, r) -> list[set[int]]:
    _check_ordering(g, sigma)
    r = normalize_radius(g, r)
    return [_sreach_from(g.adjacency, sigma.position, v, r) for v in range(g.n)]


def scol_under(g: Graph, sigma: VertexOrdering, r) -> int:
    if g.n == 0:
        raise ValueError("empty graph")
    return max(len(s) for s in sreach_sets(g, sigma, r))


def degeneracy_ordering(g: Graph) -> tuple[VertexOrdering, int]:
    """Smallest-last ordering and ``col(g)`` (degeneracy + 1).

    Repeatedly removes a minimum-degree vertex (smallest id on ties); the
    ordering is the reverse removal order, so every vertex has at most
    ``degeneracy`` earlier neighbours.
    """
    n = g.n
    if n == 0:
        raise ValueError("empty graph")
    deg = [g.degree(v) for v in range(n)]
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    order = []
    worst = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        worst = max(worst, d)
        for y in g.adjacency[v]:
            if not removed[y]:
                deg[y] -= 1
                heapq.heappush(heap, (deg[y], y))
    order.reverse()
    return VertexOrdering(order), worst + 1


def random_connected_graph(n: int, extra_edges: int, rng: random.Random | int | None = None) -> Graph:
    """Random spanning tree plus up to ``extra_edges`` further random edges."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    edges = {(min(v, u), max(v, u)) for v in range(1, n) for u in [rng.randrange(v)]}
    free = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(free)
    edges.update(free[:extra_edges])
    return Graph(n, sorted(edges))


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected graph on vertex set ``0 .. n-1`` (all edge subsets)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        g = Graph(n, [e for j, e in enumerate(pairs) if mask >> j & 1])
        if n == 1 or g.is_connected():
            yield g
