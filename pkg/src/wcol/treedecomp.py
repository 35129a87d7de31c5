"""Tree decompositions and the operations on them used by the orderings.

Besides validity and simplicity checks this covers minor operations and the
per-layer decomposition of a BFS layering. A generator for random simple
k-trees lives here too.
"""

from __future__ import annotations

import heapq
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .graph import BFSLayering, Graph


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags indexed by tree node ``0 .. node_count-1`` plus the tree's edges.

    Bags hold vertex ids of whatever graph the decomposition belongs to.
    """

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...] = ()

    @classmethod
    def build(cls, bags: Iterable[Iterable[int]], tree_edges: Iterable[tuple[int, int]] = ()) -> "TreeDecomposition":
        return cls(
            tuple(frozenset(b) for b in bags),
            tuple(sorted((min(s, t), max(s, t)) for s, t in tree_edges)),
        )

    @cached_property
    def occurrences(self) -> dict[int, list[int]]:
        """Vertex -> ascending list of the nodes whose bag holds it."""
        out: dict[int, list[int]] = {}
        for t, b in enumerate(self.bags):
            for x in b:
                out.setdefault(x, []).append(t)
        return out

    @property
    def node_count(self) -> int:
        return len(self.bags)

    def vertices(self) -> set[int]:
        return set().union(*self.bags) if self.bags else set()

    def relabel(self, mapping) -> "TreeDecomposition":
        """Rename vertices; ``mapping`` is a dict or a sequence indexed by old id."""
        get = mapping.__getitem__
        return TreeDecomposition.build(({get(v) for v in b} for b in self.bags), self.tree_edges)

    def __repr__(self) -> str:
        bags = [sorted(b) for b in self.bags]
        return f"TreeDecomposition(bags={bags}, tree_edges={list(self.tree_edges)})"


class Validation(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


class ShadowError(ValueError):
    """A shadow that should be a clique is not."""


def validate_td(g: Graph, td: TreeDecomposition) -> Validation:
    """Check that ``td`` is a tree decomposition of ``g``.

    The reason string names the first violated condition: tree shape, vertex
    range, the connected-subtree property, or edge coverage.
    """
    nodes = td.node_count
    if nodes == 0:
        return Validation(g.n == 0, "" if g.n == 0 else "no tree nodes")
    if len(td.tree_edges) != nodes - 1:
        return Validation(False, f"tree has {nodes} nodes but {len(td.tree_edges)} edges")
    uf = list(range(nodes))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    for s, t in td.tree_edges:
        if not (0 <= s < nodes and 0 <= t < nodes) or s == t:
            return Validation(False, f"bad tree edge ({s}, {t})")
        rs, rt = find(s), find(t)
        if rs == rt:
            return Validation(False, f"tree edge ({s}, {t}) closes a cycle")
        uf[rs] = rt

    where: list[list[int]] = [[] for _ in range(g.n)]
    for t, bag in enumerate(td.bags):
        for v in bag:
            if not 0 <= v < g.n:
                return Validation(False, f"bag {t} holds unknown vertex {v}")
            where[v].append(t)
    inner = Counter()
    for s, t in td.tree_edges:
        for v in td.bags[s] & td.bags[t]:
            inner[v] += 1
    for v in range(g.n):
        if not where[v]:
            return Validation(False, f"vertex {v} is in no bag")
        if inner[v] != len(where[v]) - 1:
            return Validation(False, f"bags containing vertex {v} do not form a subtree")
    for u, v in g.edges():
        if len(where[u]) > len(where[v]):
            u, v = v, u
        if not any(v in td.bags[t] for t in where[u]):
            return Validation(False, f"edge ({u}, {v}) is in no bag")
    return Validation(True)


def width(td: TreeDecomposition) -> int:
    return max((len(b) for b in td.bags), default=0) - 1


def is_k_simple(td: TreeDecomposition, k: int) -> bool:
    """Width at most ``k`` and no ``k``-set of vertices inside more than two bags."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if width(td) > k:
        return False
    seen = Counter()
    for bag in td.bags:
        if len(bag) < k:
            continue
        for x in combinations(sorted(bag), k):
            seen[x] += 1
            if seen[x] > 2:
                return False
    return True


def chordal_fill(g: Graph, td: TreeDecomposition) -> Graph:
    """Supergraph of ``g`` in which every bag of ``td`` is a clique."""
    extra = set()
    for bag in td.bags:
        for u, v in combinations(sorted(bag), 2):
            if not g.has_edge(u, v):
                extra.add((u, v))
    if not extra:
        return g
    return g.add_edges(sorted(extra))


def is_chordal(g: Graph) -> bool:
    """Perfect-elimination test on a maximum-cardinality-search order."""
    n = g.n
    weight = [0] * n
    visited = [False] * n
    order = []
    heap = [(0, v) for v in range(n)]
    while heap:
        w, v = heapq.heappop(heap)
        if visited[v] or -w != weight[v]:
            continue
        visited[v] = True
        order.append(v)
        for y in g.adjacency[v]:
            if not visited[y]:
                weight[y] += 1
                heapq.heappush(heap, (-weight[y], y))
    rank = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [y for y in g.adjacency[v] if rank[y] < rank[v]]
        if len(earlier) < 2:
            continue
        p = max(earlier, key=rank.__getitem__)
        nbp = g.neighbor_set(p)
        if any(y != p and y not in nbp for y in earlier):
            return False
    return True


# -- mutable working form ----------------------------------------------------

class _Work:
    """Bags and tree adjacency under in-place contraction; dead nodes are None."""

    def __init__(self, td: TreeDecomposition):
        self.bags: list[set[int] | None] = [set(b) for b in td.bags]
        self.adj: list[set[int] | None] = [set() for _ in td.bags]
        for s, t in td.tree_edges:
            self.adj[s].add(t)
            self.adj[t].add(s)
        self.where: dict[int, set[int]] = {}  # vertex -> live nodes holding it
        for t, b in enumerate(self.bags):
            for x in b:
                self.where.setdefault(x, set()).add(t)

    def alive(self) -> list[int]:
        return [t for t, b in enumerate(self.bags) if b is not None]

    def contract_edge(self, a: int, b: int) -> tuple[int, set[int]]:
        """Merge adjacent nodes whose bags are nested.

        The node with more tree neighbours survives (smaller id on ties) and
        takes the larger bag. Returns it with the neighbours it inherited.
        """
        keep, gone = (a, b) if (len(self.adj[a]), -a) >= (len(self.adj[b]), -b) else (b, a)
        big = self.bags[a] if self.bags[b] <= self.bags[a] else self.bags[b]
        for x in self.bags[gone]:
            self.where[x].discard(gone)
        if big is self.bags[gone]:
            for x in big:
                self.where[x].add(keep)
            self.bags[keep] = big
        moved = self.adj[gone] - {keep}
        for x in moved:
            self.adj[x].discard(gone)
            self.adj[x].add(keep)
        self.adj[keep] |= moved
        self.adj[keep].discard(gone)
        self.bags[gone] = None
        self.adj[gone] = None
        return keep, moved

    def reduce(self, candidates: Iterable[int] | None = None) -> None:
        """Contract tree edges with nested bags until none is left.

        Only edges at a candidate node, or created by a contraction, are
        inspected. Contraction never creates a nested pair among old edges
        (running intersection), so that is enough for a fixpoint.
        """
        heap = list(self.alive() if candidates is None else set(candidates))
        heapq.heapify(heap)
        queued = set(heap)
        while heap:
            s = heapq.heappop(heap)
            queued.discard(s)
            if self.bags[s] is None:
                continue
            for t in sorted(self.adj[s]):
                if t not in self.adj[s]:
                    continue
                bs, bt = self.bags[s], self.bags[t]
                if not (bs <= bt or bt <= bs):
                    continue
                keep, moved = self.contract_edge(s, t)
                for x in moved:
                    if x not in queued:
                        queued.add(x)
                        heapq.heappush(heap, x)
                if keep != s:
                    break

    def substitute(self, u: int, v: int, w: int) -> list[int]:
        """Replace ``u`` and ``v`` by ``w`` in every bag; return the touched nodes."""
        touched = sorted(self.where.pop(u, set()) | self.where.pop(v, set()))
        for t in touched:
            b = self.bags[t]
            b.discard(u)
            b.discard(v)
            b.add(w)
        self.where[w] = set(touched)
        return touched

    def absorb(self, x: int, w: int) -> list[int]:
        """Rename ``x`` to ``w`` in the bags holding ``x``; return those nodes."""
        touched = sorted(self.where.pop(x, ()))
        into = self.where.setdefault(w, set())
        for t in touched:
            b = self.bags[t]
            b.discard(x)
            b.add(w)
            into.add(t)
        return touched

    def freeze(self) -> TreeDecomposition:
        live = self.alive()
        index = {t: i for i, t in enumerate(live)}
        edges = {(min(index[s], index[t]), max(index[s], index[t])) for s in live for t in self.adj[s]}
        return TreeDecomposition.build((self.bags[t] for t in live), edges)


def reduce_td(td: TreeDecomposition) -> TreeDecomposition:
    """Contract every tree edge whose one bag is contained in the other."""
    work = _Work(td)
    work.reduce()
    return work.freeze()


def minor_delete_vertex(td: TreeDecomposition, v: int) -> TreeDecomposition:
    """Remove ``v`` from every bag. Returns ``td`` itself if ``v`` occurs nowhere."""
    if not any(v in b for b in td.bags):
        return td
    return TreeDecomposition(tuple(b - {v} for b in td.bags), td.tree_edges)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """``g - v`` relabelled compactly, with the old id of every new vertex."""
    return g.subgraph(x for x in g.vertices() if x != v)


def contraction_labels(n: int, u: int, v: int) -> list[int]:
    """Old-to-new vertex map for contracting ``uv``: the larger id merges into the smaller."""
    w, gone = min(u, v), max(u, v)
    return [w if x == gone else (x - 1 if x > gone else x) for x in range(n)]


def minor_contract(g: Graph, td: TreeDecomposition, u: int, v: int) -> tuple[Graph, TreeDecomposition]:
    """Contract edge ``uv`` in ``g`` and carry ``td`` along.

    ``u`` and ``v`` are replaced by ``w = min(u, v)`` in every bag, then tree
    edges with nested bags are contracted to a fixpoint, which keeps a
    k-simple decomposition k-simple. Vertex ids above ``max(u, v)`` shift
    down by one (see :func:`contraction_labels`).
    """
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    w = min(u, v)
    work = _Work(td)
    work.substitute(u, v, w)
    work.reduce()
    new = contraction_labels(g.n, u, v)
    edges = {(min(new[a], new[b]), max(new[a], new[b])) for a, b in g.edges() if new[a] != new[b]}
    h = Graph(g.n - 1, sorted(edges))
    return h, work.freeze().relabel(new)


def restrict_td(td: TreeDecomposition, vertices: Iterable[int]) -> TreeDecomposition:
    """Decomposition of the induced subgraph on ``vertices``, in its local ids.

    Local id ``j`` is the ``j``-th smallest of ``vertices``, as in
    :meth:`Graph.subgraph`.
    """
    keep = sorted(set(vertices))
    index = {x: j for j, x in enumerate(keep)}
    keyset = frozenset(keep)
    occ = td.occurrences
    hit = sorted({t for x in keep for t in occ.get(x, ())})
    node = {t: j for j, t in enumerate(hit)}
    edges = [(node[s], node[t]) for s, t in td.tree_edges if s in node and t in node]
    if hit and len(edges) == len(hit) - 1:
        # the touched nodes already form a subtree (always so for a connected set)
        sub = TreeDecomposition(tuple(td.bags[t] & keyset for t in hit), tuple(edges))
    else:
        sub = TreeDecomposition(tuple(b & keyset for b in td.bags), td.tree_edges)
    work = _Work(sub)
    work.reduce()
    return work.freeze().relabel(index)


def shadow(g: Graph, layering: BFSLayering, i: int, component: Iterable[int]) -> set[int]:
    """Neighbours of ``component`` in layer ``i - 1``; raises if they are not a clique."""
    if i < 1:
        raise ValueError("shadow needs i >= 1")
    comp = set(component)
    lay = layering.layer_of
    if any(lay.get(x, -1) < i for x in comp):
        raise ValueError(f"component has vertices outside layers >= {i}")
    out = {y for x in comp for y in g.adjacency[x] if lay.get(y) == i - 1}
    for a, b in combinations(sorted(out), 2):
        if not g.has_edge(a, b):
            raise ShadowError(f"shadow vertices {a} and {b} are not adjacent")
    return out


def layer_components(g: Graph, layering: BFSLayering, i: int) -> list[list[int]]:
    """Connected components of ``g`` restricted to layers ``>= i``."""
    deep = [v for v, d in layering.layer_of.items() if d >= i]
    h, labels = g.subgraph(deep)
    return [[labels[x] for x in comp] for comp in h.components()]


def layer_decomposition(
    g: Graph, td: TreeDecomposition, layering: BFSLayering, i: int, k: int
) -> TreeDecomposition:
    """A ``(k-1)``-simple decomposition of ``g[L_i]`` from a ``k``-simple one of ``g``.

    Layers beyond ``i`` are deleted, the ball ``L_0 .. L_{i-1}`` is contracted
    into one vertex along its BFS tree (one edge at a time, reducing after
    each step), and that vertex, which then sits in every bag, is dropped.
    The result uses the local ids of ``g.subgraph(layering.layers[i])``.
    """
    if not 0 <= i <= layering.depth:
        raise ValueError(f"layer {i} out of range 0..{layering.depth}")
    if not is_k_simple(td, k):
        raise ValueError(f"decomposition is not {k}-simple")
    layer = layering.layers[i]
    if i == 0:
        return TreeDecomposition.build([{0}])
    lay = layering.layer_of
    keep = {v for v, d in lay.items() if d <= i}
    work = _Work(TreeDecomposition(tuple(b & keep for b in td.bags), td.tree_edges))
    work.reduce()

    rho = layering.root
    for d in range(1, i):
        for x in layering.layers[d]:
            # x's BFS parent is already merged into rho
            if not any(lay.get(y) == d - 1 for y in g.adjacency[x]):
                raise ValueError("layering does not match graph")
            # rho keeps the root's id; it is dropped at the end anyway
            touched = work.absorb(x, rho)
            cand = set(touched)
            for t in touched:
                cand |= work.adj[t]
            work.reduce(cand)

    live = work.alive()
    if any(rho not in work.bags[t] for t in live):
        raise RuntimeError("contracted ball missing from a bag; input decomposition inconsistent")
    for t in live:
        work.bags[t].discard(rho)
    index = {x: j for j, x in enumerate(sorted(layer))}
    return work.freeze().relabel(index)


def path_decomposition(seq: Sequence[int]) -> TreeDecomposition:
    """Width-1 path decomposition of a path given end to end."""
    if len(seq) <= 1:
        return TreeDecomposition.build([set(seq)])
    bags = [{seq[j], seq[j + 1]} for j in range(len(seq) - 1)]
    return TreeDecomposition.build(bags, [(j, j + 1) for j in range(len(bags) - 1)])


@dataclass
class SimpleKTreeTrace:
    """How a simple k-tree was grown: ``attach_log[j] = (new_vertex, clique)``."""

    k: int
    attach_log: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)


def random_simple_ktree(k: int, n: int, seed=None) -> tuple[Graph, TreeDecomposition, SimpleKTreeTrace]:
    """Random simple k-tree on ``n`` vertices with its natural k-simple decomposition.

    Starts from the clique on ``0 .. k``; each new vertex is attached to a
    k-clique drawn uniformly from those not used yet. Bag ``j + 1`` is the
    ``j``-th chosen clique plus its new vertex and hangs off the bag in
    which that clique first appeared.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < k + 1:
        raise ValueError(f"need n >= k + 1 = {k + 1}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    base = tuple(range(k + 1))
    edges = list(combinations(base, 2))
    bags = [set(base)]
    tree_edges = []
    pool = [(c, 0) for c in combinations(base, k)]
    trace = SimpleKTreeTrace(k)
    for x in range(k + 1, n):
        j = rng.randrange(len(pool))
        pool[j], pool[-1] = pool[-1], pool[j]
        clique, home = pool.pop()
        edges.extend((c, x) for c in clique)
        node = len(bags)
        bags.append(set(clique) | {x})
        tree_edges.append((home, node))
        trace.attach_log.append((x, clique))
        for drop in clique:
            pool.append((tuple(sorted([c for c in clique if c != drop] + [x])), node))
    return Graph(n, edges), TreeDecomposition.build(bags, tree_edges), trace
