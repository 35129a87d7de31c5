"""Reading and writing graphs, orderings and decompositions.

JSON is the native format; edge-list text is accepted for graphs. Reports
are CSV rows with fixed columns.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .graph import Graph, VertexOrdering
from .lowerbound import GrkPart, LayeredConstruction
from .treedecomp import TreeDecomposition

CSV_COLUMNS = ("family", "params", "r", "k", "lower", "constructed", "exact", "upper", "witness_size", "ms")


@dataclass
class GraphFile:
    graph: Graph
    name: str = ""
    metadata: dict = field(default_factory=dict)


def graph_to_json(g: Graph, name: str = "", metadata: dict | None = None) -> dict:
    return {"name": name, "n": g.n, "edges": [list(e) for e in g.edges()], "metadata": metadata or {}}


def graph_from_json(data: dict) -> GraphFile:
    g = Graph(int(data["n"]), (tuple(e) for e in data.get("edges", [])))
    return GraphFile(g, data.get("name", ""), data.get("metadata", {}) or {})


def parse_edge_list(text: str) -> GraphFile:
    """``u v`` per line, ``#`` starts a comment. Labels are renumbered from 0.

    All-integer labels are renumbered in numeric order, anything else in order
    of first appearance; the original labels go to ``metadata["labels"]``.
    """
    pairs = []
    seen: dict[str, None] = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) == 1:
            seen.setdefault(parts[0])
            continue
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {line!r}")
        for p in parts:
            seen.setdefault(p)
        pairs.append(tuple(parts))
    labels = list(seen)
    try:
        labels.sort(key=int)
        numeric = True
    except ValueError:
        numeric = False
    index = {lab: i for i, lab in enumerate(labels)}
    edges = {(min(index[a], index[b]), max(index[a], index[b])) for a, b in pairs if a != b}
    g = Graph(len(labels), sorted(edges))
    meta = {"labels": [int(x) for x in labels] if numeric else labels}
    return GraphFile(g, "", meta)


def format_edge_list(g: Graph) -> str:
    lines = [f"# n={g.n} m={g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    lines += [str(v) for v in g.vertices() if not g.adjacency[v]]
    return "\n".join(lines) + "\n"


def load_graph(path: str | Path) -> GraphFile:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graph_from_json(json.loads(text))
    return parse_edge_list(text)


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def ordering_to_json(sigma: VertexOrdering) -> list[int]:
    return list(sigma.sequence)


def ordering_from_json(data) -> VertexOrdering:
    return VertexOrdering(int(v) for v in data)


def td_to_json(td: TreeDecomposition) -> dict:
    return {
        "nodes": td.node_count,
        "tree_edges": [list(e) for e in td.tree_edges],
        "bags": [sorted(b) for b in td.bags],
    }


def td_from_json(data: dict) -> TreeDecomposition:
    bags = data["bags"]
    if len(bags) != int(data.get("nodes", len(bags))):
        raise ValueError("'nodes' disagrees with the number of bags")
    return TreeDecomposition.build(bags, (tuple(e) for e in data.get("tree_edges", [])))


def _part_to_json(part: GrkPart) -> dict:
    out = {"r": part.r, "k": part.k, "vertices": part.vertices}
    if part.k > 1:
        out["root"] = part.root
        out["layers"] = part.layers
        out["copies"] = {str(v): [_part_to_json(h) for h in hs] for v, hs in part.copies.items()}
    return out


def _part_from_json(d: dict) -> GrkPart:
    if d["k"] == 1:
        return GrkPart(d["r"], 1, list(d["vertices"]))
    return GrkPart(
        d["r"],
        d["k"],
        list(d["vertices"]),
        d["root"],
        [list(L) for L in d["layers"]],
        {int(v): [_part_from_json(h) for h in hs] for v, hs in d["copies"].items()},
    )


def construction_metadata(lc: LayeredConstruction) -> dict:
    """The ``grk`` metadata block."""
    return {
        "r": lc.r,
        "k": lc.k,
        "copies_per_vertex": lc.copies_per_vertex,
        "faithful": lc.faithful,
        "root": lc.root,
        "layer_of": lc.layer_of,
        "registry": _part_to_json(lc.part),
    }


def construction_from_metadata(g: Graph, meta: dict) -> LayeredConstruction:
    block = meta["grk"] if "grk" in meta else meta
    lc = LayeredConstruction(
        g,
        _part_from_json(block["registry"]),
        list(block["layer_of"]),
        block["copies_per_vertex"],
        bool(block["faithful"]),
    )
    if len(lc.layer_of) != g.n:
        raise ValueError("grk metadata does not match the graph")
    return lc


@dataclass
class BoundReport:
    """One report row; absent values stay ``None`` and print as empty cells."""

    family: str
    params: str = ""
    r: int | float | None = None
    k: int | None = None
    lower: int | None = None
    constructed: int | None = None
    exact: int | None = None
    upper: int | None = None
    witness_size: int | None = None
    ms: float | None = None

    def consistent(self) -> bool:
        """``lower <= exact <= constructed <= upper`` over whichever are present."""
        chain = [x for x in (self.lower, self.exact, self.constructed, self.upper) if x is not None]
        if any(a > b for a, b in zip(chain, chain[1:])):
            return False
        if self.witness_size is not None and self.lower is not None and self.witness_size < self.lower:
            return False
        return True

    def as_dict(self) -> dict:
        d = {c: getattr(self, c) for c in CSV_COLUMNS}
        if d["r"] == float("inf"):
            d["r"] = "inf"
        return d


def write_csv(rows: Iterable[BoundReport], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        d = row.as_dict()
        w.writerow(["" if d[c] is None else d[c] for c in CSV_COLUMNS])


def read_csv(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def rows_to_json(rows: Iterable[BoundReport]) -> str:
    return json.dumps([r.as_dict() for r in rows], indent=1) + "\n"
