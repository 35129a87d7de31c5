"""Command-line entry point: ``wcol {gen,order,eval,exact,verify}``.

Data goes to stdout (or ``--out``), log lines to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from contextlib import contextmanager
from pathlib import Path

from . import io as wio
from .exact import exact_scol, exact_treedepth, exact_wcol
from .graph import INF, VertexOrdering, degeneracy_ordering, parse_radius, path_graph, scol_under, wcol_under, wreach_set
from .lowerbound import build_grk, g_value, grk_decomposition, witness_vertex
from .paths import path_td_ordering, path_td_value, thm1_lower, thm1_ordering, thm1_upper
from .stw_order import f_bound, stw_ordering
from .treedecomp import path_decomposition, random_simple_ktree
from . import verify as suites

log = logging.getLogger("wcol")


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _int_list(text: str) -> list[int]:
    out = []
    for chunk in text.split(","):
        if "-" in chunk:
            a, b = chunk.split("-")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(chunk))
    return out


def cmd_gen(args) -> int:
    meta = {"family": args.family}
    td = None
    if args.family == "path":
        g = path_graph(args.n)
        meta["params"] = {"n": args.n}
        td = path_decomposition(list(range(args.n)))
        name = f"P{args.n}"
    elif args.family == "grk":
        lc = build_grk(args.r, args.k, args.copies, max_vertices=args.max_vertices)
        g = lc.graph
        meta["params"] = {"r": args.r, "k": args.k, "copies": args.copies}
        meta["grk"] = wio.construction_metadata(lc)
        td = grk_decomposition(lc)
        name = f"G_{args.r},{args.k}"
    else:
        g, td, trace = random_simple_ktree(args.k, args.n, args.seed)
        meta["params"] = {"k": args.k, "n": args.n, "seed": args.seed}
        meta["attach_log"] = [[x, list(c)] for x, c in trace.attach_log]
        name = f"ktree{args.k}_n{args.n}_s{args.seed}"
    with _output(args.out) as fh:
        fh.write(wio.dumps(wio.graph_to_json(g, name, meta)))
    if args.td_out and td is not None:
        Path(args.td_out).write_text(wio.dumps(wio.td_to_json(td)))
    log.info("generated %s: n=%d m=%d", name, g.n, g.m)
    return 0


def _family(gf: wio.GraphFile) -> str:
    return gf.metadata.get("family", "")


def cmd_order(args) -> int:
    gf = wio.load_graph(args.graph)
    g = gf.graph
    bound = None
    if args.method in ("thm1", "td-path"):
        try:
            sigma = thm1_ordering(g, args.r) if args.method == "thm1" else path_td_ordering(g)
        except ValueError as exc:
            raise SystemExit(f"error: {args.method} needs a path graph ({exc})")
        bound = thm1_upper(args.r) if args.method == "thm1" else path_td_value(g.n)
    elif args.method == "stw":
        if not args.td or args.k is None:
            raise SystemExit("error: stw needs --td and --k")
        td = wio.td_from_json(json.loads(Path(args.td).read_text()))
        sigma = stw_ordering(g, td, args.k, args.r)
        bound = f_bound(args.r, args.k)
    elif args.method == "degeneracy":
        sigma, bound = degeneracy_ordering(g)
    else:
        sigma = VertexOrdering.random(g.n, args.seed)
    if bound is not None:
        log.info("guaranteed bound: %d", bound)
    with _output(args.out) as fh:
        fh.write(wio.dumps(wio.ordering_to_json(sigma)))
    return 0


def _known_bounds(gf: wio.GraphFile, r, k):
    """Known lower/upper bounds for graphs generated by ``gen``."""
    fam = _family(gf)
    g = gf.graph
    if r == INF or r is None:
        return None, None
    if fam == "path":
        return (thm1_lower(r) if g.n >= 2 * r else None), thm1_upper(r)
    if fam == "ktree":
        kk = gf.metadata["params"]["k"]
        return None, f_bound(r, kk)
    if fam == "grk":
        p = gf.metadata["grk"]
        if p["faithful"] and p["r"] == r:
            return g_value(p["r"], p["k"]), f_bound(r, p["k"])
        return None, f_bound(r, p["k"])
    return None, (f_bound(r, k) if k else None)


def _params(gf: wio.GraphFile) -> str:
    p = gf.metadata.get("params") or {"n": gf.graph.n}
    return ",".join(f"{a}={b}" for a, b in sorted(p.items()) if b is not None)


def _emit(rows, args) -> None:
    with _output(args.out) as fh:
        if args.format == "json":
            fh.write(wio.rows_to_json(rows))
        else:
            wio.write_csv(rows, fh)


def cmd_eval(args) -> int:
    gf = wio.load_graph(args.graph)
    sigma = wio.ordering_from_json(json.loads(Path(args.ordering).read_text()))
    t0 = time.perf_counter()
    if args.measure == "wcol":
        value = wcol_under(gf.graph, sigma, args.r)
        lower, upper = _known_bounds(gf, args.r, args.k)
    else:
        value = scol_under(gf.graph, sigma, args.r)
        lower = upper = None
    witness = None
    if args.measure == "wcol" and _family(gf) == "grk" and gf.metadata["grk"]["faithful"] and gf.metadata["grk"]["r"] == args.r:
        lc = wio.construction_from_metadata(gf.graph, gf.metadata)
        w, _ = witness_vertex(lc, sigma)
        witness = len(wreach_set(gf.graph, sigma, w, args.r))
    ms = round((time.perf_counter() - t0) * 1000, 3) if args.timing else None
    row = wio.BoundReport(_family(gf) or "graph", _params(gf), args.r, args.k, lower, value, None, upper, witness, ms)
    _emit([row], args)
    return 0


def cmd_exact(args) -> int:
    gf = wio.load_graph(args.graph)
    g = gf.graph
    if g.n > args.max_n:
        raise SystemExit(f"error: n={g.n} exceeds the size guard --max-n {args.max_n}")
    t0 = time.perf_counter()
    if args.measure == "td":
        res = exact_treedepth(g)
        r = INF
    else:
        solver = exact_wcol if args.measure == "wcol" else exact_scol
        res = solver(g, args.r, budget=args.budget)
        r = args.r
    if not res.optimal:
        log.warning("budget exhausted; value %d is only an upper bound", res.value)
    ms = round((time.perf_counter() - t0) * 1000, 3) if args.timing else None
    lower, upper = _known_bounds(gf, r, None) if args.measure == "wcol" else (None, None)
    row = wio.BoundReport(
        _family(gf) or "graph", _params(gf), r, None, lower, None,
        res.value if res.optimal else None, upper if res.optimal else res.value, None, ms,
    )
    _emit([row], args)
    return 0


def cmd_verify(args) -> int:
    t = args.timing
    if args.suite == "thm1":
        radii = _int_list(args.r or "1-64")
        result = suites.suite_thm1(radii, args.trials or 200, args.seed, timing=t)
    elif args.suite == "thm2":
        result = suites.suite_thm2(
            _int_list(args.k or "2,3"), _int_list(args.n or "50,200"),
            range(args.seed, args.seed + (args.trials or 20)), _int_list(args.r or "1-8"), timing=t,
        )
    elif args.suite == "grk":
        result = suites.suite_grk(int(args.r or 2), int(args.k or 2), args.trials or 100, args.seed, timing=t)
    elif args.suite == "lemma-td":
        result = suites.suite_lemma_td(int(args.n or 5), 7, args.trials or 100, args.seed, timing=t)
    elif args.suite == "minor":
        result = suites.suite_minor(args.trials or 50, _int_list(args.k or "1-3"), int(args.n or 40), 10, args.seed, timing=t)
    else:
        result = suites.suite_sandwich(int(args.n or 5), _int_list(args.r or "2,3"), 6, args.trials or 0, args.seed, timing=t)
    _emit(result.rows, args)
    for f in result.failures:
        log.error(f)
    log.info("%s: %d rows, %d violations", args.suite, len(result.rows), len(result.failures))
    return 0 if result.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wcol", description="Weak coloring numbers and simple treewidth.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def outputs(sp, rows=True):
        sp.add_argument("--out", help="output file (default: stdout)")
        if rows:
            sp.add_argument("--format", choices=("csv", "json"), default="csv")
            sp.add_argument("--timing", action="store_true", help="fill the ms column")

    gen = sub.add_parser("gen", help="generate a graph file")
    gen.add_argument("family", choices=("path", "grk", "ktree"))
    gen.add_argument("--n", type=int)
    gen.add_argument("--r", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--copies", type=int, help="thinned G_{r,k}: private copies per vertex")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--max-vertices", type=int, default=250_000)
    gen.add_argument("--td-out", help="also write the tree decomposition here")
    outputs(gen, rows=False)
    gen.set_defaults(func=cmd_gen)

    order = sub.add_parser("order", help="construct a vertex ordering")
    order.add_argument("method", choices=("thm1", "stw", "td-path", "degeneracy", "random"))
    order.add_argument("graph")
    order.add_argument("--r", type=int, default=1)
    order.add_argument("--k", type=int)
    order.add_argument("--td", help="decomposition file (stw)")
    order.add_argument("--seed", type=int, default=0)
    outputs(order, rows=False)
    order.set_defaults(func=cmd_order)

    ev = sub.add_parser("eval", help="wcol/scol of a graph under an ordering")
    ev.add_argument("measure", choices=("wcol", "scol"))
    ev.add_argument("graph")
    ev.add_argument("ordering")
    ev.add_argument("--r", type=parse_radius, required=True)
    ev.add_argument("--k", type=int)
    outputs(ev)
    ev.set_defaults(func=cmd_eval)

    ex = sub.add_parser("exact", help="exact minimum over all orderings, or treedepth")
    ex.add_argument("measure", choices=("wcol", "scol", "td"))
    ex.add_argument("graph")
    ex.add_argument("--r", type=parse_radius, default=INF)
    ex.add_argument("--budget", type=int)
    ex.add_argument("--max-n", type=int, default=14)
    outputs(ex)
    ex.set_defaults(func=cmd_exact)

    ver = sub.add_parser("verify", help="run a verification suite; exit 1 on any violation")
    ver.add_argument("suite", choices=suites.SUITES)
    ver.add_argument("--r", help="radius or list/range, e.g. 2 or 1-8")
    ver.add_argument("--k", help="k or list/range")
    ver.add_argument("--n", help="size or list")
    ver.add_argument("--trials", type=int)
    ver.add_argument("--seed", type=int, default=0)
    outputs(ver)
    ver.set_defaults(func=cmd_verify)
    return p


def _check_gen_args(p: argparse.ArgumentParser, args) -> None:
    need = {"path": ("n",), "grk": ("r", "k"), "ktree": ("k", "n")}[args.family]
    missing = [f"--{a}" for a in need if getattr(args, a) is None]
    if missing:
        p.error(f"gen {args.family} needs {' '.join(missing)}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    if args.command == "gen":
        _check_gen_args(parser, args)
    try:
        return args.func(args)
    except ValueError as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
