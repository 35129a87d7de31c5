"""Named verification suites: each produces report rows and a list of
violated bounds (empty when everything holds)."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Iterable

from .exact import exact_scol, exact_treedepth, exact_wcol
from .graph import (
    INF,
    Graph,
    VertexOrdering,
    labeled_connected_graphs,
    path_graph,
    random_connected_graph,
    wcol_under,
    wreach_set,
)
from .io import BoundReport
from .lowerbound import build_grk, g_value, grk_decomposition, witness_vertex
from .paths import path_lower_witness, thm1_lower, thm1_ordering, thm1_upper
from .stw_order import f_bound, stw_orderings
from .treedecomp import (
    delete_vertex,
    is_k_simple,
    minor_contract,
    minor_delete_vertex,
    random_simple_ktree,
    validate_td,
    width,
)

SUITES = ("thm1", "thm2", "grk", "lemma-td", "minor", "sandwich")


@dataclass
class SuiteResult:
    rows: list[BoundReport] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, row: BoundReport, extra_ok: bool = True, why: str = "") -> None:
        self.rows.append(row)
        if not row.consistent():
            self.failures.append(f"bound violated: {row.as_dict()}")
        elif not extra_ok:
            self.failures.append(why or f"check failed: {row.as_dict()}")


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * 1_000_003 + trial)


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.t = time.perf_counter()

    def lap(self) -> float | None:
        now = time.perf_counter()
        ms, self.t = (now - self.t) * 1000.0, now
        return round(ms, 3) if self.enabled else None


def suite_thm1(radii: Iterable[int], trials: int = 200, seed: int = 0, exact_up_to: int = 4, timing: bool = False) -> SuiteResult:
    """Paths on ``2r`` vertices: constructed ordering vs. both bounds, plus witnesses."""
    res = SuiteResult()
    clock = _Clock(timing)
    for r in radii:
        n = 2 * r
        p = path_graph(n)
        constructed = wcol_under(p, thm1_ordering(p, r), r)
        worst = None
        for t in range(trials):
            sigma = VertexOrdering.random(n, trial_rng(seed, t))
            _, reach = path_lower_witness(p, sigma, r)
            worst = len(reach) if worst is None else min(worst, len(reach))
        exact = exact_wcol(p, r).value if r <= exact_up_to else None
        res.add(BoundReport("path", f"n={n}", r, 1, thm1_lower(r), constructed, exact, thm1_upper(r), worst, clock.lap()))
    return res


def suite_thm2(ks: Iterable[int], sizes: Iterable[int], seeds: Iterable[int], radii: Iterable[int], timing: bool = False) -> SuiteResult:
    """Random simple k-trees: the layered ordering against ``f(r, k)``."""
    res = SuiteResult()
    radii = list(radii)
    clock = _Clock(timing)
    for k in ks:
        for n in sizes:
            for s in seeds:
                g, td, _ = random_simple_ktree(k, n, s)
                ok = bool(validate_td(g, td)) and is_k_simple(td, k)
                for r, sigma in stw_orderings(g, td, k, radii).items():
                    value = wcol_under(g, sigma, r)
                    res.add(
                        BoundReport("ktree", f"n={n},seed={s}", r, k, None, value, None, f_bound(r, k), None, clock.lap()),
                        ok,
                        f"generator decomposition rejected for k={k} n={n} seed={s}",
                    )
    return res


def suite_grk(r: int, k: int, trials: int = 100, seed: int = 0, timing: bool = False) -> SuiteResult:
    """Witness vertices in ``G_{r,k}`` under random orderings, recounted independently."""
    res = SuiteResult()
    clock = _Clock(timing)
    lc = build_grk(r, k)
    td = grk_decomposition(lc)
    ok = bool(validate_td(lc.graph, td)) and is_k_simple(td, k)
    for t in range(trials):
        sigma = VertexOrdering.random(lc.graph.n, trial_rng(seed, t))
        w, _ = witness_vertex(lc, sigma)
        size = len(wreach_set(lc.graph, sigma, w, r))
        res.add(
            BoundReport("grk", f"n={lc.graph.n},trial={t}", r, k, g_value(r, k), None, None, None, size, clock.lap()),
            ok,
            f"G_{r},{k} decomposition rejected",
        )
    return res


def suite_lemma_td(exhaustive_n: int = 5, random_n: int = 7, trials: int = 100, seed: int = 0, timing: bool = False) -> SuiteResult:
    """``wcol_inf`` against treedepth: all labelled connected graphs up to
    ``exhaustive_n`` vertices plus random connected graphs on ``random_n``."""
    res = SuiteResult()
    clock = _Clock(timing)

    def check(g: Graph, params: str) -> None:
        td = exact_treedepth(g).value
        w = exact_wcol(g, INF).value
        res.add(BoundReport("connected", params, "inf", None, td, None, w, td, None, clock.lap()))

    for n in range(1, exhaustive_n + 1):
        for j, g in enumerate(labeled_connected_graphs(n)):
            check(g, f"n={n},index={j}")
    for t in range(trials):
        rng = trial_rng(seed, t)
        g = random_connected_graph(random_n, rng.randrange(random_n * (random_n - 1) // 2), rng)
        check(g, f"n={random_n},trial={t}")
    return res


def suite_minor(trials: int = 50, ks: Iterable[int] = (1, 2, 3), max_n: int = 40, ops: int = 10, seed: int = 0, timing: bool = False) -> SuiteResult:
    """Random minor operations on simple k-trees keep the decomposition valid and k-simple."""
    res = SuiteResult()
    ks = list(ks)
    clock = _Clock(timing)
    for t in range(trials):
        rng = trial_rng(seed, t)
        k = ks[t % len(ks)]
        n = rng.randint(k + 1, max_n)
        g, td, _ = random_simple_ktree(k, n, rng)
        worst = width(td)
        problem = ""
        for step in range(ops):
            g, td, what = random_minor_step(g, td, rng)
            check = validate_td(g, td)
            if not check:
                problem = f"step {step} ({what}): {check.reason}"
                break
            if not is_k_simple(td, k):
                problem = f"step {step} ({what}): not {k}-simple"
                break
            worst = max(worst, width(td))
        res.add(
            BoundReport("minor", f"n={n},trial={t},ops={ops}", None, k, None, worst, None, k, None, clock.lap()),
            not problem,
            problem,
        )
    return res


def random_minor_step(g: Graph, td, rng: random.Random):
    """Delete a random vertex or edge, or contract a random edge."""
    choice = rng.randrange(3) if g.m else 0
    if choice == 0 and g.n > 1:
        v = rng.randrange(g.n)
        h, labels = delete_vertex(g, v)
        return h, minor_delete_vertex(td, v).relabel({old: j for j, old in enumerate(labels)}), f"delete vertex {v}"
    if g.m == 0:
        return g, td, "no-op"
    u, v = rng.choice(g.edges())
    if choice == 1:
        return Graph(g.n, [e for e in g.edges() if e != (u, v)]), td, f"delete edge {u}{v}"
    h, td2 = minor_contract(g, td, u, v)
    return h, td2, f"contract {u}{v}"


def suite_sandwich(max_n: int = 5, radii: Iterable[int] = (2, 3), random_n: int = 6, trials: int = 0, seed: int = 0, timing: bool = False) -> SuiteResult:
    """Exact ``scol_r <= wcol_r <= scol_r ** r`` on small connected graphs."""
    res = SuiteResult()
    radii = list(radii)
    clock = _Clock(timing)
    graphs = [(g, f"n={n},index={j}") for n in range(1, max_n + 1) for j, g in enumerate(labeled_connected_graphs(n))]
    for t in range(trials):
        rng = trial_rng(seed, t)
        graphs.append((random_connected_graph(random_n, rng.randrange(random_n * (random_n - 1) // 2), rng), f"n={random_n},trial={t}"))
    for g, params in graphs:
        for r in radii:
            s = exact_scol(g, r).value
            w = exact_wcol(g, r).value
            res.add(BoundReport("connected", params, r, None, s, None, w, s ** r, None, clock.lap()))
    return res
