"""Acceptance suite: one test per criterion, each at its stated tolerance and
time limit. A PASS/FAIL line per criterion is printed in the terminal summary."""

import random
import time

import networkx as nx
import pytest

from wcol.exact import exact_scol, exact_treedepth, exact_wcol
from wcol.graph import INF, Graph, path_graph, random_connected_graph, wcol_under
from wcol.lowerbound import build_grk, g_closed_form_holds, g_value, grk_decomposition
from wcol.paths import ceil_log2, thm1_lower, thm1_upper
from wcol.stw_order import f_bound, stw_plan
from wcol.treedecomp import (
    is_k_simple,
    layer_components,
    random_simple_ktree,
    shadow,
    validate_td,
)
from wcol.verify import suite_grk, suite_minor, suite_thm1, suite_thm2

GRK_CASES = [(1, 2, 2), (2, 2, 4), (3, 2, 7), (1, 3, 3), (2, 3, 7)]
KTREE_CASES = [(k, n, seed) for k in (2, 3) for n in (50, 200) for seed in range(20)]


def connected_up_to(n_max):
    """Connected graphs on at most ``n_max`` vertices, one per isomorphism class."""
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > n_max:
            break
        if nx.is_connected(h):
            out.append(Graph(h.number_of_nodes(), h.edges()))
    return out


class Timer:
    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t


@pytest.mark.criterion(1, "exact wcol_r(P_2r) = 2, 3, 4 for r = 1, 2, 4")
def test_criterion_01_path_tightness_at_powers_of_two():
    with Timer() as t:
        values = {r: exact_wcol(path_graph(2 * r), r) for r in (1, 2, 4)}
    for r, res in values.items():
        assert res.optimal
        assert res.value == ceil_log2(r) + 2 == ceil_log2(r + 1) + 1
    assert [values[r].value for r in (1, 2, 4)] == [2, 3, 4]
    assert t.elapsed < 10


@pytest.mark.criterion(2, "path bounds for r = 1..64, 200 random orderings each")
def test_criterion_02_path_sandwich_at_scale():
    with Timer() as t:
        res = suite_thm1(range(1, 65), trials=200, seed=2, exact_up_to=0)
    assert res.failures == []
    assert len(res.rows) == 64
    for row in res.rows:
        assert row.constructed <= thm1_upper(row.r)
        assert row.witness_size >= thm1_lower(row.r)
    assert t.elapsed < 30


@pytest.mark.criterion(3, "wcol_inf = treedepth on connected graphs (n <= 6 all, 100 random n = 7)")
def test_criterion_03_wcol_inf_is_treedepth():
    graphs = connected_up_to(6)
    assert len(graphs) == 143
    rng = random.Random(3)
    for _ in range(100):
        graphs.append(random_connected_graph(7, rng.randrange(22), rng))
    with Timer() as t:
        bad = [g.edges() for g in graphs if exact_wcol(g, INF).value != exact_treedepth(g).value]
    assert bad == []
    assert t.elapsed < 300


@pytest.mark.criterion(4, "layered ordering within f(r, k) on 80 random simple k-trees, r = 1..8")
def test_criterion_04_upper_bound_on_ktrees():
    with Timer() as t:
        res = suite_thm2((2, 3), (50, 200), range(20), range(1, 9))
    assert len(res.rows) == len(KTREE_CASES) * 8
    assert res.failures == []
    assert all(row.constructed <= f_bound(row.r, row.k) for row in res.rows)
    assert t.elapsed < 120


@pytest.mark.criterion(5, "G_{r,k} witnesses reach g(r, k) under 100 random orderings each")
def test_criterion_05_lower_bound_witnesses():
    with Timer() as t:
        for r, k, expected in GRK_CASES:
            assert g_value(r, k) == expected
            res = suite_grk(r, k, trials=100, seed=5)
            assert len(res.rows) == 100
            assert res.failures == []
            assert min(row.witness_size for row in res.rows) >= expected
    assert t.elapsed < 300


@pytest.mark.criterion(6, "g(r, k) >= r^(k-1) ln r / k! for r <= 100, k <= 6")
def test_criterion_06_closed_form():
    failing = [(r, k) for r in range(1, 101) for k in range(1, 7) if not g_closed_form_holds(r, k, rel_tol=1e-9)]
    assert failing == []


@pytest.mark.criterion(7, "decompositions valid and k-simple (G_{r,k}, k-trees, 100 seeds)")
def test_criterion_07_decomposition_certification():
    failures = []
    for r, k, _ in GRK_CASES:
        lc = build_grk(r, k)
        td = grk_decomposition(lc)
        if not (validate_td(lc.graph, td) and is_k_simple(td, k)):
            failures.append(("grk", r, k))
    cases = KTREE_CASES + [(1 + s % 4, 5 + (s * 37) % 120, 1000 + s) for s in range(100)]
    for k, n, seed in cases:
        g, td, _ = random_simple_ktree(k, n, seed)
        if not (validate_td(g, td) and is_k_simple(td, k)):
            failures.append(("ktree", k, n, seed))
    assert failures == []


@pytest.mark.criterion(8, "minor operations keep decompositions valid and k-simple")
def test_criterion_08_minor_closure():
    with Timer() as t:
        res = suite_minor(trials=50, ks=(1, 2, 3), max_n=40, ops=10, seed=8)
    assert len(res.rows) == 50
    assert res.failures == []
    assert t.elapsed < 60


@pytest.mark.criterion(9, "scol_r <= wcol_r <= scol_r^r on connected graphs n <= 6, r = 2, 3")
def test_criterion_09_strong_weak_sandwich():
    violations = []
    with Timer() as t:
        for g in connected_up_to(6):
            for r in (2, 3):
                s, w = exact_scol(g, r), exact_wcol(g, r)
                assert s.optimal and w.optimal
                if not s.value <= w.value <= s.value ** r:
                    violations.append((g.edges(), r, s.value, w.value))
    assert violations == []
    assert t.elapsed < 600


@pytest.mark.criterion(10, "every shadow in the filled graphs of criterion 4 is a clique")
def test_criterion_10_shadows_are_cliques():
    checked = []

    def check(filled, layering):
        for i in range(1, layering.depth + 1):
            for comp in layer_components(filled, layering, i):
                shadow(filled, layering, i, comp)  # raises unless a clique
                checked.append(1)

    for k, n, seed in KTREE_CASES:
        g, td, _ = random_simple_ktree(k, n, seed)
        stw_plan(g, td, k, observer=check)
    assert len(checked) > 0
