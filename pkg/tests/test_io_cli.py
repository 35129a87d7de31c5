import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from wcol import io as wio
from wcol.cli import main
from wcol.graph import INF, Graph, VertexOrdering, cycle_graph, path_graph, wcol_under
from wcol.lowerbound import build_grk, grk_decomposition, witness_vertex
from wcol.treedecomp import is_k_simple, random_simple_ktree, validate_td

from conftest import graph_and_ordering, graphs


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# -- formats ---------------------------------------------------------------

@given(graphs(0, 9))
@settings(max_examples=50, deadline=None)
def test_graph_json_round_trip(g):
    data = json.loads(wio.dumps(wio.graph_to_json(g, "x", {"a": 1})))
    back = wio.graph_from_json(data)
    assert back.graph == g and back.name == "x" and back.metadata == {"a": 1}


@given(graphs(1, 9))
@settings(max_examples=50, deadline=None)
def test_edge_list_round_trip(g):
    assert wio.parse_edge_list(wio.format_edge_list(g)).graph == g


def test_edge_list_labels():
    gf = wio.parse_edge_list("# comment\nb a\na c  # trailing\n\nd\n")
    assert gf.metadata["labels"] == ["b", "a", "c", "d"]
    assert gf.graph.edges() == [(0, 1), (1, 2)] and gf.graph.n == 4
    gf = wio.parse_edge_list("10 2\n2 7\n")
    assert gf.metadata["labels"] == [2, 7, 10]
    assert gf.graph.edges() == [(0, 1), (0, 2)]
    with pytest.raises(ValueError):
        wio.parse_edge_list("1 2 3\n")


@given(graph_and_ordering(0, 9))
@settings(max_examples=30, deadline=None)
def test_ordering_round_trip(pair):
    _, sigma = pair
    assert wio.ordering_from_json(json.loads(wio.dumps(wio.ordering_to_json(sigma)))) == sigma


def test_td_round_trip():
    _, td, _ = random_simple_ktree(3, 25, 2)
    data = json.loads(wio.dumps(wio.td_to_json(td)))
    assert wio.td_from_json(data) == td
    data["nodes"] += 1
    with pytest.raises(ValueError):
        wio.td_from_json(data)


def test_grk_metadata_round_trip():
    lc = build_grk(2, 2)
    meta = json.loads(wio.dumps({"grk": wio.construction_metadata(lc)}))
    back = wio.construction_from_metadata(lc.graph, meta)
    assert back.part == lc.part and back.layer_of == lc.layer_of
    assert back.faithful and back.copies_per_vertex == 4
    sigma = VertexOrdering.random(lc.graph.n, 5)
    assert witness_vertex(back, sigma) == witness_vertex(lc, sigma)
    with pytest.raises(ValueError):
        wio.construction_from_metadata(path_graph(3), meta)


def test_bound_report():
    row = wio.BoundReport("path", "n=4", INF, None, 2, 3, 3, 4)
    assert row.consistent()
    assert row.as_dict()["r"] == "inf"
    assert not wio.BoundReport("x", lower=3, constructed=2).consistent()
    assert not wio.BoundReport("x", lower=3, witness_size=2).consistent()
    assert wio.BoundReport("x").consistent()


def test_csv_layout(tmp_path):
    import io
    buf = io.StringIO()
    wio.write_csv([wio.BoundReport("path", "n=5", 2, None, 3, 3, None, 3)], buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ",".join(wio.CSV_COLUMNS)
    assert lines[1] == "path,n=5,2,,3,3,,3,,"
    rows = wio.read_csv(buf.getvalue())
    assert rows[0]["exact"] == "" and rows[0]["upper"] == "3"


# -- command line ----------------------------------------------------------

def test_gen_examples(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "path", "--n", 8)
    assert code == 0 and wio.graph_from_json(json.loads(out)).graph == path_graph(8)
    code, out, _ = run(capsys, "gen", "grk", "--r", 1, "--k", 2)
    gf = wio.graph_from_json(json.loads(out))
    assert gf.graph.n == 5 and gf.graph == build_grk(1, 2).graph
    assert gf.metadata["grk"]["copies_per_vertex"] == 2
    g_path, td_path = tmp_path / "g.json", tmp_path / "td.json"
    code, _, _ = run(capsys, "gen", "ktree", "--k", 2, "--n", 20, "--seed", 3, "--out", g_path, "--td-out", td_path)
    g = wio.load_graph(g_path).graph
    td = wio.td_from_json(json.loads(td_path.read_text()))
    assert code == 0 and g.n == 20 and validate_td(g, td) and is_k_simple(td, 2)


def test_gen_missing_params(capsys):
    with pytest.raises(SystemExit):
        main(["gen", "grk", "--r", "2"])


def test_order_examples(capsys, caplog, tmp_path):
    caplog.set_level("INFO", logger="wcol")
    p5 = tmp_path / "p5.json"
    run(capsys, "gen", "path", "--n", 5, "--out", p5)
    code, out, _ = run(capsys, "order", "thm1", p5, "--r", 2)
    assert code == 0 and json.loads(out) == [1, 3, 0, 2, 4]
    assert "bound: 3" in caplog.text
    caplog.clear()
    g, td = tmp_path / "k.json", tmp_path / "td.json"
    run(capsys, "gen", "ktree", "--k", 2, "--n", 30, "--seed", 1, "--out", g, "--td-out", td)
    code, out, _ = run(capsys, "order", "stw", g, "--r", 4, "--k", 2, "--td", td)
    assert code == 0 and "bound: 20" in caplog.text and sorted(json.loads(out)) == list(range(30))
    code, out, _ = run(capsys, "order", "random", p5, "--seed", 0)
    assert sorted(json.loads(out)) == list(range(5))
    assert json.loads(out) == list(VertexOrdering.random(5, 0).sequence)


def test_order_method_mismatch(capsys, tmp_path):
    g = tmp_path / "c.txt"
    g.write_text(wio.format_edge_list(cycle_graph(5)))
    with pytest.raises(SystemExit):
        main(["order", "thm1", str(g), "--r", "2"])


def test_eval_example(capsys, tmp_path):
    p5, sig = tmp_path / "p5.json", tmp_path / "s.json"
    run(capsys, "gen", "path", "--n", 5, "--out", p5)
    run(capsys, "order", "thm1", p5, "--r", 2, "--out", sig)
    code, out, _ = run(capsys, "eval", "wcol", p5, sig, "--r", 2)
    row = wio.read_csv(out)[0]
    assert code == 0
    assert (row["constructed"], row["upper"], row["lower"]) == ("3", "3", "3")
    assert row["ms"] == ""
    code, out, _ = run(capsys, "eval", "scol", p5, sig, "--r", "inf", "--format", "json")
    assert json.loads(out)[0]["r"] == "inf"


def test_eval_grk_reports_witness(capsys, tmp_path):
    g, sig = tmp_path / "g.json", tmp_path / "s.json"
    run(capsys, "gen", "grk", "--r", 2, "--k", 2, "--out", g)
    run(capsys, "order", "random", g, "--seed", 4, "--out", sig)
    code, out, _ = run(capsys, "eval", "wcol", g, sig, "--r", 2)
    row = wio.read_csv(out)[0]
    assert code == 0 and int(row["witness_size"]) >= int(row["lower"]) == 4


def test_exact_example(capsys, tmp_path):
    c4 = tmp_path / "c4.txt"
    c4.write_text("0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "exact", "wcol", c4, "--r", 2)
    assert code == 0 and wio.read_csv(out)[0]["exact"] == "3"
    code, out, _ = run(capsys, "exact", "td", c4)
    assert wio.read_csv(out)[0]["exact"] == "3"


def test_exact_size_guard_and_budget(capsys, caplog, tmp_path):
    g = tmp_path / "p.json"
    run(capsys, "gen", "path", "--n", 16, "--out", g)
    with pytest.raises(SystemExit):
        main(["exact", "wcol", str(g), "--r", "2"])
    code, out, _ = run(capsys, "exact", "wcol", g, "--r", 3, "--max-n", 16, "--budget", 10)
    row = wio.read_csv(out)[0]
    assert code == 0 and row["exact"] == "" and row["upper"] != "" and "budget" in caplog.text


def test_malformed_input_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1 2\n")
    code, _, _ = run(capsys, "exact", "td", bad)
    assert code == 2


def test_verify_grk_example(capsys):
    code, out, _ = run(capsys, "verify", "grk", "--r", 2, "--k", 2, "--trials", 100, "--seed", 1)
    rows = wio.read_csv(out)
    assert code == 0 and len(rows) == 100
    assert all(int(r["witness_size"]) >= 4 for r in rows)


@pytest.mark.parametrize("suite, args", [
    ("thm1", ["--r", "1-6", "--trials", 20]),
    ("thm2", ["--k", "2", "--n", "30", "--trials", 2, "--r", "1-3"]),
    ("lemma-td", ["--n", 4, "--trials", 5]),
    ("minor", ["--trials", 6, "--n", 15]),
    ("sandwich", ["--n", 4]),
])
def test_verify_suites_pass(capsys, suite, args):
    code, out, _ = run(capsys, "verify", suite, *args)
    assert code == 0 and len(wio.read_csv(out)) > 0


def test_verify_exit_code_on_violation(capsys, caplog, monkeypatch):
    from wcol import verify

    def broken(*a, **kw):
        res = verify.SuiteResult()
        res.add(wio.BoundReport("path", lower=5, constructed=3))
        return res

    monkeypatch.setattr(verify, "suite_thm1", broken)
    code, _, _ = run(capsys, "verify", "thm1")
    assert code == 1 and "violated" in caplog.text


def test_output_is_byte_identical(tmp_path):
    outs = []
    for j in range(2):
        target = tmp_path / f"run{j}"
        target.mkdir()
        for argv in (
            ["gen", "ktree", "--k", "3", "--n", "40", "--seed", "9", "--out", target / "g.json", "--td-out", target / "td.json"],
            ["order", "stw", target / "g.json", "--r", "3", "--k", "3", "--td", target / "td.json", "--out", target / "s.json"],
            ["eval", "wcol", target / "g.json", target / "s.json", "--r", "3", "--out", target / "e.csv"],
            ["verify", "minor", "--trials", "4", "--n", "12", "--seed", "3", "--out", target / "v.csv"],
        ):
            assert main([str(a) for a in argv]) == 0
        outs.append([(target / f).read_bytes() for f in ("g.json", "td.json", "s.json", "e.csv", "v.csv")])
    assert outs[0] == outs[1]


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "wcol", "gen", "path", "--n", "3"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["edges"] == [[0, 1], [1, 2]]
