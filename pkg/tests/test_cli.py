import json

from beibounds.cli import build_spec, main, parse_graph_text
from beibounds.generators import net, path, sierpinski
from beibounds.graphio import encode_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_net_edges(capsys):
    code, out, _ = run(capsys, "gen", "net", "--format", "edges")
    assert code == 0
    assert out.splitlines()[0] == "6"
    assert "0 1" in out


def test_gen_path_graph6_round_trips(capsys):
    code, out, _ = run(capsys, "gen", "path", "3")
    assert code == 0
    assert out.strip() == encode_graph6(path(3))


def test_gen_sierpinski_2_is_15_vertices(capsys):
    code, out, _ = run(capsys, "gen", "sierpinski", "2")
    assert code == 0
    assert parse_graph_text(out)[0].n == 15


def test_gen_union_spec():
    g = build_spec(["union", "complete:3,complete:2"])
    assert g.n == 5 and g.edge_count() == 4


def test_gen_unknown_spec_exits_2(capsys):
    code, _, err = run(capsys, "gen", "frobnicate")
    assert code == 2 and "error" in err


def test_invariants_json_net(capsys, tmp_path):
    f = tmp_path / "net.g6"
    f.write_text(encode_graph6(net()) + "\n")
    code, out, _ = run(capsys, "invariants", str(f), "--with-reg", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["schema"] == "beibounds/report-v1"
    rec = report["results"][0]
    assert (rec["L"], rec["eta"], rec["c"], rec["reg"]) == (3, 4, 4, 4)


def test_invariants_reads_edge_list_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("3\n0 1\n1 2\n"))
    code, out, _ = run(capsys, "invariants", "-", "--format", "json")
    assert code == 0
    rec = json.loads(out)["results"][0]
    assert rec["n"] == 3 and rec["eta"] == 2


def test_reg_subcommand(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(sierpinski(1)) + "\n")
    code, out, _ = run(capsys, "reg", str(f), "--format", "json")
    assert code == 0
    rec = json.loads(out)["results"][0]
    assert rec["reg"] == 3 and rec["fields"] == [2, 3] and rec["agreement"]


def test_verify_chain_exhaustive_3_passes(capsys):
    code, out, _ = run(capsys, "verify", "chain", "--exhaustive", "3", "--with-reg",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["violations"] == []
    assert report["results"]["graphs_checked"] == 11


def test_verify_compatible_exhaustive_4(capsys):
    code, out, _ = run(capsys, "verify", "compatible", "--exhaustive", "4",
                       "--map", "eta", "--format", "json")
    assert code == 0
    assert json.loads(out)["violations"] == []


def test_verify_iv_lemma_random_corpus(capsys):
    code, out, _ = run(capsys, "verify", "iv-lemma", "--random", "30", "--max-n", "7",
                       "--seed", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["violations"] == []


def test_verify_recursion_small(capsys):
    code, out, _ = run(capsys, "verify", "recursion", "--exhaustive", "3",
                       "--format", "json")
    assert code == 0


def test_verify_jobs_parallel_matches_serial(capsys):
    code1, out1, _ = run(capsys, "verify", "chain", "--exhaustive", "3", "--format", "json")
    code2, out2, _ = run(capsys, "verify", "chain", "--exhaustive", "3", "--jobs", "2",
                         "--format", "json")
    assert code1 == code2 == 0
    r1, r2 = json.loads(out1), json.loads(out2)
    assert r1["violations"] == r2["violations"]
    assert r1["results"] == r2["results"]


def test_verify_reports_violation_with_exit_1(capsys, monkeypatch):
    import beibounds.cli as cli
    monkeypatch.setitem(cli.NAMED_MAPS, "eta", lambda g: 0)
    code, out, _ = run(capsys, "verify", "compatible", "--exhaustive", "2",
                       "--format", "json")
    assert code == 1
    assert json.loads(out)["violations"]


def test_bad_input_exits_2(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3\n0 9\n")
    code, _, err = run(capsys, "invariants", str(f))
    assert code == 2 and "error" in err


def test_empty_corpus_exits_2(capsys):
    code, _, err = run(capsys, "verify", "chain")
    assert code == 2


def test_search_gap_eta_L(capsys, tmp_path):
    f = tmp_path / "graphs.g6"
    f.write_text(encode_graph6(net()) + "\n" + encode_graph6(sierpinski(1)) + "\n")
    code, out, _ = run(capsys, "search", "--gap", "eta-L", str(f), "--top", "1",
                       "--format", "json")
    assert code == 0
    top = json.loads(out)["results"][0]
    assert top["gap"] == 1 and top["graph6"] == encode_graph6(net())


def test_search_sierpinski_c_minus_eta(capsys):
    code, out, _ = run(capsys, "search", "--gap", "c-eta", "--sierpinski", "2",
                       "--top", "2", "--format", "json")
    assert code == 0
    gaps = [r["gap"] for r in json.loads(out)["results"]]
    assert gaps == [6, 1]
