"""Command line behavior: formats, exit codes, pipelines, determinism."""

import json

import pytest

from adjmatroid.cli import main
from adjmatroid.graph import MultiGraph, as_multigraph, graph_isomorphism
from adjmatroid.graphtext import graph_from_json, parse_graph

K3_TEXT = "vertices a b c\nedge a b\nedge b c\nedge a c\n"
K3L_TEXT = K3_TEXT + "loop a\n"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def edge_multiset(g):
    mg = as_multigraph(g)
    return mg.labels, sorted(
        tuple(sorted((mg.labels[u], mg.labels[v]))) for u, v in mg.edges
    )


def test_info_text(tmp_path, capsys):
    code, out, _ = run(capsys, "info", "--input", write(tmp_path, "g", K3_TEXT))
    assert code == 0
    assert "matroid rank: 2" in out
    assert "matroid nullity: 1" in out


def test_circuits(tmp_path, capsys):
    code, out, _ = run(capsys, "circuits", "--input", write(tmp_path, "g", K3_TEXT))
    assert code == 0 and out.strip() == "{a b c}"
    code, out, _ = run(
        capsys, "circuits", "--format", "json", "--input", write(tmp_path, "h", K3L_TEXT)
    )
    assert code == 0 and json.loads(out) == []


def test_tripartition_lines(tmp_path, capsys):
    code, out, _ = run(capsys, "tripartition", "--input", write(tmp_path, "g", K3_TEXT))
    assert code == 0
    assert out.splitlines() == ["a: case3", "b: case3", "c: case3"]


def test_minor_contract_shows_witness(tmp_path, capsys):
    code, out, _ = run(
        capsys, "minor", "--contract", "a", "--input", write(tmp_path, "g", K3_TEXT)
    )
    assert code == 0
    assert "{b c}" in out
    assert "lc sequence: b a" in out
    assert "vertices a b c" in out


def test_minor_needs_exactly_one_flag(tmp_path, capsys):
    path = write(tmp_path, "g", K3_TEXT)
    code, _, err = run(capsys, "minor", "--input", path)
    assert code == 1 and "exactly one" in err
    code, _, err = run(capsys, "minor", "--delete", "a", "--contract", "b", "--input", path)
    assert code == 1


def test_polynomial_commands(tmp_path, capsys):
    two = write(tmp_path, "two", "vertices a b\n")
    code, out, _ = run(capsys, "interlace", "--input", two)
    assert code == 0 and out.strip() == "y^2"
    k3 = write(tmp_path, "k3", K3_TEXT)
    code, out, _ = run(capsys, "tutte", "--input", k3)
    assert code == 0 and out.strip() == "x^2 + x + y"
    code, out, _ = run(capsys, "tutte", "--format", "json", "--input", k3)
    assert json.loads(out) == [[2, 0, 1], [1, 0, 1], [0, 1, 1]]
    code, out, _ = run(capsys, "lambda", "--input", k3)
    assert code == 0 and out.strip() == "y + -1"


def test_trio_command(tmp_path, capsys):
    code, out, _ = run(
        capsys, "trio", "--vertex", "a", "--input", write(tmp_path, "g", K3_TEXT)
    )
    assert code == 0
    assert "equal: loop loop_isolate" in out
    assert "odd: plain" in out


def test_delta_command(tmp_path, capsys):
    code, out, _ = run(capsys, "delta", "--input", write(tmp_path, "g", K3_TEXT))
    assert code == 0
    assert out.splitlines() == ["{}", "{a b}", "{a c}", "{b c}"]


def test_parse_error_exit_code(tmp_path, capsys):
    bad = write(tmp_path, "bad", "vertices a\nedge a d\n")
    code, _, err = run(capsys, "circuits", "--input", bad)
    assert code == 1
    assert "line 2" in err


def test_multigraph_warning(tmp_path, capsys):
    mg = write(tmp_path, "mg", "vertices a b\nedge a b\nedge a b\n")
    code, out, err = run(capsys, "circuits", "--input", mg)
    assert code == 0
    assert "warning" in err


def test_symmetrize(tmp_path, capsys):
    mat = write(tmp_path, "m", "11\n")
    code, out, _ = run(capsys, "symmetrize", "--input", mat)
    assert code == 0
    assert out.splitlines() == ["vertices v0 v1", "loop v0", "loop v1", "edge v0 v1"]


def test_stdin_input(tmp_path, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(K3_TEXT))
    code, out, _ = run(capsys, "circuits", "--input", "-")
    assert code == 0 and out.strip() == "{a b c}"


def test_realize_touchgraph_pipeline(tmp_path, capsys):
    k3l = write(tmp_path, "g", K3L_TEXT)
    code, out, _ = run(capsys, "realize", "--input", k3l)
    assert code == 0
    f_text = "\n".join(line for line in out.splitlines() if not line.startswith("#"))
    f_graph = parse_graph(f_text)
    fpath = write(tmp_path, "f", f_text + "\n")
    code, tch_out, _ = run(capsys, "touchgraph", "--input", fpath)
    assert code == 0
    tch = parse_graph(tch_out)
    original = parse_graph(K3L_TEXT)
    assert graph_isomorphism(as_multigraph(tch).simplify(), original) is not None


def test_emitted_graphs_reparse_to_equal_objects(tmp_path, capsys):
    k3l = write(tmp_path, "g", K3L_TEXT)
    for command in ("realize", "touchgraph"):
        source = k3l
        if command == "touchgraph":
            code, out, _ = run(capsys, "realize", "--input", k3l)
            text = "\n".join(l for l in out.splitlines() if not l.startswith("#"))
            source = write(tmp_path, "f", text + "\n")
        code, text_out, _ = run(capsys, command, "--input", source)
        assert code == 0
        body = "\n".join(l for l in text_out.splitlines() if not l.startswith("#"))
        code, json_out, _ = run(capsys, command, "--format", "json", "--input", source)
        assert code == 0
        data = json.loads(json_out)
        reparsed_text = parse_graph(body)
        reparsed_json = graph_from_json(
            {k: data[k] for k in ("vertices", "loops", "edges")}
        )
        assert edge_multiset(reparsed_text) == edge_multiset(reparsed_json)


def test_output_deterministic(tmp_path, capsys):
    path = write(tmp_path, "g", K3L_TEXT)
    outs = set()
    for _ in range(3):
        code, out, _ = run(capsys, "realize", "--input", path)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_verify_small_run(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "poly", "--max-n", "2", "--trials", "5"
    )
    assert code == 0
    assert "ok " in out
    assert "interlace-evaluators-agree" in out
    code, out, _ = run(
        capsys, "verify", "--suite", "poly", "--max-n", "2", "--trials", "5",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert all(r["failures"] == [] for r in data)


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nope"])
