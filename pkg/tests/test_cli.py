import dataclasses
import json
from fractions import Fraction

import pytest

from jpart import build_realization, parse_graph, read_graph_file, triple_clique
from jpart.cli import dispatch, fraction_str


@pytest.fixture
def seqfile(tmp_path):
    path = tmp_path / "seq.txt"
    path.write_text("7 7 7 3 3 3 3 3\n")
    return str(path)


@pytest.fixture
def graphfile(tmp_path):
    path = tmp_path / "g.graph"
    g = build_realization((7, 7, 7, 3, 3, 3, 3, 3)).graph
    from jpart import write_graph_file

    write_graph_file(g, path)
    return str(path)


def test_fraction_str():
    assert fraction_str(Fraction(1239, 8)) == "154.875"
    assert fraction_str(Fraction(5)) == "5"
    assert fraction_str(Fraction(1, 3)) == "1/3"
    assert fraction_str(Fraction(-3, 4)) == "-0.75"
    assert fraction_str(Fraction(7, 50)) == "0.14"


def test_degseq_check_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.txt"
    good.write_text("2 2 2")
    assert dispatch(["degseq", "check", str(good)]) == 0
    assert "graphic" in capsys.readouterr().out

    bad = tmp_path / "bad.txt"
    bad.write_text("3 3 1 1")
    assert dispatch(["degseq", "check", str(bad)]) == 1

    ugly = tmp_path / "ugly.txt"
    ugly.write_text("1 two")
    assert dispatch(["degseq", "check", str(ugly)]) == 2


def test_degseq_layoff_json(tmp_path, capsys):
    f = tmp_path / "s.txt"
    f.write_text("3 2 2 2 1")
    assert dispatch(["--format", "json", "degseq", "layoff", str(f), "-i", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"reduced": [1, 1, 1, 1], "affected": [2, 3, 4], "removed_index": 1}


def test_unknown_command_is_input_error(capsys):
    assert dispatch(["frobnicate"]) == 2
    assert dispatch(["degseq"]) == 2
    assert dispatch(["--help"]) == 0


def test_hs_realize_and_verify_round_trip(seqfile, tmp_path, capsys):
    out = tmp_path / "out.graph"
    assert dispatch(["hs", "realize", seqfile, "-o", str(out)]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["ok"] is True
    assert all(s >= 0 for s in cert["slacks"])

    g = read_graph_file(out)
    assert sorted(g.degrees(), reverse=True) == [7, 7, 7, 3, 3, 3, 3, 3]

    assert dispatch(["hs", "verify", str(out)]) == 0
    verdict = json.loads(capsys.readouterr().out)
    assert verdict["ok"] is True


def test_hs_realize_stdout_round_trip(seqfile, capsys):
    assert dispatch(["hs", "realize", seqfile]) == 0
    out = capsys.readouterr().out
    graph_text, cert_line = out.rsplit("\n", 2)[0], out.strip().splitlines()[-1]
    g = parse_graph(graph_text)
    assert g.n == 8
    assert json.loads(cert_line)["ok"] is True


def test_hs_verify_negative_verdict(tmp_path):
    # triangle on the odd-indexed vertices: all its edges land inside V1,
    # so the parity bisection starves every triangle vertex
    path = tmp_path / "odd_triangle.graph"
    path.write_text("5 3\n0 2\n2 4\n0 4\n")
    assert dispatch(["hs", "verify", str(path)]) == 1


def test_hs_realize_rejects_nongraphic(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3 3 1 1")
    assert dispatch(["hs", "realize", str(f)]) == 2


def test_corrupted_certificate_is_exit_3(seqfile, monkeypatch):
    import jpart.hs_realization as hs

    real = hs.build_realization

    def corrupted(seq):
        cert = real(seq)
        return dataclasses.replace(cert, slacks=(-1,) * cert.graph.n)

    monkeypatch.setattr(hs, "build_realization", corrupted)
    assert dispatch(["hs", "realize", seqfile]) == 3


def test_mp_good_exit_codes(capsys):
    assert dispatch(["mp", "good", "3", "5", "11"]) == 1
    out = capsys.readouterr().out
    assert "none" in out and "oracle" in out

    assert dispatch(["mp", "good", "1", "2", "2"]) == 0
    assert dispatch(["mp", "good", "2", "2"]) == 0


def test_mp_good_json(capsys):
    assert dispatch(["--format", "json", "mp", "good", "1", "1", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["witness"] == {"A": [1], "Aprime": [1], "n": 0}
    assert data["oracle"] != "skipped"


def test_mp_bisect_json(capsys):
    assert dispatch(["--format", "json", "mp", "bisect", "3", "5", "11"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["kind"] == "floor-good"
    assert len(data["V1"]) + len(data["V2"]) == 19
    assert data["e1"] + data["e2"] + data["cut"] == 103


def test_mp_minus_edge(capsys):
    assert dispatch(["mp", "minus-edge", "7", "9", "11", "-p", "1", "2"]) == 1
    assert dispatch(["mp", "minus-edge", "1", "1", "1", "-p", "1", "2"]) == 0


def test_norm_min_and_kpart(graphfile, capsys):
    assert dispatch(["--format", "json", "norm", "min", graphfile, "--lambda", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == 9
    assert data["e1"] ** 2 + data["e2"] ** 2 == 9

    assert dispatch(
        ["--format", "json", "norm", "kpart", graphfile, "--k", "3", "--lambda", "2"]
    ) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == 1
    assert len(data["parts"]) == 3

    assert dispatch(
        ["--format", "json", "norm", "min", graphfile, "--k", "3", "--lambda", "2"]
    ) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 1


def test_norm_bound_json(capsys):
    assert dispatch(["--format", "json", "norm", "bound", "-m", "21", "--lambda", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == 45.0
    assert dispatch(
        ["--format", "json", "norm", "bound", "-m", "10", "--lambda", "2", "--k", "2"]
    ) == 0
    assert json.loads(capsys.readouterr().out)["f_lambda_k"] == 10


def test_norm_judicious(graphfile, capsys):
    assert dispatch(["--format", "json", "norm", "judicious", graphfile]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["certified"] is True


def test_norm_bad_lambda(graphfile):
    assert dispatch(["norm", "min", graphfile, "--lambda", "x"]) == 2
    assert dispatch(["norm", "min", graphfile, "--lambda", "0.5"]) == 2


def test_cx_pairs_and_verify(capsys):
    assert dispatch(["cx", "pairs", "-n", "2"]) == 0
    out = capsys.readouterr().out
    assert "(36, 21)" in out and "(133, 77)" in out

    assert dispatch(["cx", "verify", "-i", "0"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "enumerated: 155 >= 154.875"

    assert dispatch(["--format", "json", "cx", "verify", "-i", "1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["method"] == "algebraic" and data["ok"] is True


def test_cx_graph_round_trip(tmp_path, capsys):
    out = tmp_path / "t.graph"
    assert dispatch(["cx", "graph", "-t", "3", "-o", str(out)]) == 0
    assert read_graph_file(out) == triple_clique(3)
    assert dispatch(["cx", "graph", "-t", "4", "-o", str(out)]) == 2  # even t


def test_missing_file_is_input_error(tmp_path):
    assert dispatch(["degseq", "check", str(tmp_path / "nope.txt")]) == 2
