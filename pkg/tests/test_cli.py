import json

import pytest

from autpart.cli import (EXIT_ERROR, EXIT_OK, EXIT_OVERFLOW, EXIT_PARSE, EXIT_UNSUPPORTED,
                         main)
from autpart.graph import g8, to_adjacency, to_dimacs


@pytest.fixture
def g8_file(tmp_path):
    path = tmp_path / "g8.dimacs"
    path.write_text(to_dimacs(g8()))
    return str(path)


def test_aut_text(g8_file, capsys):
    assert main(["aut", g8_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "order: 16\n" in out
    assert "factored: 4*2*2\n" in out
    assert "orbits: {1,2,7,8} {3,4,5,6}\n" in out
    assert "time:" not in out


def test_aut_json_and_time(g8_file, capsys):
    assert main(["aut", g8_file, "--json", "--time"]) == EXIT_OK
    d = json.loads(capsys.readouterr().out)
    assert d["order"] == "16" and d["exact"] is True
    assert d["wall_time"] >= 0
    assert d["metrics"]["cases"]["CS2"] >= 1


def test_trace_goes_to_stderr(g8_file, capsys):
    main(["aut", g8_file, "--trace"])
    captured = capsys.readouterr()
    assert "gen " in captured.err and "gen " not in captured.out


def test_heur_marks_unverified(g8_file, capsys):
    assert main(["heur", g8_file, "--k1", "0.5", "--nm2", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "exact: unverified" in out and "order: 16" in out
    assert main(["heur", g8_file, "--k1", "2"]) == EXIT_ERROR


def test_oracle(g8_file, capsys):
    assert main(["oracle", g8_file]) == EXIT_OK
    assert "order: 16" in capsys.readouterr().out
    assert main(["oracle", g8_file, "--limit", "5"]) == EXIT_ERROR


def test_code_replay(g8_file, capsys):
    assert main(["code", g8_file, "1", "7", "5"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["pi_0 = |1,2,3,4,5,6,7,8| code=12",
                     "pi_1 = |1|7,8|5,6|3,4|2| code=200",
                     "pi_2 = |1|7|8|5,6|3,4|2| code=210",
                     "pi_3 = |1|7|8|5|6|4|3|2| code=234"]


def test_adjacency_input(tmp_path, capsys):
    path = tmp_path / "g8.adj"
    path.write_text(to_adjacency(g8()))
    assert main(["aut", str(path), "--format", "adjacency-list"]) == EXIT_OK
    assert "order: 16" in capsys.readouterr().out


def test_exit_codes(tmp_path, g8_file, capsys):
    bad = tmp_path / "bad.dimacs"
    bad.write_text("p edge 3 1\ne 1 1\n")
    assert main(["aut", str(bad)]) == EXIT_PARSE
    assert main(["aut", str(tmp_path / "missing")]) == EXIT_PARSE
    split = tmp_path / "split.dimacs"
    split.write_text("p edge 4 2\ne 1 2\ne 3 4\n")
    assert main(["aut", str(split)]) == EXIT_UNSUPPORTED
    assert main(["aut", g8_file, "--max-bouquet", "0"]) == EXIT_OVERFLOW
    err = capsys.readouterr().err
    assert "unsupported decomposition" in err and "bouquet overflow" in err


def test_k4_note(tmp_path, capsys):
    path = tmp_path / "k4.dimacs"
    path.write_text("p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n")
    assert main(["aut", str(path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "note: complete graph" in out and "order: 24" in out


def test_bench(tmp_path, g8_file, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "g8.dimacs").write_text(to_dimacs(g8()))
    (corpus / "bad.dimacs").write_text("p edge 2 5\n")
    plot = tmp_path / "times.csv"
    assert main(["bench", str(corpus), "--plot-data", str(plot)]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0].split()[:4] == ["file", "n", "k", "aut_order"]
    row = next(line for line in out if line.startswith("g8"))
    assert row.split()[3] == "16"
    assert any("GraphError" in line for line in out)
    assert plot.read_text().startswith("file,n,aut_time,heur_time\n")
    assert main(["bench", str(corpus), "--json", "--jobs", "2"]) == EXIT_OK
    rows = json.loads(capsys.readouterr().out)
    assert {r["file"] for r in rows} == {"g8.dimacs", "bad.dimacs"}
