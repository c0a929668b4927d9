import json
from pathlib import Path

import pytest

from strongorient import files
from strongorient.cli import main
from strongorient.corpus import grid, pentagon_book
from strongorient.errors import PreconditionError
from strongorient.graph import MultiGraph
from strongorient.mixed import BACKWARD, FORWARD, MixedOrientation


def test_graph_round_trip():
    g = pentagon_book(2)
    text = files.format_graph(g)
    g2 = files.parse_graph(text)
    assert g2.n == g.n and g2.ends == g.ends
    assert files.format_graph(g2) == text


def test_graph_parse_comments_and_errors():
    g = files.parse_graph("# a square\n4 4\n0 1\n1 2\n2 3\n3 0  # closes\n")
    assert g.m == 4
    with pytest.raises(PreconditionError):
        files.parse_graph("4 3\n0 1\n1 2\n")  # wrong edge count
    with pytest.raises(PreconditionError):
        files.parse_graph("")
    with pytest.raises(PreconditionError):
        files.parse_graph("2 1\n0 0\n")  # loop


def test_orientation_round_trip():
    g = MultiGraph(3, [(0, 1), (1, 2), (2, 0)])
    o = MixedOrientation(g)
    o.set_direction(0, FORWARD, "t")
    o.set_direction(1, BACKWARD, "t")
    o.set_direction(2, FORWARD, "t")
    text = files.format_orientation(o)
    o2 = files.parse_orientation(text, g)
    assert [o2.direction(e) for e in range(3)] == [FORWARD, BACKWARD, FORWARD]
    with pytest.raises(PreconditionError):
        files.parse_orientation("0 1 >\n1 2 <\n", g)  # missing line


def _write_graph(tmp_path, name, g):
    p = tmp_path / name
    p.write_text(files.format_graph(g))
    return p


def test_cli_orient_success(tmp_path, capsys):
    p = _write_graph(tmp_path, "grid.txt", grid(2, 4))
    out = tmp_path / "grid.or.txt"
    rep = tmp_path / "grid.json"
    trace = tmp_path / "grid.trace"
    code = main(["orient", str(p), "--out", str(out), "--json", str(rep),
                 "--trace", str(trace)])
    assert code == 0
    payload = json.loads(rep.read_text())
    assert payload["bound_ok"] is True
    assert payload["directed_diameter"] <= 17
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 10
    g = files.parse_graph(p.read_text())
    o = files.parse_orientation(out.read_text(), g)
    assert o.is_strong()
    assert len(trace.read_text().strip().splitlines()) == g.m


def test_cli_orient_precondition(tmp_path):
    c9 = MultiGraph(9, [(i, (i + 1) % 9) for i in range(9)])
    p = _write_graph(tmp_path, "c9.txt", c9)
    assert main(["orient", str(p)]) == 2


def test_cli_orient_bridged(tmp_path):
    p = _write_graph(tmp_path, "bridged.txt", MultiGraph(3, [(0, 1), (1, 2)]))
    assert main(["orient", str(p)]) == 2


def test_cli_orient_parse_error(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("not a graph\n")
    assert main(["orient", str(p)]) == 1


def test_cli_verify(tmp_path, capsys):
    g = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    gp = _write_graph(tmp_path, "c4.txt", g)
    op = tmp_path / "c4.or.txt"
    op.write_text("0 1 >\n1 2 >\n2 3 >\n3 0 >\n")
    assert main(["verify", str(gp), str(op)]) == 0
    out = json.loads(capsys.readouterr().out.strip())
    assert out["strong"] is True and out["directed_diameter"] == 3

    op.write_text("0 1 >\n1 2 >\n2 3 >\n3 0 <\n")  # sink at 3
    assert main(["verify", str(gp), str(op)]) == 4

    op.write_text("0 1 >\n1 2 >\n2 3 >\n")  # short file
    assert main(["verify", str(gp), str(op)]) == 1


def test_cli_oracle(tmp_path, capsys):
    g = MultiGraph(5, [(i, (i + 1) % 5) for i in range(5)])
    p = _write_graph(tmp_path, "c5.txt", g)
    assert main(["oracle", str(p)]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert main(["oracle", str(p), "--max-edges", "3"]) == 2


def test_cli_gen_and_report(tmp_path, capsys):
    out_dir = tmp_path / "mini"
    assert main(["gen", "--seed", "7", "--count", "6", "--gstar", "5",
                 "--out-dir", str(out_dir)]) == 0
    written = sorted(out_dir.glob("*.txt"))
    assert len(written) == 6
    for p in written:
        g = files.parse_graph(p.read_text())
        from strongorient.corpus import filter_in_scope
        assert filter_in_scope([g])[0][1] == 5
    rep = tmp_path / "summary.json"
    assert main(["report", str(out_dir), "--json", str(rep)]) == 0
    summary = json.loads(rep.read_text())
    assert summary["per_girth"]["5"]["count"] == 6
    assert summary["per_girth"]["5"]["passed"] == 6
    assert summary["failures"] == []


def test_cli_orient_deterministic(tmp_path):
    p = _write_graph(tmp_path, "book.txt", pentagon_book(3))
    outs = []
    for run in (1, 2):
        out = tmp_path / f"o{run}.txt"
        rep = tmp_path / f"r{run}.json"
        assert main(["orient", str(p), "--out", str(out), "--json", str(rep)]) == 0
        outs.append((out.read_bytes(), rep.read_bytes()))
    assert outs[0] == outs[1]
