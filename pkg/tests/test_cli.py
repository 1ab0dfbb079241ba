import json
from fractions import Fraction

import pytest

from geomlim import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 64
    assert "error" in json.loads(err)
    assert cli.run([]) == 64


def test_monomial_parser():
    P = cli.parse_monomial_path("t^2,t,1")
    assert P.entries == [(1.0, Fraction(2)), (1.0, Fraction(1)),
                         (1.0, Fraction(0))]
    P = cli.parse_monomial_path("2*t^-1,t^1/2,3")
    assert P.entries == [(2.0, Fraction(-1)), (1.0, Fraction(1, 2)),
                         (3.0, Fraction(0))]
    with pytest.raises(cli.InvalidInput):
        cli.parse_monomial_path("t^x,1")
    with pytest.raises(cli.InvalidInput):
        cli.parse_monomial_path("5")


def test_grid_parser():
    assert cli.parse_grid("0:1:3") == [0.0, 0.5, 1.0]
    g = cli.parse_grid("1:4:4", log=True)
    assert g == [10.0, 100.0, 1000.0, 10000.0]
    with pytest.raises(cli.InvalidInput):
        cli.parse_grid("1:2")


def test_limit_command(capsys):
    code, out, _ = run(capsys, "limit", "--form", "1,1,-1",
                       "--conj", "t^2,t,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["class_3d"] == "Heis"
    basis = doc["lie_basis"]
    # strictly upper triangular: no entry on or below the diagonal
    for M in basis:
        for i in range(3):
            for j in range(i + 1):
                assert abs(M[i][j]) <= 1e-12


def test_limit_command_invalid(capsys):
    code, _, err = run(capsys, "limit", "--form", "1,0,1")
    assert code == 2
    assert "error" in json.loads(err)


def test_limit_determinism(capsys):
    args = ("limit", "--form", "1,1,1", "--conj", "1,1,t^1/2", "--reverse")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_poset_dot(capsys):
    code, out, _ = run(capsys, "poset", "1", "3", "--format", "dot")
    assert code == 0
    assert out.count("label=") == 8
    code, out, _ = run(capsys, "poset", "1", "3")
    doc = json.loads(out)
    assert len(doc["nodes"]) == 8


def test_cells_command(capsys):
    code, out, _ = run(capsys, "cells", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"] == [6, 12, 4]
    assert len(doc["cells"]) == 22
    code, out, _ = run(capsys, "cells", "3", "--poset")
    assert code == 0
    assert out.startswith("digraph")


def test_heis_commands(capsys, tmp_path):
    f = tmp_path / "rep.json"
    f.write_text(json.dumps({"x": [0, 0], "y": [1, 0], "z": [0, 1]}))
    code, out, _ = run(capsys, "heis", "classify", "--input", str(f))
    assert code == 0
    doc = json.loads(out)
    assert doc["class"] == "Holonomy" and doc["subtype"] == "Translation"
    code, out, _ = run(capsys, "heis", "dev", "--input", str(f),
                       "--grid", "0:1:3")
    assert code == 0
    assert out.splitlines()[0] == "u,v,fx,fy"
    assert len(out.splitlines()) == 10
    code, out, _ = run(capsys, "heis", "dev", "--input", str(f),
                       "--grid", "0:1:3", "--format", "svg")
    assert code == 0
    assert out.startswith("<svg")
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"x": [1, 0], "y": [0, 1], "z": [0, 0]}))
    code, _, err = run(capsys, "heis", "classify", "--input", str(bad))
    assert code == 2


def test_regen_command(capsys, tmp_path):
    f = tmp_path / "regen.json"
    f.write_text(json.dumps({
        "kind": "hyperbolic",
        "D_path": "t^2,t,1",
        "vertices": [[0.1, 0.0], [0.0, 0.1], [-0.1, 0.0], [0.0, -0.1]],
        "t_grid": [10.0, 100.0, 1000.0],
    }))
    code, out, _ = run(capsys, "regen", "--input", str(f))
    assert code == 0
    assert out.splitlines()[0].startswith("t,A00")
    assert len(out.splitlines()) == 4
    code, out, _ = run(capsys, "regen", "--input", str(f),
                       "--format", "json")
    doc = json.loads(out)
    assert doc["limit_in_heis"] is True


def test_algebra_command(capsys):
    code, out, _ = run(capsys, "algebra", "mul",
                       "--a", '{"re": 1, "im": 2, "delta": -1}',
                       "--b", '{"re": 3, "im": -1, "delta": -1}')
    assert code == 0
    assert json.loads(out) == {"re": 5.0, "im": 5.0, "delta": -1.0}
    code, out, _ = run(capsys, "algebra", "idempotents", "--delta", "1")
    assert code == 0
    ep, em = json.loads(out)
    assert ep == {"re": 0.5, "im": 0.5, "delta": 1.0}
    code, _, err = run(capsys, "algebra", "inv",
                       "--a", '{"re": 0, "im": 0, "delta": -1}')
    assert code == 2


def test_out_flag(capsys, tmp_path):
    target = tmp_path / "cells.json"
    code, out, _ = run(capsys, "cells", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["counts"] == [6, 12, 4]
