import json
import subprocess
import sys
from pathlib import Path

import pytest

import symring
from symring import io
from symring.cli import main

FIX = Path(symring.__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_chartable(capsys, tmp_path):
    code, out, _ = run(capsys, "chartable", 4, "--figure", tmp_path / "t.png")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[1].split("\t") == ["4", "1", "1", "1", "1", "1"]
    assert (tmp_path / "t.png").stat().st_size > 0
    code, out, _ = run(capsys, "chartable", 3, "--json")
    assert json.loads(out)["values"][1] == ["2", "0", "-1"]


def test_plethysm_and_lr(capsys):
    assert run(capsys, "plethysm", "2", "-n", 2)[1] == "[4] + [2,2]\n"
    assert run(capsys, "lr", "1", "1")[1] == "[2] + [1,1]\n"
    assert run(capsys, "lr", "[2] + [1,1]", "1")[1] == "[3] + 2*[2,1] + [1,1,1]\n"


def test_guard_exit_code(capsys):
    code, _, err = run(capsys, "chartable", 9)
    assert code == 2 and "guard" in err
    assert run(capsys, "chartable", 9, "--guard", 9)[0] == 0


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("r=2\n1 : 1 2\n1 : 2 2\n")
    code, _, err = run(capsys, "dft", bad)
    assert code == 1 and f"{bad}:3:" in err
    code, _, err = run(capsys, "dft", tmp_path / "missing.txt")
    assert code == 1 and "cannot read" in err


def test_dft_roundtrip(capsys, tmp_path):
    elem = tmp_path / "a.txt"
    elem.write_text("r=3\n1 : 1 2 3\n2/3 : 2 3 1\n-1 : 3 2 1\n")
    code, blocks, _ = run(capsys, "dft", elem)
    assert code == 0
    (tmp_path / "b.txt").write_text(blocks)
    code, back, _ = run(capsys, "dft", "--inverse", tmp_path / "b.txt")
    assert io.parse_element(back) == io.parse_element(elem.read_text())


def test_decompose_outputs(capsys, tmp_path):
    elem = tmp_path / "gens.txt"
    elem.write_text("r=3\n1 : 1 2 3\n1 : 2 1 3\n\n1 : 1 2 3\n-1 : 1 3 2\n")
    out_dir = tmp_path / "dec"
    code, out, _ = run(capsys, "decompose", elem, "--out", out_dir, "--figure", tmp_path / "m.svg")
    assert code == 0
    assert out.splitlines()[0] == "k\tpartition\tdimension\tseed"
    # R(1 + (12)) + R(1 - (23)) is the whole ring
    assert "# dimension 6" in out
    files = sorted(p.name for p in out_dir.iterdir())
    assert files[-2:] == ["summary.tsv", "total.txt"]
    hs = [io.parse_element((out_dir / f).read_text()) for f in files if f.startswith("h_")]
    total = io.parse_element((out_dir / "total.txt").read_text())
    assert sum(hs[1:], hs[0]) == total and total * total == total
    assert (tmp_path / "m.svg").exists()
    code, pruned, _ = run(capsys, "decompose", elem, "--use-multiplicities", "--json")
    assert json.loads(pruned)["dimension"] == 6


def test_symclass_and_wspace(capsys, tmp_path):
    code, out, _ = run(capsys, "symclass", FIX / "riemann.sym", "--out", tmp_path / "e.txt")
    assert code == 0 and "dimension=2" in out and "constituents=[2,2]" in out
    e = io.parse_element((tmp_path / "e.txt").read_text())
    assert e * e == e
    code, out, _ = run(capsys, "wspace", FIX / "riemann.sym", "--contraction", "l=2 b0=")
    assert "dimension=1" in out
    code, out, _ = run(capsys, "wspace", FIX / "riemann.sym", "--contraction", "l=1 b0=0,1",
                       "--mode", "dim-limited", "-d", 2, "--elements")
    assert code == 0 and "r=4 l=1 b0=0,1" in out
    code, _, err = run(capsys, "wspace", FIX / "riemann.sym", "--contraction", "l=1 b0=0,1", "--mode", "dim-limited")
    assert code == 1 and "-d" in err


def test_identities_and_reduce(capsys, tmp_path):
    code, out, _ = run(capsys, "identities", FIX / "symmetric2.sym")
    assert out == "r=2\n\n-1 : 1 2\n1 : 2 1\n"
    code, out, _ = run(capsys, "reduce", FIX / "bianchi.expr", "--symmetry", FIX / "riemann.sym")
    assert code == 0 and out == "r=4\n"
    expr = tmp_path / "t.expr"
    expr.write_text("r=2\n1 : 1 2\n1 : 2 1\n")
    assert run(capsys, "reduce", expr, "--symmetry", FIX / "symmetric2.sym")[1] == "r=2\n2 : 1 2\n"
    assert run(capsys, "reduce", expr, "--symmetry", FIX / "antisymmetric2.sym")[1] == "r=2\n"
    code, out, _ = run(capsys, "identities", FIX / "riemann.sym", "--candidates", FIX / "bianchi.expr", "--json")
    assert json.loads(out)["candidates"] == 3


def test_determinism(capsys, tmp_path):
    runs = []
    for k in range(2):
        fig = tmp_path / f"f{k}.png"
        _, out, _ = run(capsys, "chartable", 5, "--figure", fig)
        runs.append((out, fig.read_bytes()))
    assert runs[0] == runs[1]
    outs = [run(capsys, "identities", FIX / "riemann.sym")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symring.cli", "plethysm", "1,1", "-n", "2"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "[2,2] + [1,1,1,1]\n"
