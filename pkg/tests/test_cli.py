import json
import subprocess
import sys
from pathlib import Path

import pytest

from fano10 import fano
from fano10.cli import main, run
from fano10.discgroup import form_tables_from_json
from fano10.lattice import Lattice

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "lattice_info_lambda.txt": ["lattice-info", "Lambda"],
    "lattice_info_lambda_g.json": ["lattice-info", "[[2,2],[2,4]]", "--format", "json"],
    "classify_10.txt": ["classify", "10"],
    "classify_12.json": ["classify", "12", "--format", "json"],
    "assoc_10.txt": ["assoc", "10"],
    "sweep_30.txt": ["sweep", "30"],
    "examples.txt": ["examples"],
    "examples.json": ["examples", "--format", "json"],
    "th81_1.txt": ["th81", "1"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(name):
    code, out = run(GOLDEN_CASES[name])
    assert code == 0
    assert out == (GOLDEN / name).read_text(encoding="utf-8")


@pytest.mark.parametrize("args", list(GOLDEN_CASES.values()))
def test_deterministic(args):
    assert run(args) == run(args)


def test_lattice_info_examples():
    code, out = run(["lattice-info", "[[2,2],[2,4]]", "--format", "json"])
    data = json.loads(out)
    assert data["signature"] == [2, 0] and data["det"] == 4
    assert data["discriminant_group"]["invariant_factors"] == [2, 2]
    data = json.loads(run(["lattice-info", "[[0,1],[1,0]]", "--format", "json"])[1])
    assert data["even"] and data["abs_det"] == 1 and data["signature"] == [1, 1]
    data = json.loads(run(["lattice-info", "Lambda", "--format", "json"])[1])
    assert data["even"] and data["signature"] == [20, 2]
    assert data["discriminant_group"]["b"] == [["1/2", "0"], ["0", "1/2"]]


def test_assoc_examples():
    d10 = json.loads(run(["assoc", "10", "--format", "json"])[1])
    assert d10["k3"] is True and d10["cubic"] is False
    d2 = json.loads(run(["assoc", "2", "--format", "json"])[1])
    assert d2["k3"] is True and d2["cubic"] is True


def test_sweep_rows():
    data = json.loads(run(["sweep", "30", "--format", "json"])[1])
    assert [r["d"] for r in data["rows"]] == [2, 4, 8, 10, 12, 16, 18, 20, 24, 26, 28]


def test_examples_and_th81():
    data = json.loads(run(["examples", "--format", "json"])[1])
    assert len(data["rows"]) == 6
    th1 = json.loads(run(["th81", "1", "--format", "json"])[1])
    assert any(r["d"] == 18 and r["divisor_label"] == "Dprime" for r in th1["rows"])
    th0 = json.loads(run(["th81", "0", "--format", "json"])[1])
    assert th0["rows"][0]["divisor"] == "D'_10"


def test_json_round_trips():
    data = json.loads(run(["lattice-info", "I20_2", "--format", "json"])[1])
    l = Lattice.from_json(data["lattice"])
    assert l.signature == tuple(data["signature"])
    data = json.loads(run(["lattice-info", "[[2,1],[1,4]]", "--format", "json"])[1])
    factors, b, q = form_tables_from_json(data["discriminant_group"])
    from fano10.discgroup import discriminant_group
    D = discriminant_group(Lattice(((2, 1), (1, 4))))
    assert (factors, b, q) == (D.invariant_factors, D.bform, D.qform)
    for r in json.loads(run(["classify", "26", "--format", "json"])[1])["orbits"]:
        gram = tuple(tuple(x) for x in r["gram"])
        assert fano.label_from_gram(gram).value == r["divisor_label"]
    for r in json.loads(run(["th81", "3", "--format", "json"])[1])["rows"]:
        assert Lattice(r["gram"]).det == r["d"]


def test_lattice_file_input(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"label": "U2", "gram": [[0, 2], [2, 0]]}))
    data = json.loads(run(["lattice-info", str(p), "--format", "json"])[1])
    assert data["lattice"]["label"] == "U2" and data["discriminant_group"]["invariant_factors"] == [2, 2]
    p2 = tmp_path / "m.json"
    p2.write_text("[[2]]")
    assert run(["lattice-info", str(p2)])[0] == 0


def test_out_file(tmp_path):
    out = tmp_path / "o.txt"
    code, text = run(["examples", "--out", str(out)])
    assert code == 0 and text == ""
    assert out.read_text() == run(["examples"])[1]


@pytest.mark.parametrize("args,code", [
    (["lattice-info", "[[1,2]"], 2),
    (["lattice-info", "[[1,2],[3]]"], 2),
    (["lattice-info", "nonsense"], 2),
    (["classify"], 2),
    (["classify", "x"], 2),
    (["bogus"], 2),
    (["lattice-info", "[[1,1],[1,1]]"], 3),
    (["lattice-info", "[[1,2],[3,4]]"], 3),
    (["classify", "6"], 3),
    (["assoc", "7"], 3),
    (["th81", "-1"], 3),
    (["sweep", "5"], 0),
])
def test_exit_codes(args, code):
    assert run(args)[0] == code


def test_internal_failure_exit_code(monkeypatch):
    from fano10.errors import InternalVerificationFailed

    def boom(d):
        raise InternalVerificationFailed("forced")
    monkeypatch.setattr(fano, "classify_special_sublattice", boom)
    assert run(["classify", "10"])[0] == 4


def test_main_writes_stdout(capsys):
    assert main(["assoc", "2"]) == 0
    assert "K3: yes" in capsys.readouterr().out
    assert main(["classify", "6"]) == 3
    assert "NotAdmissible" in capsys.readouterr().err


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "fano10", "assoc", "26"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 0 and "cubic: yes" in p.stdout
