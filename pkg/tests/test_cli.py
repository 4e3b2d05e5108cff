import json
from pathlib import Path

import pytest

from nocones.cli import main, parse_weights

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_parse_weights():
    assert parse_weights("1,0;0,1") == [(1, 0), (0, 1)]
    assert parse_weights("2;2") == [(2,), (2,)]


def test_cone_string(capsys):
    code, out, _ = run(capsys, "cone", "string", "--type", "A1", "--word", "1")
    assert code == 0
    obj = json.loads(out)
    assert obj["vars"] == ["lam1", "t1"]


def test_cone_tensor3_g2_is_deterministic(capsys):
    args = ("cone", "tensor3", "--type", "G2", "--word", "1,2,1,2,1,2")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert len(json.loads(first)["vars"]) == 10


def test_counts(capsys):
    assert run(capsys, "count", "tensor3", "--type", "A1", "--word", "1", "--weights", "2;1;1")[1] == "1"
    assert run(capsys, "count", "tensor3", "--type", "A2", "--word", "1,2,1", "--weights", "0,0;0,0;0,0")[1] == "1"
    assert run(capsys, "count", "glue", "--tree", str(DATA / "t4.graph"), "--type", "A1", "--word", "1",
               "--weights", "2;2;2;2")[1] == "3"
    assert run(capsys, "count", "glue", "--tree", str(DATA / "t4_a2.graph"), "--type", "A2",
               "--weights", "1,0;0,1;1,0;0,1")[1] == "2"
    assert run(capsys, "count", "glue", "--graph", str(DATA / "theta.graph"), "--type", "A1", "--word", "1",
               "--degree", "2")[1] == "3"
    assert run(capsys, "count", "bz", "--m", "3", "--weights", "1,1;1,1;1,1", "--json")[1] == '{"count": 2}'


def test_count_from_json(capsys, tmp_path):
    _, out, _ = run(capsys, "cone", "string", "--type", "A2", "--word", "1,2,1", "--weights", "1,1")
    path = tmp_path / "c.json"
    path.write_text(out)
    assert run(capsys, "count", "file", "--input", str(path))[1] == "8"


def test_oracle(capsys):
    assert run(capsys, "oracle", "invdim", "--type", "A2", "--weights", "1,1;1,1;1,1")[1] == "2"
    _, out, _ = run(capsys, "oracle", "tensor", "--type", "A2", "--weights", "1,0;0,1", "--json")
    assert json.loads(out) == [{"weight": [0, 0], "multiplicity": 1}, {"weight": [1, 1], "multiplicity": 1}]


def test_exit_codes(capsys):
    assert run(capsys, "oracle", "invdim", "--type", "A2", "--weights", "1,x")[0] == 2
    assert run(capsys, "cone", "string", "--type", "Q7", "--word", "1")[0] == 2
    code, _, err = run(capsys, "cone", "string", "--type", "A2", "--word", "1,1,2")
    assert code == 3 and "reduced" in err
    code, _, err = run(capsys, "count", "glue", "--tree", str(DATA / "star5.graph"), "--type", "A1", "--word", "1",
                       "--weights", "1;1;1;1;0")
    assert code == 3 and "trivalent" in err
    code, _, err = run(capsys, "count", "string", "--type", "A1", "--word", "1")
    assert code == 4 and "direction" in err
    with pytest.raises(SystemExit) as exc:
        main(["cone"])
    assert exc.value.code == 2


def test_refine(capsys, tmp_path):
    _, out, _ = run(capsys, "refine", str(DATA / "star5.graph"))
    path = tmp_path / "r.graph"
    path.write_text(out + "\n")
    assert run(capsys, "count", "glue", "--tree", str(path), "--type", "A1", "--word", "1",
               "--weights", "1;1;1;1;0")[1] == "2"


def test_verify_and_manifest(capsys, tmp_path):
    man = tmp_path / "m.json"
    code, out, _ = run(capsys, "--manifest", str(man), "verify", "sl2-generation", "--degree", "6")
    assert code == 0 and out.endswith("PASS (2/2 comparisons agree)")
    data = json.loads(man.read_text())
    assert data["output"] == out and data["command"][-3:] == ["sl2-generation", "--degree", "6"]
    code, out, _ = run(capsys, "verify", "string-dims", "--max", "1")
    assert code == 0
