import json

import pytest

from lediagrams.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_map_round_trip(capsys):
    code, out, _ = run(capsys, "map", "111111/000100/11010/1001/111", "--bijection", "big-phi")
    assert code == 0 and out.split() == ["101111", "000111", "11111", "1111", "001"]
    code, out, _ = run(capsys, "map", "/".join(out.split()), "--bijection", "big-phi-inv")
    assert out.split() == ["111111", "000100", "11010", "1001", "111"]


def test_map_json(capsys):
    code, out, _ = run(capsys, "map", "10/00", "--bijection", "phi", "--format", "json")
    assert code == 0 and json.loads(out) == {"rows": ["10", "00"]}


def test_check(capsys):
    assert run(capsys, "check", "11/10", "--class", "x")[1].strip() == "OK"
    code, out, _ = run(capsys, "check", "11/10", "--class", "le")
    assert code == 1 and out.split() == ["VIOLATION", "1", "2", "1", "2", "1110"]


def test_check_reads_file(tmp_path, capsys):
    p = tmp_path / "d.txt"
    p.write_text("10\n01\n")
    code, out, _ = run(capsys, "check", str(p), "--class", "x", "--format", "json")
    assert code == 1 and json.loads(out)["pattern"] == "1001"


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "3,2,1", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["young_english"] and info["le_complete"]


def test_count_and_fpoly(capsys):
    assert run(capsys, "count", "--shape", "2,2", "--class", "alt")[1].strip() == "14"
    code, out, _ = run(capsys, "fpoly", "2,2", "--verify", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["verified"] and sum(payload["coefficients"]) == 14


def test_graph_commands(capsys):
    code, out, _ = run(capsys, "chromatic", "2,2", "--format", "json")
    assert json.loads(out)["coefficients"] == [0, -3, 6, -4, 1]
    assert run(capsys, "ao", "2,2")[1].strip() == "14"
    assert run(capsys, "ao", "1", "--box", "2,2")[1].strip() == "2"


def test_stirling(capsys):
    code, out, _ = run(capsys, "stirling", "4")
    lines = [l.split("\t") for l in out.strip().splitlines()[1:]]
    assert code == 0
    assert [l[3] for l in lines] == ["6", "11", "6", "1"]
    assert all(l[4] == "match" for l in lines)


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-cells", "6", "--le-complete-box", "2,2")
    assert code == 0 and "properties passed" in out


@pytest.mark.parametrize("argv", [
    ["check", "1x/01", "--class", "x"],
    ["map", "10/01", "--bijection", "big-phi"],
    ["fpoly", "1,2"],
    ["frobnicate"],
    ["check", "10"],
])
def test_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err
