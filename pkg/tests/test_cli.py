"""Tests de la CLI: salida determinista y códigos de salida."""

import json

import pytest

from main import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_cross_check(capsys):
    code, out, _ = _run(capsys, "count", "--s", "2", "--t", "3", "--method", "closed,brute")
    assert code == 0
    assert out == "3 3 OK\n"


def test_count_all_methods(capsys):
    code, out, _ = _run(capsys, "count", "--s", "4", "--t", "3", "--method", "closed,recurrence,enum,brute")
    assert code == 0
    assert out == "10 10 10 10 OK\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--s", "0", "--t", "3"],
        ["count", "--s", "2"],
        ["count", "--s", "2", "--t", "3", "--method", "magic"],
        ["frobnicate"],
        ["verify", "--r", "5", "--n", "5"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = _run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_enum_formats(capsys):
    code, out, _ = _run(capsys, "enum", "--s", "2", "--t", "3")
    assert code == 0
    assert out.splitlines() == ["1:[3,3] 2:[3,5]", "1:[3,4] 2:[4,5]", "1:[3,5] 2:[5,5]"]

    code, out, _ = _run(capsys, "enum", "--s", "2", "--t", "3", "--format", "json")
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["breakpoints"] for r in records] == [[3], [4], [5]]
    assert records[1]["edges"] == [[1, 3], [1, 4], [2, 4], [2, 5]]

    code, out, _ = _run(capsys, "enum", "--s", "2", "--t", "2", "--format", "dot")
    assert out.count("graph H") == 2


def test_phi_and_inverse(capsys):
    code, out, _ = _run(capsys, "phi", "--s", "2", "--t", "3")
    assert code == 0
    assert [line.split("\t")[1] for line in out.splitlines()] == ["011", "101", "110"]

    code, out, _ = _run(capsys, "phi", "--s", "2", "--t", "3", "--invert", "101")
    assert out == "1:[3,4] 2:[4,5]\n"

    code, _, _ = _run(capsys, "phi", "--s", "2", "--t", "3", "--invert", "111")
    assert code == 2


def test_groebner_check(capsys):
    code, out, _ = _run(capsys, "groebner-check", "--r", "2", "--n", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "x[1,5]*x[2,3] - x[1,3]*x[2,5]"
    assert lines[-1] == "binomials=3 groebner=OK"


def test_groebner_check_negative_control(capsys):
    code, _, err = _run(capsys, "groebner-check", "--r", "2", "--n", "5", "--corrupt", "0")
    assert code == 1
    assert "FAILED: groebner" in err


@pytest.mark.parametrize("r, n, size", [(2, 5, 3), (3, 6, 9)])
def test_groebner_check_every_corruption_exits_1(capsys, r, n, size):
    for index in range(size - 1):
        code, out, err = _run(capsys, "groebner-check", "--r", str(r), "--n", str(n), "--corrupt", str(index))
        assert code == 1, index
        assert out.splitlines()[-1] == f"binomials={size} groebner=FAIL"
        assert "FAILED: groebner" in err


def test_groebner_check_json(capsys):
    code, out, _ = _run(capsys, "groebner-check", "--r", "2", "--n", "4", "--format", "json")
    data = json.loads(out)
    assert data["is_groebner"] is True
    assert data["binomials"][0]["plus"] == [[1, 4], [2, 3]]


def test_verify_2_5(capsys):
    code, out, _ = _run(capsys, "verify", "--r", "2", "--n", "5", "--samples", "20")
    assert code == 0
    assert "count=3 expected=3 unimodular=3/3 volume=3/3" in out
    assert out.rstrip().endswith("ok=true")


def test_verify_is_byte_identical(capsys):
    first = _run(capsys, "--threads", "2", "verify", "--r", "3", "--n", "6", "--samples", "10", "--seed", "4")
    second = _run(capsys, "verify", "--r", "3", "--n", "6", "--samples", "10", "--seed", "4")
    assert first[1] == second[1]


def test_verify_csv(capsys):
    code, out, _ = _run(capsys, "verify", "--r", "2", "--n", "4", "--samples", "5", "--format", "csv")
    header, row = out.splitlines()
    assert header == "r,n,count,expected,unimodular,volume,volume_ok,covering,ok"
    assert row.startswith("2,4,2,2,2/2,2/2,true,")


def test_triangulate_formats(capsys):
    code, out, _ = _run(capsys, "triangulate", "--r", "2", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 3
    assert all(s["volume"] == 1 for s in data["simplices"])

    code, out, _ = _run(capsys, "triangulate", "--r", "2", "--n", "5")
    assert out.splitlines()[-1] == "simplices=3 expected=3"

    code, out, _ = _run(capsys, "triangulate", "--r", "2", "--n", "5", "--format", "csv")
    assert out.splitlines()[1].startswith("2,5,3,3,3/3,3/3,true,")


def test_ehrhart(capsys):
    code, out, _ = _run(capsys, "ehrhart", "--r", "2", "--n", "5", "--kmax", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[:4] == ["k=0 count=1", "k=1 count=6", "k=2 count=18", "k=3 count=40"]
    assert lines[-1] == "normalized_volume=3"

    code, out, _ = _run(capsys, "ehrhart", "--r", "2", "--n", "5", "--kmax", "3", "--format", "csv")
    assert out == "k,count\n0,1\n1,6\n2,18\n3,40\n"


def test_matroid_command(capsys, tmp_path):
    path = tmp_path / "parallel.json"
    path.write_text(json.dumps({"n": 4, "r": 2, "bases": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]]}))

    code, out, _ = _run(capsys, "matroid", "--input", str(path), "--basis", "1,3", "--all-relabelings")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("B=[1, 3] edges=(1,3) (2,3) (2,4) count=1")
    assert lines[1] == "B=[1, 3] relabelings min=1 max=2"

    code, out, _ = _run(capsys, "matroid", "--input", str(path), "--format", "json")
    assert len(json.loads(out)["reports"]) == 5


def test_matroid_rejects_non_matroid_and_missing_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 4, "r": 2, "bases": [[1, 2], [3, 4]]}')
    assert _run(capsys, "matroid", "--input", str(path))[0] == 2
    assert _run(capsys, "matroid", "--input", str(tmp_path / "missing.json"))[0] == 2
