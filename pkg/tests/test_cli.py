import json

import pytest

from logbundle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


def test_construct_and_analyze_b3(tmp_path, capsys):
    src = str(tmp_path / "b3.json")
    out = str(tmp_path / "b3.report.json")
    code, _, err = run(capsys, "construct", "--family", "b3", "-o", src)
    assert code == 0
    assert "elapsed" in err
    data = json.loads(open(src).read())
    assert len(data["lines"]) == 9
    code, _, _ = run(capsys, "analyze", "-i", src, "-o", out)
    assert code == 0
    report = json.loads(open(out).read())
    assert report["class"]["kind"] == "Free"
    assert (report["class"]["a"], report["class"]["b"]) == (3, 5)
    assert report["chern"] == {"c1": -8, "c2": 15}
    assert report["tjurina"] == 49
    assert report["generic_split"] == [3, 5]
    assert report["audit"]["ok"] is True
    assert report["timing_ms"] is None
    assert report["input"] == data


def test_analyze_exline(tmp_path, capsys):
    src = str(tmp_path / "exline.json")
    out = str(tmp_path / "exline.report.json")
    run(capsys, "construct", "--family", "exline", "-o", src)
    code, _, _ = run(capsys, "analyze", "-i", src, "-o", out)
    assert code == 0
    report = json.loads(open(out).read())
    assert report["class"]["kind"] == "NearlyFree"
    assert report["class"]["jumping_point"] == ["-1", "1", "1"]
    assert report["class"]["jumping_point_in_arrangement"] is True
    jumping = [r["line"] for r in report["lines"] if r["jumping"] and r["tag"] == "arrangement"]
    assert jumping == [["1", "0", "1"], ["0", "1", "-1"], ["1", "-1", "2"]]
    assert report["lattice"]["point_count"] == sum(
        1 for _ in report["lattice"]["multiplicities"]
    )


def test_analyze_parse_failures(tmp_path, capsys):
    bad = write(tmp_path, "dup.json", {"lines": [["1", "0", "0"], ["1", "0", "0"]]})
    code, _, err = run(capsys, "analyze", "-i", bad, "-o", str(tmp_path / "o.json"))
    assert code == 2
    assert "error" in err
    code, _, _ = run(capsys, "analyze", "-i", str(tmp_path / "missing.json"),
                     "-o", str(tmp_path / "o.json"))
    assert code == 2
    notjson = tmp_path / "x.json"
    notjson.write_text("{")
    code, _, _ = run(capsys, "analyze", "-i", str(notjson), "-o", str(tmp_path / "o.json"))
    assert code == 2


def test_analyze_non_reduced_curve(tmp_path, capsys):
    src = write(tmp_path, "sq.json", {"curve": [{"coef": "1", "exp": [2, 0, 0]}]})
    code, _, err = run(capsys, "analyze", "-i", src, "-o", str(tmp_path / "o.json"))
    assert code == 2
    assert "error" in err


def test_sweep_ex1(tmp_path, capsys):
    out = str(tmp_path / "sweep.json")
    code, _, _ = run(capsys, "sweep", "--family", "ex1", "--param", "t",
                     "--from", "1", "--to", "2", "--step", "1/2", "-o", out)
    assert code == 0
    result = json.loads(open(out).read())
    assert result["generic_class"] == {"kind": "NearlyFree", "a": 4, "b": 6}
    assert [r["param"] for r in result["rows"]] == ["1", "3/2", "2"]
    by_param = {r["param"]: r for r in result["rows"]}
    assert by_param["1"]["class"] == {"kind": "Free", "a": 4, "b": 5}
    assert by_param["1"]["exceptional"] is True
    assert by_param["3/2"]["class"] == {"kind": "NearlyFree", "a": 4, "b": 6}
    assert by_param["3/2"]["exceptional"] is False
    assert by_param["2"]["jumping_point"] == ["-5", "4", "1"]


def test_sweep_error_rows(tmp_path, capsys):
    out = str(tmp_path / "sweep.json")
    code, _, _ = run(capsys, "sweep", "--family", "ex1", "--param", "t",
                     "--from", "-1", "--to", "0", "--step", "1", "-o", out)
    assert code == 0
    result = json.loads(open(out).read())
    assert all(r["error"] is not None for r in result["rows"])
    assert all(r["exceptional"] for r in result["rows"])
    assert result["generic_class"] is None


def test_sweep_bad_grid(tmp_path, capsys):
    code, _, _ = run(capsys, "sweep", "--family", "ex1", "--param", "t",
                     "--from", "1", "--to", "0", "--step", "1",
                     "-o", str(tmp_path / "o.json"))
    assert code == 2
    code, _, _ = run(capsys, "sweep", "--family", "nope", "--param", "t",
                     "--from", "0", "--to", "1", "--step", "1",
                     "-o", str(tmp_path / "o.json"))
    assert code == 2


def test_construct_families(tmp_path, capsys):
    out = str(tmp_path / "del.json")
    code, _, _ = run(capsys, "construct", "--family", "deletion",
                     "--a", "3", "--b", "4", "-o", out)
    assert code == 0
    assert len(json.loads(open(out).read())["lines"]) == 7
    code, _, _ = run(capsys, "construct", "--family", "conic-pencil", "-o", out)
    assert code == 0
    assert "curve" in json.loads(open(out).read())
    code, _, _ = run(capsys, "construct", "--family", "exinout",
                     "--params", '{"t": "1/2"}', "-o", out)
    assert code == 0
    assert len(json.loads(open(out).read())["lines"]) == 11


def test_construct_errors(tmp_path, capsys):
    out = str(tmp_path / "o.json")
    code, _, _ = run(capsys, "construct", "--family", "c0", "--a", "3", "-o", out)
    assert code == 2
    code, _, _ = run(capsys, "construct", "--family", "ex1", "-o", out)
    assert code == 2
    code, _, _ = run(capsys, "construct", "--family", "c0",
                     "--params", "not json", "-o", out)
    assert code == 2


def test_plot_arrangement(tmp_path, capsys):
    src = str(tmp_path / "exline.json")
    svg = str(tmp_path / "exline.svg")
    run(capsys, "construct", "--family", "exline", "-o", src)
    code, _, _ = run(capsys, "plot", "-i", src, "-o", svg)
    assert code == 0
    text = open(svg).read()
    assert text.startswith("<?xml")
    assert "<svg" in text


def test_plot_deterministic(tmp_path, capsys):
    src = str(tmp_path / "tri.json")
    write(tmp_path, "tri.json",
          {"lines": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})
    a, b = str(tmp_path / "a.svg"), str(tmp_path / "b.svg")
    assert run(capsys, "plot", "-i", src, "-o", a)[0] == 0
    assert run(capsys, "plot", "-i", src, "-o", b)[0] == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_plot_rejects_curve(tmp_path, capsys):
    src = str(tmp_path / "curve.json")
    run(capsys, "construct", "--family", "conic-pencil", "-o", src)
    code, _, err = run(capsys, "plot", "-i", src, "-o", str(tmp_path / "o.svg"))
    assert code == 4
    assert "arrangements only" in err


def test_compare(tmp_path, capsys):
    a = str(tmp_path / "a.json")
    b = str(tmp_path / "b.json")
    run(capsys, "construct", "--family", "exline", "-o", a)
    run(capsys, "construct", "--family", "exline-shift", "-o", b)
    code, out, _ = run(capsys, "compare", a, b)
    assert code == 0
    result = json.loads(out)
    assert result["lattice_isomorphic"] is True
    assert result["same_class"] is True
    assert result["class_a"]["jumping_point"] == ["-1", "1", "1"]
    assert result["class_b"]["jumping_point"] == ["-4", "2", "3"]


def test_compare_not_isomorphic(tmp_path, capsys):
    a = write(tmp_path, "a.json",
              {"lines": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]})
    b = write(tmp_path, "b.json",
              {"lines": [["1", "0", "0"], ["0", "1", "0"], ["1", "-1", "0"]]})
    code, out, _ = run(capsys, "compare", a, b)
    assert code == 0
    assert json.loads(out)["lattice_isomorphic"] is False


def test_compare_rejects_curves(tmp_path, capsys):
    a = str(tmp_path / "a.json")
    run(capsys, "construct", "--family", "conic-pencil", "-o", a)
    code, _, _ = run(capsys, "compare", a, a)
    assert code == 4
