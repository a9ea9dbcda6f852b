import json
import shutil
import subprocess
import sys

import pytest

from chromsym.cli import RunConfig, main
from chromsym.graph import format_edge_list, to_graph6, build_gp, parse_edge_list
from chromsym.symfunc import SymPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text("3\n0 1\n0 2\n1 2\n")
    return str(path)


def test_expand_examples(capsys, k3_file):
    assert run(capsys, "expand", k3_file, "--basis", "e")[:2] == (0, "6·e[3]\n")
    assert run(capsys, "expand", "gp:0,0,0")[1] == "1·e[1,1,1]\n"
    code, out, _ = run(capsys, "expand", "pattern:claw")
    assert code == 0 and "- 2·e[2,2]" in out
    assert run(capsys, "expand", k3_file, "--basis", "m")[1] == "6·m[1,1,1]\n"
    assert run(capsys, "expand", k3_file, "--basis", "mtilde")[1] == "1·mt[1,1,1]\n"


def test_expand_json_round_trip(capsys):
    code, out, _ = run(capsys, "expand", "gb:2,1,3", "--format", "json")
    text = out.rstrip("\n")
    assert code == 0
    assert SymPoly.from_json(text).to_json() == text


def test_stdin_and_graph6(capsys, monkeypatch):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(to_graph6(build_gp(1, 1, 1)) + "\n"))
    code, out, _ = run(capsys, "expand", "-")
    assert code == 0 and out.startswith("96·e[6]")


def test_check_examples(capsys):
    code, out, _ = run(capsys, "check", "pattern:claw", "claw-free")
    assert code == 1
    assert out == "false\nwitness: [0, 1, 2, 3]\n"
    assert run(capsys, "check", "gb:1,1,1", "unit-interval")[:2] == (0, "true\n")
    assert run(capsys, "check", "gp:1,1,1", "e-positive")[0] == 0
    code, out, _ = run(capsys, "check", "pattern:claw", "e-positive", "--format", "json")
    assert code == 1
    assert json.loads(out) == {"predicate": "e-positive", "value": False, "witness": [2, 2]}
    assert run(capsys, "check", "pattern:C4", "chordal")[0] == 1
    assert run(capsys, "check", "pattern:co-triangle", "co-triangle-free")[0] == 1


def test_family_edges(capsys):
    code, out, _ = run(capsys, "family", "gp", "1", "1", "1", "--emit", "edges")
    g = parse_edge_list(out)
    assert code == 0 and g.n == 6 and g.num_edges == 9
    assert format_edge_list(g) == out
    assert run(capsys, "family", "gp", "0", "0", "0")[1] == "3\n"


def test_family_expansions(capsys):
    code, out, _ = run(capsys, "family", "gp", "1", "1", "1", "--emit", "expansion")
    assert code == 0
    assert out.splitlines()[0] == "A=6 B=6 C=0 D=54 E=96"
    code, out, _ = run(capsys, "family", "gb", "1", "1", "1", "--emit", "expansion", "--basis", "m")
    assert out == "1·mt[3,1,1] + 3·mt[2,2,1] + 5·mt[2,1,1,1] + 1·mt[1,1,1,1,1]\n"
    code, out, err = run(capsys, "family", "gp", "0", "1", "1", "--emit", "expansion")
    assert code == 4 and "r, s, t >= 1" in err


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "gb:2,1,1")
    assert code == 0
    assert "GeneralizedBull" in out and "GB(r,s,t)=(2, 1, 1)" in out
    code, out, _ = run(capsys, "classify", "pattern:P4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["components"][0]["variant"] == "CoTriangleFree"
    code, _, err = run(capsys, "classify", "pattern:C4")
    assert code == 5 and "chordal" in err
    code, _, err = run(capsys, "classify", "gp:0,0,0")
    assert code == 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "gp", "--max-param", "1")
    assert code == 0 and out.startswith("GP(1,1,1) pass")
    code, out, _ = run(capsys, "verify", "GB", "--max-param", "2", "--format", "json", "--workers", "2")
    data = json.loads(out)
    assert code == 0 and len(data) == 8 and all(d["e_nonneg"] for d in data)


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--max-n", "4", "--min-n", "4")
    assert code == 0
    assert out.splitlines()[0] == "n=4 checked=64 in_class=64 positive=60 negative=4"
    assert out.count("# negative e-coefficient") == 4
    code, out, _ = run(capsys, "search", "--max-n", "5", "--class", "2k2-unit-interval",
                       "--connected", "--format", "json")
    data = json.loads(out)
    assert [d["n"] for d in data] == [1, 2, 3, 4, 5]
    assert all(d["negative"] == 0 and d["certified"] == d["in_class"] for d in data)


def test_parse_error_reports_line(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("4\n0 1\n1 9\n")
    code, _, err = run(capsys, "expand", str(path))
    assert code == 2 and "line 3" in err
    code, _, err = run(capsys, "expand", str(tmp_path / "missing.txt"))
    assert code == 2
    assert run(capsys, "expand", "pattern:bull")[0] == 2
    assert run(capsys, "expand", "gp:1,1")[0] == 2


def test_bound_exceeded(capsys):
    code, _, err = run(capsys, "expand", "gp:1,1,1", "--max-census", "5")
    assert code == 3 and "5" in err
    assert run(capsys, "classify", "gp:1,1,1", "--max-census", "4")[0] == 3


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["expand", "gp:1,1,1", "--bogus"])
    assert info.value.code == 2
    with pytest.raises(SystemExit):
        main(["search", "--workers", "0"])
    with pytest.raises(ValueError):
        RunConfig("expand", workers=0)


@pytest.mark.skipif(shutil.which("cst") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["cst", "family", "gp", "1", "1", "1", "--emit", "expansion"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("A=6 B=6 C=0 D=54 E=96")
