import json
import subprocess
import sys

import pytest

from convexkit.cli import main
from convexkit.graph import Graph, format_graph, parse_graph
from convexkit.suites import labeled_graphs


def write(tmp_path, name, g):
    path = tmp_path / name
    path.write_text(format_graph(g))
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "p4": write(tmp_path, "p4.g", Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])),
        "k3": write(tmp_path, "k3.g", Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])),
        "2k2": write(tmp_path, "2k2.g", Graph.from_edges(4, [(0, 1), (2, 3)])),
        "c5": write(tmp_path, "c5.g", Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_partition_p3(capsys, files):
    code, doc = run_json(capsys, "partition", "--convexity", "p3", "-p", "2", files["p4"])
    assert code == 0 and doc["found"] is True
    assert list(doc) == ["problem", "convexity", "p", "found", "classes", "witness", "method", "graph"]
    assert doc["method"] == "paper"
    assert sorted(sum(doc["classes"], [])) == [0, 1, 2, 3]
    assert doc["witness"]["matching_cut_edges"] == [[2, 3]]


def test_cover_digital_none(capsys, files):
    code, doc = run_json(capsys, "cover", "--convexity", "digital", "-p", "2", files["k3"])
    assert code == 0 and doc["found"] is False and doc["classes"] is None


def test_gadget_mono(capsys, files):
    code, out = run(capsys, "gadget", "mono", "--format", "text", files["2k2"])
    assert code == 0
    g = parse_graph(out)
    assert g.n == 6 and "# extra: 4 5" in out
    code, doc = run_json(capsys, "gadget", "mono", files["2k2"])
    assert doc["extra"] == [4, 5] and doc["graph"]["n"] == 6


def test_gadget_p3(capsys, files):
    code, doc = run_json(capsys, "gadget", "p3", "-p", "2", files["p4"])
    assert code == 0 and doc["graph"]["n"] == 12 and doc["r"] == 4 and len(doc["extra"]) == 8


def test_check_and_hull(capsys, files):
    code, doc = run_json(capsys, "check", "--convexity", "p3", "--set", "0,2", files["p4"])
    assert doc["convex"] is False
    code, doc = run_json(capsys, "hull", "--convexity", "p3", "--set", "0,2", files["p4"])
    assert doc["hull"] == [0, 1, 2]
    code, out = run(capsys, "hull", "--convexity", "monophonic", "--set", "0,2", "--format", "text", files["c5"])
    assert out.strip() == "0 1 2 3 4"


def test_small_commands(capsys, files):
    _, doc = run_json(capsys, "tds", files["p4"])
    assert doc["witness"] == [1, 2]
    _, doc = run_json(capsys, "tds", files["k3"])
    assert doc["size"] == 2
    _, doc = run_json(capsys, "matching-cut", files["c5"])
    assert doc["found"] is True
    _, doc = run_json(capsys, "clique-separator", files["p4"])
    assert doc["witness"] == [1]
    _, doc = run_json(capsys, "clique-separator", files["c5"])
    assert doc["found"] is False


def test_exit_codes(capsys, tmp_path, files, monkeypatch):
    bad = tmp_path / "bad.g"
    bad.write_text("3 2\n0 1\n1 0\n")
    assert main(["tds", str(bad)]) == 2
    assert main(["tds", str(tmp_path / "missing.g")]) == 2
    assert main(["clique-separator", files["2k2"]]) == 2
    monkeypatch.setenv("CONVEXKIT_MAX_N", "3")
    assert main(["partition", "--convexity", "p3", "-p", "2", "--method", "oracle", files["p4"]]) == 3
    capsys.readouterr()


def test_certificates_roundtrip_through_check(capsys, files):
    for kind in ("digital", "p3", "p3star", "monophonic"):
        for problem in ("cover", "partition"):
            for name in ("p4", "c5", "2k2"):
                _, doc = run_json(capsys, problem, "--convexity", kind, "-p", "2", files[name])
                for cls in doc["classes"] or []:
                    _, chk = run_json(capsys, "check", "--convexity", kind, "--set", ",".join(map(str, cls)), files[name])
                    assert chk["convex"] is True


@pytest.mark.parametrize("problem, kind, p", [
    ("cover", "digital", 2), ("cover", "digital", 3), ("cover", "monophonic", 2),
    ("partition", "p3", 2), ("partition", "digital", 2),
])
def test_methods_agree(capsys, tmp_path, problem, kind, p):
    for n in (3, 4):
        for g in labeled_graphs(n):
            f = write(tmp_path, "g.g", g)
            _, a = run_json(capsys, problem, "--convexity", kind, "-p", str(p), "--method", "paper", f)
            _, b = run_json(capsys, problem, "--convexity", kind, "-p", str(p), "--method", "oracle", f)
            assert a["found"] == b["found"]


def test_verify_suite(capsys):
    code, out = run(capsys, "verify", "matching-cut")
    assert code == 0 and out.startswith("PASS matching-cut")


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "convexkit", "partition", "--convexity", "p3", "-p", "2", files["p4"]],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["found"] is True
