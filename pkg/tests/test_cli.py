import json
import os
import subprocess
import sys

import pytest

from conftest import KINK, TREFOIL
from knotlattice.cli import main
from knotlattice.corpus import corpus_path, load_pairs


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def error_of(err):
    return json.loads(err.strip().splitlines()[-1])


class TestAnalyze:
    def test_trefoil_json(self, capsys):
        code, out, _ = run(capsys, "analyze", "--pd", TREFOIL, "--json")
        report = json.loads(out)
        assert code == 0
        assert report["alternating"] is True and abs(report["sigma_L"]) == 2
        assert report["special"]["is_special"] is True
        assert [s["color"] for s in report["surfaces"]] == ["white", "black"]

    def test_text_is_rendering_of_json(self, capsys):
        _, text, _ = run(capsys, "analyze", "--pd", TREFOIL)
        assert "alternating: True" in text and "sigma_L: 2" in text

    def test_gauss_input(self, capsys):
        code, out, _ = run(capsys, "analyze", "--gauss", "O1-U2-O3-U1-O2-U3-", "--json")
        assert code == 0 and json.loads(out)["c"] == 3

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "k.json"
        path.write_text(json.dumps({"pd": [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]}))
        code, out, _ = run(capsys, "analyze", "--file", str(path), "--json")
        assert code == 0 and json.loads(out)["sigma_L"] == 2

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "analyze", "--file", str(tmp_path / "missing.json"))
        assert code == 2 and error_of(err)["error"] == "FileNotFound"

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "analyze", "--file", str(path))
        assert code == 2 and error_of(err)["error"] == "MalformedJson"

    def test_malformed_pd(self, capsys):
        code, _, err = run(capsys, "analyze", "--pd", "X[1,2")
        assert code == 2 and error_of(err)["error"] == "MalformedPd"

    def test_require_reduced(self, capsys):
        code, _, err = run(capsys, "analyze", "--pd", KINK, "--require-reduced")
        payload = error_of(err)
        assert code == 3
        assert payload["error"] == "PreconditionFailed" and payload["predicate"] == "reduced"

    def test_split_diagram(self, capsys):
        pd = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] X[7,10,8,11] X[9,12,10,7] X[11,8,12,9]"
        code, out, _ = run(capsys, "analyze", "--pd", pd, "--json")
        report = json.loads(out)
        assert code == 0 and report["connected"] is False
        assert report["sigma_L"] == 4 and len(report["pieces"]) == 2

    def test_needs_one_input(self, capsys):
        code, _, _ = run(capsys, "analyze")
        assert code == 2


class TestTaitVerify:
    def write(self, tmp_path, name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    def test_flype_pair(self, capsys, tmp_path):
        pair = next(p for p in load_pairs() if p["same_link"])
        a = self.write(tmp_path, "a.pd", pair["first"])
        b = self.write(tmp_path, "b.pd", pair["second"])
        code, out, _ = run(capsys, "tait-verify", a, b, "--json")
        assert code == 0 and json.loads(out)["agrees"] is True

    def test_mirror(self, capsys, tmp_path):
        pair = next(p for p in load_pairs() if not p["same_link"])
        a = self.write(tmp_path, "a.pd", pair["first"])
        b = self.write(tmp_path, "b.pd", pair["second"])
        code, out, _ = run(capsys, "tait-verify", a, b, "--oriented", "--json")
        report = json.loads(out)
        assert code == 1 and report["writhe_agrees"] is False and report["crossing_number_agrees"]

    def test_not_reduced(self, capsys, tmp_path):
        a = self.write(tmp_path, "a.pd", TREFOIL)
        b = self.write(tmp_path, "b.pd", KINK)
        code, _, err = run(capsys, "tait-verify", a, b)
        assert code == 3 and error_of(err)["predicate"] == "reduced"


class TestLattice:
    def test_signature(self, capsys):
        code, out, _ = run(capsys, "lattice", "signature", "--matrix", "[[0,1],[1,0]]", "--json")
        assert code == 0 and json.loads(out)["signature"] == {"pos": 1, "neg": 1, "null": 0}

    def test_gram_of_diagram(self, capsys):
        code, out, _ = run(capsys, "lattice", "gram", "--pd", TREFOIL, "--color", "black", "--json")
        assert code == 0 and json.loads(out)["gram"] == [[-3]]

    def test_irreducible_on_graph(self, capsys):
        graph = json.dumps({"vertices": 3, "edges": [{"tail": 0, "head": 1}, {"tail": 1, "head": 2},
                                                     {"tail": 2, "head": 0}]})
        code, out, _ = run(capsys, "lattice", "irreducible", "--graph", graph, "--vector", "[1,1,1]", "--json")
        result = json.loads(out)
        assert code == 0 and result["irreducible"] and result["oriented_cycle"]

    def test_norm_bound_flag(self, capsys):
        graph = json.dumps({"vertices": 2, "edges": [{"tail": 0, "head": 1}] * 3})
        code, _, err = run(capsys, "lattice", "irreducible", "--graph", graph,
                           "--vector", "[3,-3,0]", "--norm-bound", "4")
        assert code == 5 and error_of(err)["error"] == "BoundExceeded"

    def test_vector_not_flow(self, capsys):
        graph = json.dumps({"vertices": 2, "edges": [{"tail": 0, "head": 1}] * 3})
        code, _, err = run(capsys, "lattice", "irreducible", "--graph", graph, "--vector", "[1,0,0]")
        assert code == 3 and error_of(err)["error"] == "NotInLattice"


class TestBatch:
    def test_bundled_corpus(self, capsys):
        code, out, _ = run(capsys, "batch", str(corpus_path()), "--json")
        summary = json.loads(out.strip().splitlines()[-1])["summary"]
        assert code == 0 and summary["ok"] == summary["entries"] >= 35

    def test_jobs_identical(self, capsys):
        _, serial, _ = run(capsys, "batch", str(corpus_path()), "--jobs", "1", "--json")
        _, parallel, _ = run(capsys, "batch", str(corpus_path()), "--jobs", "4", "--json")
        assert serial == parallel

    def test_corrupted_line(self, capsys, tmp_path):
        lines = corpus_path().read_text().splitlines()[:4]
        lines.insert(2, '{"name": "broken", "pd": "X[1,2,3,4"}')
        path = tmp_path / "c.jsonl"
        path.write_text("\n".join(lines) + "\n")
        code, out, _ = run(capsys, "batch", str(path), "--json")
        summary = json.loads(out.strip().splitlines()[-1])["summary"]
        assert code == 1
        assert summary["errors"] == ["broken"] and summary["ok"] == 4

    def test_mismatch_and_duplicates(self, capsys, tmp_path):
        entry = {"name": "t", "pd": TREFOIL, "expected": {"sigma": -2}}
        path = tmp_path / "c.jsonl"
        path.write_text(json.dumps(entry) + "\n" + json.dumps(dict(entry, expected={})) + "\n")
        code, out, _ = run(capsys, "batch", str(path))
        assert code == 1 and "mismatch" in out and "duplicate_names" in out


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "knotlattice.cli", "analyze", "--pd", TREFOIL, "--json"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["c"] == 3


def test_norm_bound_does_not_leak(capsys, monkeypatch):
    monkeypatch.delenv("KNOTLATTICE_NORM_BOUND", raising=False)
    run(capsys, "lattice", "signature", "--matrix", "[[1]]", "--norm-bound", "4")
    assert "KNOTLATTICE_NORM_BOUND" not in os.environ
