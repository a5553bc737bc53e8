from knotlattice.corpus import load_corpus, load_pairs
from knotlattice.diagram import LinkDiagram, parse_pd
from knotlattice.report import analyze


def test_corpus_shape():
    entries = load_corpus()
    names = [e["name"] for e in entries]
    assert len(names) == len(set(names)) >= 35
    knots = [e for e in entries if e["source"] == "KnotInfo"]
    assert sum(e["expected"]["alternating"] for e in knots) == 32
    assert all(e["expected"]["c"] <= 8 for e in entries)


def test_pairs_shape():
    pairs = load_pairs()
    assert sum(p["same_link"] for p in pairs) >= 5
    assert any(not p["same_link"] for p in pairs)
    for p in pairs:
        parse_pd(p["first"]), parse_pd(p["second"])


def test_report_matches_expected():
    for e in load_corpus():
        report = analyze(LinkDiagram(e["pd"]))
        exp = e["expected"]
        assert report["sigma_L"] == exp["sigma"]
        assert str(report["xi_L"]) == str(exp["xi"])
        assert (report["alternating"], report["reduced"], report["c"], report["writhe"]) == \
            (exp["alternating"], exp["reduced"], exp["c"], exp["writhe"])
        if report["alternating"]:
            assert report["reduced_via_lattice"] == report["reduced"]
