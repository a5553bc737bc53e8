"""Regenerate the bundled corpora in src/knotlattice/data.

Run once at development time; it needs the ``database_knotinfo`` package,
which the library itself never imports.

    python tools/build_corpus.py

corpus.jsonl holds the KnotInfo knots 3_1 .. 8_21 and the LinkInfo links
with at most 7 crossings (first orientation of each).  Expected signatures
come from the Seifert-matrix oracle and must equal the tables' values;
expected xi is the oracle's average over orientation classes and must equal
the average of the table signatures over the link's orientation variants.

pairs.jsonl holds flype pairs of reduced alternating knot diagrams built
from rational tangles, plus the trefoil/mirror negative control.
"""

from __future__ import annotations

import csv
import json
import os
import sys
from fractions import Fraction
from itertools import combinations

import database_knotinfo

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from knotlattice.diagram import (  # noqa: E402
    LinkDiagram,
    canonical_form,
    emit_pd,
    is_alternating_syntactic,
    is_isomorphic,
    is_reduced,
    mirror,
    reverse,
    reverse_components,
)
from knotlattice.generate import flype_pair, is_reduced_alternating, rational_tangle  # noqa: E402
from knotlattice.glform import gl_forms  # noqa: E402
from knotlattice.lattice import determinant  # noqa: E402
from knotlattice.seifert import seifert_signature  # noqa: E402

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "knotlattice", "data")
TABLES = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data")
KNOTS = ["3_1", "4_1", "5_1", "5_2"] + [f"6_{i}" for i in range(1, 4)] \
    + [f"7_{i}" for i in range(1, 8)] + [f"8_{i}" for i in range(1, 22)]


def _rows(name, skip):
    csv.field_size_limit(10 ** 8)
    with open(os.path.join(TABLES, name), encoding="utf-8") as fh:
        return list(csv.DictReader(fh, delimiter="|"))[skip:]


def _pd(text):
    return json.loads(text.replace("{", "[").replace("}", "]"))


def _xi(D):
    m = len(D.components)
    values = [seifert_signature(reverse_components(D, flip))
              for r in range(m) for flip in combinations(range(1, m), r)]
    return Fraction(sum(values), len(values))


def _entry(name, source, D, table_sigma, table_xi, table_alt):
    sigma = seifert_signature(D)
    if sigma != table_sigma:
        raise SystemExit(f"{name}: Seifert oracle gives {sigma}, table says {table_sigma}")
    xi = _xi(D)
    if xi != table_xi:
        raise SystemExit(f"{name}: xi {xi} differs from the table average {table_xi}")
    alternating = is_alternating_syntactic(D)
    if alternating != table_alt:
        raise SystemExit(f"{name}: alternating flag disagrees with the table")
    return {
        "name": name,
        "source": source,
        "pd": [list(q) for q in D.pd],
        "expected": {
            "sigma": sigma,
            "xi": xi.numerator if xi.denominator == 1 else str(xi),
            "alternating": alternating,
            "reduced": is_reduced(D),
            "c": D.n_crossings,
            "writhe": sum(D.signs),
        },
    }


def build_corpus():
    entries = []
    knots = {r["name"]: r for r in _rows("knotinfo_data_complete.csv", 2)}
    for name in KNOTS:
        r = knots[name]
        D = LinkDiagram(_pd(r["pd_notation"]))
        sigma = int(r["signature"])
        entries.append(_entry(name, "KnotInfo", D, sigma, Fraction(sigma), r["alternating"] == "Y"))

    variants = {}
    for r in _rows("linkinfo_data_complete.csv", 1):
        if int(r["crossing_number"]) <= 7:
            variants.setdefault(r["name"].split("{")[0], []).append(r)
    for base, rows in variants.items():
        first = rows[0]
        D = LinkDiagram(_pd(first["pd_notation_vector"]))
        average = Fraction(sum(int(r["signature"]) for r in rows), len(rows))
        entries.append(_entry(base, "LinkInfo", D, int(first["signature"]), average,
                              first["alternating"] == "Y"))
    return entries


def _determinant(D):
    return abs(determinant(gl_forms(D)[0].gram))


def _compositions(n):
    if n == 0:
        yield ()
        return
    for a in range(1, n + 1):
        for rest in _compositions(n - a):
            yield (a,) + rest


def _flype_candidates(max_crossings):
    """Every flype N(c + T + R) -> N(flip(T) + c + R) over rational T and R."""
    tangles = [(terms, s) for n in range(1, max_crossings) for terms in _compositions(n)
               for s in (1, -1)]
    for t_terms, t_sign in tangles:
        if sum(t_terms) < 2:
            continue
        for r_terms, r_sign in tangles:
            if sum(t_terms) + sum(r_terms) + 1 > max_crossings:
                continue
            for positive in (True, False):
                A, B = flype_pair(rational_tangle(t_terms, t_sign),
                                  rational_tangle(r_terms, r_sign), positive)
                if len(A.components) == 1 and is_reduced_alternating(A) \
                        and is_reduced_alternating(B):
                    yield A, B


def _pair(name, A, B):
    if seifert_signature(A) != seifert_signature(B) or _determinant(A) != _determinant(B):
        raise SystemExit(f"{name}: flype changed an invariant")
    return {"name": name, "first": emit_pd(A), "second": emit_pd(B),
            "same_link": True, "expect_agree": True}


def build_pairs():
    """Flype pairs of knots up to 8 crossings whose diagrams differ, plus two controls.

    A flype is trivial on the sphere for most small rational knots, so the
    non-isomorphic pairs all have 8 crossings; a twist-knot pair whose two
    diagrams happen to be isomorphic rides along as a sanity case.
    """
    pairs, seen = [], set()
    twist_pair = None
    for A, B in _flype_candidates(8):
        if twist_pair is None and A.n_crossings == 5 and _determinant(A) == 7:
            twist_pair = _pair("flype-twist-5_2", A, B)
        if is_isomorphic(A, B) or is_isomorphic(A, reverse(B)):
            continue
        key = frozenset(canonical_form(X) for X in (A, B, reverse(A), reverse(B)))
        if key in seen:
            continue
        seen.add(key)
        pairs.append(_pair(f"flype-{A.n_crossings}-det{_determinant(A)}-{len(seen)}", A, B))
    pairs.append(twist_pair)
    trefoil = LinkDiagram([(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)])
    pairs.append({
        "name": "mirror-3_1",
        "first": emit_pd(trefoil),
        "second": emit_pd(mirror(trefoil)),
        "same_link": False,
        "expect_agree": False,
    })
    return pairs


def _write(name, rows):
    with open(os.path.join(DATA, name), "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")


def main():
    os.makedirs(DATA, exist_ok=True)
    corpus = build_corpus()
    _write("corpus.jsonl", corpus)
    pairs = build_pairs()
    _write("pairs.jsonl", pairs)
    print(f"{len(corpus)} corpus entries, {len(pairs)} pairs")


if __name__ == "__main__":
    main()
