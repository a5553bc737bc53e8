"""Access to the bundled corpora shipped in ``knotlattice/data``."""

from __future__ import annotations

import json
from importlib import resources


def _lines(name):
    text = resources.files("knotlattice").joinpath("data", name).read_text(encoding="utf-8")
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def corpus_path():
    """Filesystem path of corpus.jsonl (for ``knotlattice batch``)."""
    return resources.files("knotlattice").joinpath("data", "corpus.jsonl")


def load_corpus():
    """Knots and links with expected sigma, xi, alternating, reduced, c and writhe."""
    return _lines("corpus.jsonl")


def load_pairs():
    """Diagram pairs for Tait verification; ``same_link`` marks genuine pairs."""
    return _lines("pairs.jsonl")
