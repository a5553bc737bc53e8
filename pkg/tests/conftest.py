import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from knotlattice.corpus import load_corpus, load_pairs  # noqa: E402
from knotlattice.diagram import LinkDiagram, parse_pd  # noqa: E402
from knotlattice.generate import random_diagram  # noqa: E402

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
KINK = "X[1,1,2,2]"
HOPF_POSITIVE = "X[3,2,4,1] X[2,3,1,4]"
TORUS_2_4 = "X[5,2,6,1] X[2,7,3,6] X[7,4,8,3] X[4,5,1,8]"
RANDOM_SEED = 20240611

ACCEPTANCE = {}


@pytest.fixture(scope="session")
def corpus():
    return [(e["name"], LinkDiagram(e["pd"]), e["expected"]) for e in load_corpus()]


@pytest.fixture(scope="session")
def pairs():
    return [(p, parse_pd(p["first"]), parse_pd(p["second"])) for p in load_pairs()]


@pytest.fixture(scope="session")
def random_diagrams():
    rng = random.Random(RANDOM_SEED)
    return [random_diagram(rng, 8) for _ in range(1000)]


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
