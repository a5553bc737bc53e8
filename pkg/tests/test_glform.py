from fractions import Fraction

import pytest

from conftest import FIGURE_EIGHT, HOPF_POSITIVE, KINK, TREFOIL
from knotlattice.diagram import (
    Color,
    checkerboard_colorings,
    classify,
    is_alternating_syntactic,
    mirror,
    parse_pd,
    reverse_components,
    type_b_coloring,
)
from knotlattice.errors import NotConnected
from knotlattice.glform import (
    gl_form,
    gl_forms,
    link_invariants,
    link_signature,
    murasugi_xi,
    xi_by_orientations,
)
from knotlattice.lattice import Definiteness, determinant, signature


def test_trefoil_forms(trefoil):
    W, B = gl_forms(trefoil, type_b_coloring(trefoil))
    assert W.b1 == 2 and B.b1 == 1
    assert signature(W.gram) == (2, 0, 0) and abs(determinant(W.gram)) == 3
    assert B.gram == ((-3,),)
    assert W.definiteness is Definiteness.POSITIVE
    assert B.definiteness is Definiteness.NEGATIVE


def test_alternating_signs_on_corpus(corpus):
    for _, D, e in corpus:
        if e["alternating"]:
            W, B = gl_forms(D, type_b_coloring(D))
            assert W.definiteness in (Definiteness.POSITIVE, Definiteness.RANK_ZERO)
            assert B.definiteness in (Definiteness.NEGATIVE, Definiteness.RANK_ZERO)


def test_b1_sum(corpus):
    for _, D, _ in corpus:
        for col in checkerboard_colorings(D):
            W, B = gl_forms(D, col)
            assert W.b1 + B.b1 == D.n_crossings


@pytest.mark.parametrize("text, sigma", [(TREFOIL, 2), (FIGURE_EIGHT, 0), (KINK, 0)])
def test_signature_examples(text, sigma):
    D = parse_pd(text)
    assert link_signature(D) == sigma
    assert link_signature(mirror(D)) == -sigma


def test_trefoil_chiralities(trefoil):
    # the given code has writhe -3; its mirror is the positive trefoil
    assert sum(trefoil.signs) == -3
    assert link_signature(mirror(trefoil)) == -2


def test_knot_xi_equals_sigma(corpus):
    for name, D, _ in corpus:
        if len(D.components) == 1:
            assert murasugi_xi(D) == link_signature(D)


def test_hopf_xi_is_orientation_average():
    D = parse_pd(HOPF_POSITIVE)
    values = [link_signature(D), link_signature(reverse_components(D, [1]))]
    assert values == [-1, 1]
    assert murasugi_xi(D) == Fraction(sum(values), 2) == xi_by_orientations(D) == 0


def test_xi_independent_of_surface(corpus):
    for _, D, _ in corpus:
        values = {f.unoriented_value for col in checkerboard_colorings(D) for f in gl_forms(D, col)}
        assert len(values) == 1


def test_euler_identities(corpus):
    for _, D, _ in corpus:
        for col in checkerboard_colorings(D):
            W, B = gl_forms(D, col)
            _, k = classify(D, col)
            assert k.b - k.a == B.half_e_SL - W.half_e_SL
            for f in (W, B):
                assert f.e_S == f.e_SL + 2 * k.lk_total
                assert f.e_S % 2 == 0 and f.e_SL % 2 == 0


def test_p_identity_on_type_b(corpus):
    for _, D, e in corpus:
        if e["alternating"]:
            col = type_b_coloring(D)
            W, _ = gl_forms(D, col)
            _, k = classify(D, col)
            assert link_signature(D, col) == W.sigma - k.p


def test_mirror_exchanges_definiteness(corpus):
    for _, D, e in corpus:
        if not e["alternating"]:
            continue
        W, B = gl_forms(D, type_b_coloring(D))
        Wm, Bm = gl_forms(mirror(D), type_b_coloring(mirror(D)))
        assert link_signature(mirror(D)) == -link_signature(D)
        assert {W.definiteness, B.definiteness} == {Wm.definiteness, Bm.definiteness}


def test_link_invariants(trefoil):
    inv = link_invariants(trefoil)
    assert (inv.sigma_L, inv.xi_L, inv.crossing_number_of_diagram, inv.writhe) == (2, 2, 3, -3)


def test_to_json_shape(trefoil):
    W = gl_form(trefoil, type_b_coloring(trefoil), Color.WHITE)
    assert W.to_json() == {
        "color": "white", "gram": [[2, 1], [1, 2]], "b1": 2,
        "signature": {"pos": 2, "neg": 0, "null": 0}, "sigma": 2,
        "e_S": 0, "e_SL": 0, "definiteness": "positive",
    }


def test_split_rejected():
    D = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] X[7,10,8,11] X[9,12,10,7] X[11,8,12,9]")
    with pytest.raises(NotConnected):
        link_signature(D)


def test_corpus_expected_values(corpus):
    for name, D, e in corpus:
        assert link_signature(D) == e["sigma"], name
        assert murasugi_xi(D) == Fraction(e["xi"]), name
        assert is_alternating_syntactic(D) == e["alternating"], name
