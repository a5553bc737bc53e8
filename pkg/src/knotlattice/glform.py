"""Gordon-Litherland forms of the two chessboard surfaces and the link invariants they give."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .diagram import (
    Color,
    Coloring,
    LinkDiagram,
    classify,
    default_coloring,
    reverse_components,
    type_b_coloring,
    white_odd,
)
from .errors import InternalConventionError, NoAllBColoring, NotConnected
from .lattice import Definiteness, SignatureTriple, definiteness, flow_lattice, signature
from .taitgraph import tait_graph


@dataclass(frozen=True)
class GLForm:
    color: Color
    gram: tuple
    b1: int
    signature: SignatureTriple
    half_e_S: int
    half_e_SL: int
    definiteness: Definiteness

    @property
    def sigma(self):
        return self.signature.sigma

    @property
    def e_S(self):
        return 2 * self.half_e_S

    @property
    def e_SL(self):
        return 2 * self.half_e_SL

    @property
    def oriented_value(self):
        """sigma(S) + e(S, L)/2."""
        return self.sigma + self.half_e_SL

    @property
    def unoriented_value(self):
        """sigma(S) + e(S)/2."""
        return self.sigma + self.half_e_S

    def to_json(self):
        return {
            "color": self.color.value,
            "gram": [list(r) for r in self.gram],
            "b1": self.b1,
            "signature": self.signature.to_json(),
            "sigma": self.sigma,
            "e_S": self.e_S,
            "e_SL": self.e_SL,
            "definiteness": self.definiteness.value,
        }


def preferred_coloring(D: LinkDiagram) -> Coloring:
    """The all-type-b coloring when there is one, otherwise the default coloring."""
    try:
        return type_b_coloring(D)
    except NoAllBColoring:
        return default_coloring(D)


def gl_form(D: LinkDiagram, col: Coloring, color) -> GLForm:
    if not D.is_connected:
        raise NotConnected("chessboard forms need a connected diagram")
    color = Color(color)
    G = tait_graph(D, col, color)
    F = flow_lattice(G)
    b1 = D.n_crossings - len(col.faces_of(color)) + 1
    if b1 != F.rank:
        raise InternalConventionError(f"b1 {b1} differs from flow-lattice rank {F.rank}")
    _, k = classify(D, col)
    if color is Color.WHITE:
        half_sl = k.aI - k.bI
    else:
        half_sl = k.bII - k.aII
    return GLForm(
        color=color,
        gram=F.gram,
        b1=b1,
        signature=signature(F.gram),
        half_e_S=half_sl + k.lk_total,
        half_e_SL=half_sl,
        definiteness=F.definiteness,
    )


def gl_forms(D: LinkDiagram, col: Coloring | None = None):
    """(White form, Black form) under ``col`` (default: preferred_coloring)."""
    col = col or preferred_coloring(D)
    return gl_form(D, col, Color.WHITE), gl_form(D, col, Color.BLACK)


def link_signature(D: LinkDiagram, col: Coloring | None = None) -> int:
    col = col or preferred_coloring(D)
    W, B = gl_forms(D, col)
    if W.oriented_value != B.oriented_value:
        raise InternalConventionError(
            f"white surface gives {W.oriented_value}, black gives {B.oriented_value}")
    if all(white_odd(D, col)):
        _, k = classify(D, col)
        if W.sigma - k.p != W.oriented_value:
            raise InternalConventionError("sigma(W) - p(D) disagrees with the white form")
    return W.oriented_value


def murasugi_xi(D: LinkDiagram, col: Coloring | None = None) -> Fraction:
    W, B = gl_forms(D, col)
    if W.unoriented_value != B.unoriented_value:
        raise InternalConventionError(
            f"white surface gives {W.unoriented_value}, black gives {B.unoriented_value}")
    return Fraction(W.unoriented_value)


def xi_by_orientations(D: LinkDiagram) -> Fraction:
    """Average of the signature over all orientations, first component fixed."""
    m = len(D.components)
    values = []
    for r in range(m):
        for flip in combinations(range(1, m), r):
            values.append(link_signature(reverse_components(D, flip)))
    return Fraction(sum(values), len(values))


@dataclass(frozen=True)
class LinkInvariants:
    sigma_L: int
    xi_L: Fraction
    crossing_number_of_diagram: int
    writhe: int


def link_invariants(D: LinkDiagram) -> LinkInvariants:
    col = preferred_coloring(D)
    _, k = classify(D, col)
    return LinkInvariants(link_signature(D, col), murasugi_xi(D, col), k.c, k.writhe)
