"""Alternating detection through definite chessboard surfaces, and its consequences.

A connected diagram is alternating exactly when its two chessboard forms are
definite of opposite signs.  The check runs through the chain

    |b - a| = |sigma(W) - sigma(B)| <= |sigma(W)| + |sigma(B)| <= b1(W) + b1(B) = c

which is tight at both inequalities precisely for alternating diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import (
    LinkDiagram,
    classify,
    default_coloring,
    is_alternating_syntactic,
    is_reduced,
    reverse_components,
    seifert_circles,
    type_b_coloring,
)
from .errors import (
    InternalConventionError,
    NotAlternating,
    NotConnected,
    PreconditionFailed,
)
from .glform import gl_forms, link_signature
from .lattice import Definiteness, negated, short_vectors


@dataclass(frozen=True)
class EqualityChain:
    b_minus_a: int  # |b(D) - a(D)|
    sigma_sum: int  # |sigma(W)| + |sigma(B)|
    c: int
    first_tight: bool  # |sigma(W) - sigma(B)| == |sigma(W)| + |sigma(B)|
    second_tight: bool  # |sigma(W)| + |sigma(B)| == c

    @property
    def tight(self):
        return self.first_tight and self.second_tight

    def to_json(self):
        return {
            "abs_b_minus_a": self.b_minus_a,
            "abs_sigma_sum": self.sigma_sum,
            "c": self.c,
            "first_tight": self.first_tight,
            "second_tight": self.second_tight,
        }


@dataclass(frozen=True)
class AlternatingVerdict:
    is_alternating: bool
    white_definiteness: Definiteness
    black_definiteness: Definiteness
    equality_chain: EqualityChain

    def to_json(self):
        return {
            "is_alternating": self.is_alternating,
            "white_definiteness": self.white_definiteness.value,
            "black_definiteness": self.black_definiteness.value,
            "equality_chain": self.equality_chain.to_json(),
        }


def _opposite_definite(x: Definiteness, y: Definiteness) -> bool:
    if not (x.is_definite and y.is_definite):
        return False
    return {x, y} != {Definiteness.POSITIVE} and {x, y} != {Definiteness.NEGATIVE}


def detect_alternating(D: LinkDiagram) -> AlternatingVerdict:
    """Definiteness verdict under the default coloring, checked against the crossing pattern."""
    if not D.is_connected:
        raise NotConnected("alternating detection needs a connected diagram")
    col = default_coloring(D)
    W, B = gl_forms(D, col)
    _, k = classify(D, col)
    if k.b - k.a != W.sigma - B.sigma:
        raise InternalConventionError(
            f"b - a = {k.b - k.a} but sigma(W) - sigma(B) = {W.sigma - B.sigma}")
    if W.b1 + B.b1 != k.c:
        raise InternalConventionError("b1(W) + b1(B) differs from the crossing count")
    diff = abs(k.b - k.a)
    total = abs(W.sigma) + abs(B.sigma)
    chain = EqualityChain(diff, total, k.c, diff == total, total == k.c)
    verdict = _opposite_definite(W.definiteness, B.definiteness)
    syntactic = is_alternating_syntactic(D)
    if not verdict == chain.tight == (diff == k.c) == syntactic:
        raise InternalConventionError(
            f"definiteness says {verdict}, chain says {chain.tight}, crossings say {syntactic}")
    return AlternatingVerdict(verdict, W.definiteness, B.definiteness, chain)


def _has_unit_vector(form) -> bool:
    gram = form.gram
    if form.definiteness is Definiteness.RANK_ZERO:
        return False
    if form.definiteness is Definiteness.NEGATIVE:
        gram = negated(gram)
    elif form.definiteness is not Definiteness.POSITIVE:
        raise InternalConventionError("chessboard form of an alternating diagram is not definite")
    return len(short_vectors(gram, 1)) > 0


def reduced_via_lattice(D: LinkDiagram) -> bool:
    """True iff neither definite chessboard form represents +-1."""
    if not D.is_connected:
        raise NotConnected("reducedness via lattices needs a connected diagram")
    if not is_alternating_syntactic(D):
        raise NotAlternating("the lattice criterion applies to alternating diagrams")
    W, B = gl_forms(D, type_b_coloring(D))
    verdict = not (_has_unit_vector(W) or _has_unit_vector(B))
    if verdict != is_reduced(D):
        raise InternalConventionError(
            f"lattice says reduced={verdict}, faces say reduced={is_reduced(D)}")
    return verdict


# -- Tait invariants -----------------------------------------------------------

@dataclass(frozen=True)
class DiagramSummary:
    c: int
    writhe: int
    writhes: tuple  # writhe for every orientation class, sorted
    reduced: bool
    alternating: bool
    connected: bool

    def to_json(self):
        return {
            "c": self.c,
            "writhe": self.writhe,
            "writhes": list(self.writhes),
            "reduced": self.reduced,
            "alternating": self.alternating,
            "connected": self.connected,
        }


@dataclass(frozen=True)
class TaitReport:
    first: DiagramSummary
    second: DiagramSummary
    oriented: bool
    crossing_number_agrees: bool
    writhe_agrees: bool

    @property
    def agrees(self):
        return self.crossing_number_agrees and self.writhe_agrees

    def to_json(self):
        return {
            "diagrams": [self.first.to_json(), self.second.to_json()],
            "oriented": self.oriented,
            "crossing_number_agrees": self.crossing_number_agrees,
            "writhe_agrees": self.writhe_agrees,
            "agrees": self.agrees,
        }


def _writhes(D):
    m = len(D.components)
    out = []
    for r in range(m):
        for flip in combinations(range(1, m), r):
            out.append(sum(reverse_components(D, flip).signs))
    return tuple(sorted(out))


def summarize(D: LinkDiagram) -> DiagramSummary:
    return DiagramSummary(
        c=D.n_crossings,
        writhe=sum(D.signs),
        writhes=_writhes(D),
        reduced=is_reduced(D),
        alternating=is_alternating_syntactic(D),
        connected=D.is_connected,
    )


def verify_tait_pair(D1: LinkDiagram, D2: LinkDiagram, oriented: bool = True) -> TaitReport:
    """Compare crossing number and writhe of two diagrams claimed to present one link.

    With ``oriented`` False the orientations of the two inputs are not assumed
    to correspond, so writhes are compared over all orientation classes.
    """
    summaries = []
    for label, D in (("first", D1), ("second", D2)):
        s = summarize(D)
        for predicate in ("connected", "reduced", "alternating"):
            if not getattr(s, predicate):
                raise PreconditionFailed(predicate, f"{label} diagram is not {predicate}")
        summaries.append(s)
    a, b = summaries
    writhe_ok = a.writhe == b.writhe if oriented else a.writhes == b.writhes
    return TaitReport(a, b, oriented, a.c == b.c, writhe_ok)


# -- special diagrams ----------------------------------------------------------

@dataclass(frozen=True)
class SpecialGenus:
    is_special: bool
    genus_identity_holds: bool
    sigma: int
    seifert_b1: int
    circles: int

    def to_json(self):
        return {
            "is_special": self.is_special,
            "genus_identity_holds": self.genus_identity_holds,
            "sigma": self.sigma,
            "seifert_b1": self.seifert_b1,
            "seifert_circles": self.circles,
        }


def special_genus_check(D: LinkDiagram) -> SpecialGenus:
    """Whether the Seifert circles bound the regions of one color, and |sigma| = c - s + 1."""
    if not D.is_connected:
        raise NotConnected("the genus check needs a connected diagram")
    if not is_alternating_syntactic(D):
        raise NotAlternating("the genus identity is stated for alternating diagrams")
    sc = seifert_circles(D)
    sigma = link_signature(D)
    return SpecialGenus(sc.is_special, abs(sigma) == sc.b1, sigma, sc.b1, sc.count)

