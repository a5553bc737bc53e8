"""Oriented link diagrams in planar-diagram (PD) notation.

A crossing ``X[a,b,c,d]`` lists the four arcs around it counterclockwise,
starting from the incoming under-strand, so the under strand runs a -> c and
the over strand occupies b and d.  Arc numbering orients every component:
following a component, arc ids increase by one, wrapping around.

Positions around a crossing are called *slots*; slot ``4*i + k`` is
quadrant ``k`` of crossing ``i``.  The *corner* ``(i, k)`` is the region
between quadrants ``k`` and ``k+1``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
from typing import NamedTuple, Sequence

from .errors import (
    ArcMultiplicity,
    ImproperColoring,
    InconsistentOrientation,
    InternalConventionError,
    MalformedGauss,
    MalformedPd,
    NoAllBColoring,
    NonPlanar,
    NotConnected,
    UnrealizableCode,
    UnsignedCode,
)


def _opp(s):
    return (s & ~3) | ((s + 2) & 3)


def _ccw(s):
    return (s & ~3) | ((s + 1) & 3)


def _cw(s):
    return (s & ~3) | ((s + 3) & 3)


class Color(str, Enum):
    BLACK = "black"
    WHITE = "white"

    def other(self):
        return Color.WHITE if self is Color.BLACK else Color.BLACK


@dataclass(frozen=True)
class Crossing:
    id: int
    quadrants: tuple

    @property
    def under(self):
        return self.quadrants[0], self.quadrants[2]

    @property
    def over(self):
        return self.quadrants[1], self.quadrants[3]


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple  # ((crossing, quadrant), ...) in traversal order

    def __len__(self):
        return len(self.boundary)


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


class LinkDiagram:
    """A validated, oriented, planar link diagram.  Immutable."""

    __slots__ = (
        "_quads", "_arc_at", "_other", "_head", "_components", "_arc_comp",
        "_over_forward", "_faces", "_corner_face", "_pieces", "_crossing_piece",
    )

    def __init__(self, pd: Sequence[Sequence[int]]):
        quads = tuple(tuple(int(v) for v in q) for q in pd)
        if not quads:
            raise MalformedPd("empty diagram: crossingless diagrams are not supported")
        for q in quads:
            if len(q) != 4:
                raise MalformedPd(f"crossing {list(q)} does not have four arcs")
            if min(q) < 1:
                raise MalformedPd(f"crossing {list(q)} has a non-positive arc id")
        n = len(quads)
        arc_at = tuple(quads[s >> 2][s & 3] for s in range(4 * n))

        occurrences = {}
        for s, arc in enumerate(arc_at):
            occurrences.setdefault(arc, []).append(s)
        bad = sorted(a for a, occ in occurrences.items() if len(occ) != 2)
        if bad:
            raise ArcMultiplicity(f"arcs {bad} do not appear exactly twice")
        other = [0] * (4 * n)
        for s, t in occurrences.values():
            other[s], other[t] = t, s
        other = tuple(other)

        strands = _DSU(occurrences)
        for s in range(4 * n):
            strands.union(arc_at[s], arc_at[_opp(s)])
        members = {}
        for arc in sorted(occurrences):
            members.setdefault(strands.find(arc), []).append(arc)
        comp_of = {a: strands.find(a) for a in occurrences}

        head = self._orient(n, arc_at, other, occurrences, members, comp_of)

        components = []
        for root in sorted(members, key=lambda r: members[r][0]):
            ids = members[root]
            walk = [ids[0]]
            while len(walk) < len(ids):
                walk.append(arc_at[_opp(head[walk[-1]])])
            if walk != ids or arc_at[_opp(head[walk[-1]])] != ids[0]:
                raise InconsistentOrientation(
                    f"arc numbering of component {ids} is not a consistent orientation")
            components.append(tuple(walk))
        arc_comp = {a: k for k, comp in enumerate(components) for a in comp}

        over_forward = []
        for i in range(n):
            b_in = head[arc_at[4 * i + 1]] == 4 * i + 1
            d_in = head[arc_at[4 * i + 3]] == 4 * i + 3
            if b_in == d_in:
                raise InconsistentOrientation(f"over strand at crossing {i} is not oriented through it")
            over_forward.append(b_in)

        faces, corner_face = _trace_faces(n, other)

        pieces = _DSU(range(n))
        for s in range(4 * n):
            pieces.union(s >> 2, other[s] >> 2)
        crossing_piece = [pieces.find(i) for i in range(n)]
        roots = sorted(set(crossing_piece))
        crossing_piece = tuple(roots.index(r) for r in crossing_piece)
        piece_faces = [0] * len(roots)
        for f in faces:
            piece_faces[crossing_piece[f[0] >> 2]] += 1
        grouped = tuple(tuple(i for i in range(n) if crossing_piece[i] == p) for p in range(len(roots)))
        for p, members_p in enumerate(grouped):
            v = len(members_p)
            if v - 2 * v + piece_faces[p] != 2:
                raise NonPlanar(
                    f"piece with {v} crossings has {piece_faces[p]} faces; "
                    "the rotation system is not a sphere embedding")

        self._quads = quads
        self._arc_at = arc_at
        self._other = other
        self._head = head
        self._components = tuple(components)
        self._arc_comp = arc_comp
        self._over_forward = tuple(over_forward)
        self._faces = tuple(
            Face(k, tuple((c >> 2, c & 3) for c in f)) for k, f in enumerate(faces))
        self._corner_face = corner_face
        self._pieces = grouped
        self._crossing_piece = crossing_piece

    @staticmethod
    def _orient(n, arc_at, other, occurrences, members, comp_of):
        head = {}
        stack = []

        def assign(arc, h):
            if arc in head:
                if head[arc] != h:
                    raise InconsistentOrientation(f"arc {arc} would need two heads")
                return
            head[arc] = h
            stack.append(arc)

        def propagate():
            while stack:
                x = stack.pop()
                h = head[x]
                t = other[h]
                assign(arc_at[_opp(h)], other[_opp(h)])
                assign(arc_at[_opp(t)], _opp(t))

        for i in range(n):
            assign(arc_at[4 * i], 4 * i)
            assign(arc_at[4 * i + 2], other[4 * i + 2])
        propagate()

        # components that pass only over: use the numbering to pick a direction
        for arc in sorted(occurrences):
            if arc in head:
                continue
            ids = members[comp_of[arc]]
            succ = ids[(ids.index(arc) + 1) % len(ids)]
            s1, s2 = occurrences[arc]
            ok = [h for h in (s1, s2) if arc_at[_opp(h)] == succ]
            assign(arc, ok[0] if len(ok) == 1 else s2)
            propagate()
        return head

    # -- basic accessors -------------------------------------------------

    @property
    def pd(self):
        return self._quads

    @property
    def crossings(self):
        return tuple(Crossing(i, q) for i, q in enumerate(self._quads))

    @property
    def n_crossings(self):
        return len(self._quads)

    @property
    def arcs(self):
        return tuple(sorted(self._arc_comp))

    @property
    def components(self):
        """Arc ids of each component in traversal order."""
        return self._components

    def component_of(self, arc):
        return self._arc_comp[arc]

    @property
    def signs(self):
        # over strand quadrant 3 -> 1 is positive
        return tuple(-1 if fwd else 1 for fwd in self._over_forward)

    @property
    def over_forward(self):
        """Per crossing, True when the over strand runs from quadrant 1 to 3."""
        return self._over_forward

    def arc_at(self, crossing, quadrant):
        return self._arc_at[4 * crossing + quadrant]

    def head(self, arc):
        """(crossing, quadrant) where ``arc`` ends."""
        h = self._head[arc]
        return h >> 2, h & 3

    def tail(self, arc):
        t = self._other[self._head[arc]]
        return t >> 2, t & 3

    def next_arc(self, arc):
        return self._arc_at[_opp(self._head[arc])]

    @property
    def faces(self):
        return self._faces

    def corner_face(self, crossing, quadrant):
        return self._corner_face[4 * crossing + quadrant]

    def arc_sides(self, arc):
        """Face ids to the (left, right) of ``arc`` when walked along its orientation."""
        h = self._head[arc]
        return self._corner_face[_cw(h)], self._corner_face[h]

    @property
    def pieces(self):
        """Crossing ids of each connected piece of the underlying 4-valent graph."""
        return self._pieces

    def piece_of(self, crossing):
        return self._crossing_piece[crossing]

    @property
    def is_connected(self):
        return len(self._pieces) == 1

    def __eq__(self, other):
        return isinstance(other, LinkDiagram) and self._quads == other._quads

    def __hash__(self):
        return hash(self._quads)

    def __repr__(self):
        return f"LinkDiagram({emit_pd(self)!r})"


def _trace_faces(n, other):
    corner_face = [-1] * (4 * n)
    faces = []
    for start in range(4 * n):
        if corner_face[start] >= 0:
            continue
        face = []
        c = start
        while corner_face[c] < 0:
            corner_face[c] = len(faces)
            face.append(c)
            c = other[_ccw(c)]
        faces.append(tuple(face))
    return faces, tuple(corner_face)


def faces(D: LinkDiagram):
    return D.faces


# -- parsing and emission ----------------------------------------------

_PD_TERM = re.compile(r"\s*X\s*\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*,?")


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``X[a,b,c,d] ...`` or the JSON form ``{"pd": [[a,b,c,d], ...]}``."""
    if not isinstance(text, str):
        raise MalformedPd("PD input must be text")
    body = text.strip()
    if body.startswith("{") or body.startswith("["):
        try:
            data = json.loads(body)
        except json.JSONDecodeError as exc:
            raise MalformedPd(f"invalid JSON: {exc}") from None
        if isinstance(data, dict):
            data = data.get("pd")
        if not isinstance(data, list) or not all(
                isinstance(q, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in q)
                for q in data):
            raise MalformedPd('JSON form must be {"pd": [[a,b,c,d], ...]} with integer arc ids')
        return LinkDiagram(data)
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]
    quads = []
    pos = 0
    while pos < len(body):
        m = _PD_TERM.match(body, pos)
        if not m:
            raise MalformedPd(f"unexpected text at offset {pos}: {body[pos:pos + 20]!r}")
        quads.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    return LinkDiagram(quads)


def emit_pd(D: LinkDiagram) -> str:
    return " ".join("X[%d,%d,%d,%d]" % q for q in D.pd)


def emit_pd_json(D: LinkDiagram) -> str:
    return json.dumps({"pd": [list(q) for q in D.pd]})


_GAUSS_TOKEN = re.compile(r"([OU])(\d+)([+-]?)[\s-]*")


def parse_gauss_signed(text: str) -> LinkDiagram:
    """Parse a signed Gauss code such as ``O1-U2-O3-U1-O2-U3-``.

    Each token is O (over) or U (under), a crossing label, and the crossing
    sign.  Separators are whitespace or ``-``; ``;`` separates components.
    """
    if not isinstance(text, str) or not text.strip():
        raise MalformedGauss("empty Gauss code")
    components = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise MalformedGauss("empty component")
        tokens = []
        pos = 0
        while pos < len(chunk):
            m = _GAUSS_TOKEN.match(chunk, pos)
            if not m:
                raise MalformedGauss(f"unexpected text {chunk[pos:pos + 10]!r}")
            tokens.append(m.groups())
            pos = m.end()
        components.append(tokens)

    if any(not sign for comp in components for _, _, sign in comp):
        raise UnsignedCode("every passage needs a crossing sign (+ or -)")

    passages = {}
    arc = 1
    for comp in components:
        m = len(comp)
        for j, (kind, label, sign) in enumerate(comp):
            key = int(label)
            entry = passages.setdefault(key, {})
            if kind in entry:
                raise MalformedGauss(f"crossing {key} has two {kind} passages")
            entry[kind] = (arc + (j - 1) % m, arc + j, sign)
        arc += m

    quads = []
    for key in sorted(passages):
        entry = passages[key]
        if set(entry) != {"O", "U"}:
            raise MalformedGauss(f"crossing {key} needs one O and one U passage")
        u_in, u_out, su = entry["U"]
        o_in, o_out, so = entry["O"]
        if su != so:
            raise MalformedGauss(f"crossing {key} has inconsistent signs")
        if su == "+":
            quads.append((u_in, o_out, u_out, o_in))
        else:
            quads.append((u_in, o_in, u_out, o_out))
    try:
        return LinkDiagram(quads)
    except NonPlanar as exc:
        raise UnrealizableCode(str(exc)) from None


def emit_gauss(D: LinkDiagram) -> str:
    signs = D.signs
    comps = []
    for comp in D.components:
        tokens = []
        for arc in comp:
            i, k = D.head(arc)
            tokens.append("%s%d%s" % ("U" if k == 0 else "O", i + 1, "+" if signs[i] > 0 else "-"))
        comps.append(" ".join(tokens))
    return "; ".join(comps)


# -- relabelling and structural transforms ------------------------------

def _relabel(D, walks, reversed_comps=frozenset()):
    """Renumber arcs consecutively along ``walks`` (one walk per component)."""
    label = {}
    nxt = 1
    for walk in walks:
        for arc in walk:
            label[arc] = nxt
            nxt += 1
    quads = []
    for i, q in enumerate(D.pd):
        q = tuple(label[a] for a in q)
        if D.component_of(D.arc_at(i, 0)) in reversed_comps:
            q = q[2:] + q[:2]
        quads.append(q)
    return quads


def canonical_form(D: LinkDiagram) -> tuple:
    """Smallest sorted PD over component orders and starting arcs."""
    best = None
    comps = D.components
    for order in permutations(range(len(comps))):
        for starts in product(*(range(len(comps[k])) for k in order)):
            walks = [comps[k][s:] + comps[k][:s] for k, s in zip(order, starts)]
            key = tuple(sorted(_relabel(D, walks)))
            if best is None or key < best:
                best = key
    return best


def is_isomorphic(D1: LinkDiagram, D2: LinkDiagram) -> bool:
    return (D1.n_crossings == D2.n_crossings
            and len(D1.components) == len(D2.components)
            and canonical_form(D1) == canonical_form(D2))


def switch_crossings(D: LinkDiagram, indices) -> LinkDiagram:
    """Exchange over and under at the given crossings."""
    chosen = set(indices)
    quads = []
    for i, (a, b, c, d) in enumerate(D.pd):
        if i in chosen:
            quads.append((b, c, d, a) if D.over_forward[i] else (d, a, b, c))
        else:
            quads.append((a, b, c, d))
    return LinkDiagram(quads)


def mirror(D: LinkDiagram) -> LinkDiagram:
    return switch_crossings(D, range(D.n_crossings))


def reverse_components(D: LinkDiagram, which) -> LinkDiagram:
    """Reverse the orientation of the listed components (by index)."""
    which = frozenset(which)
    walks = []
    for k, comp in enumerate(D.components):
        walks.append(comp[:1] + comp[:0:-1] if k in which else comp)
    return LinkDiagram(_relabel(D, walks, which))


def reverse(D: LinkDiagram) -> LinkDiagram:
    return reverse_components(D, range(len(D.components)))


def split_pieces(D: LinkDiagram):
    """One diagram per connected piece, arcs renumbered along each component."""
    out = []
    for members in D.pieces:
        comps = sorted({D.component_of(D.arc_at(i, k)) for i in members for k in range(4)})
        label = {}
        for k in comps:
            for arc in D.components[k]:
                label[arc] = len(label) + 1
        out.append(LinkDiagram([tuple(label[a] for a in D.pd[i]) for i in members]))
    return tuple(out)


# -- colorings -----------------------------------------------------------

@dataclass(frozen=True)
class Coloring:
    colors: tuple  # Color per face id

    def __getitem__(self, face_id):
        return self.colors[face_id]

    def swapped(self):
        return Coloring(tuple(c.other() for c in self.colors))

    def faces_of(self, color):
        return tuple(f for f, c in enumerate(self.colors) if c is color)


def _two_color(D, seeds):
    """Proper 2-coloring of the faces with each ``seeds`` face White."""
    nbrs = [[] for _ in D.faces]
    for i in range(D.n_crossings):
        for k in range(4):
            f, g = D.corner_face(i, k), D.corner_face(i, (k + 1) % 4)
            nbrs[f].append(g)
            nbrs[g].append(f)
    colors = [None] * len(D.faces)
    for seed in seeds:
        if colors[seed] is not None:
            continue
        colors[seed] = Color.WHITE
        stack = [seed]
        while stack:
            f = stack.pop()
            for g in nbrs[f]:
                if colors[g] is None:
                    colors[g] = colors[f].other()
                    stack.append(g)
                elif colors[g] is colors[f]:
                    raise InternalConventionError("faces are not 2-colorable")
    return Coloring(tuple(colors))


def outer_face(D: LinkDiagram, piece: int = 0) -> int:
    """Face treated as unbounded in ``piece``: the one with most corners."""
    best = None
    for f in D.faces:
        if D.piece_of(f.boundary[0][0]) != piece:
            continue
        if best is None or len(f) > len(D.faces[best]):
            best = f.id
    return best


def default_coloring(D: LinkDiagram) -> Coloring:
    return _two_color(D, [outer_face(D, p) for p in range(len(D.pieces))])


def checkerboard_colorings(D: LinkDiagram):
    if not D.is_connected:
        raise NotConnected("diagram has more than one piece")
    col = default_coloring(D)
    return col, col.swapped()


def white_odd(D: LinkDiagram, col: Coloring):
    """Per crossing: True when corners 1 and 3 are White, i.e. the crossing has type b."""
    if len(col.colors) != len(D.faces):
        raise ImproperColoring("coloring does not match the diagram's faces")
    out = []
    for i in range(D.n_crossings):
        c = [col[D.corner_face(i, k)] for k in range(4)]
        if c[0] is not c[2] or c[1] is not c[3] or c[0] is c[1]:
            raise ImproperColoring(f"coloring is not a checkerboard at crossing {i}")
        out.append(c[1] is Color.WHITE)
    return tuple(out)


def type_b_coloring(D: LinkDiagram) -> Coloring:
    for col in checkerboard_colorings(D):
        if all(white_odd(D, col)):
            return col
    raise NoAllBColoring("no checkerboard coloring makes every crossing type b")


# -- classification ------------------------------------------------------

class CrossingClass(NamedTuple):
    sign: int
    color_type: str  # "a" or "b"
    orientation_type: str  # "I" or "II"


@dataclass(frozen=True)
class DiagramCounts:
    a: int
    b: int
    p: int
    n: int
    c: int
    writhe: int
    lk_total: int
    pairwise_lk: tuple  # (((i, j), lk), ...) for i < j
    aI: int
    aII: int
    bI: int
    bII: int


def pairwise_linking(D: LinkDiagram):
    twice = {}
    for i, s in enumerate(D.signs):
        ku = D.component_of(D.arc_at(i, 0))
        ko = D.component_of(D.arc_at(i, 1))
        if ku != ko:
            key = (min(ku, ko), max(ku, ko))
            twice[key] = twice.get(key, 0) + s
    m = len(D.components)
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            t = twice.get((i, j), 0)
            if t % 2:
                raise InternalConventionError("odd number of inter-component crossings")
            out.append(((i, j), t // 2))
    return tuple(out)


def classify(D: LinkDiagram, col: Coloring):
    """Per-crossing classes and the diagram counts under ``col``.

    The oriented smoothing of a positive crossing joins corners 1 and 3, of
    a negative one corners 0 and 2; the crossing is type II when the joined
    corners are Black.
    """
    b_flags = white_odd(D, col)
    classes = []
    for s, is_b in zip(D.signs, b_flags):
        joined_white = (s > 0) == is_b
        classes.append(CrossingClass(s, "b" if is_b else "a", "I" if joined_white else "II"))
    tally = {(ct, ot): 0 for ct in "ab" for ot in ("I", "II")}
    for cl in classes:
        tally[cl.color_type, cl.orientation_type] += 1
    p = sum(1 for cl in classes if cl.sign > 0)
    n = len(classes) - p
    b = sum(b_flags)
    plk = pairwise_linking(D)
    counts = DiagramCounts(
        a=len(classes) - b, b=b, p=p, n=n, c=len(classes), writhe=p - n,
        lk_total=sum(v for _, v in plk), pairwise_lk=plk,
        aI=tally["a", "I"], aII=tally["a", "II"], bI=tally["b", "I"], bII=tally["b", "II"],
    )
    return tuple(classes), counts


# -- predicates ----------------------------------------------------------

class DiagramPredicates(NamedTuple):
    is_connected: bool
    is_reduced: bool
    is_alternating_syntactic: bool


def is_reduced(D: LinkDiagram) -> bool:
    return all(
        len({D.corner_face(i, k) for k in range(4)}) == 4 for i in range(D.n_crossings))


def is_alternating_syntactic(D: LinkDiagram) -> bool:
    for comp in D.components:
        kinds = [D.head(a)[1] == 0 for a in comp]
        if any(kinds[j] == kinds[j - 1] for j in range(len(kinds))):
            return False
    return True


def diagram_predicates(D: LinkDiagram) -> DiagramPredicates:
    return DiagramPredicates(D.is_connected, is_reduced(D), is_alternating_syntactic(D))


# -- Seifert circles -----------------------------------------------------

@dataclass(frozen=True)
class SeifertCircles:
    count: int
    circles: tuple  # arc ids of each circle in traversal order
    b1: int
    is_special: bool
    special_color: object  # Color under default_coloring, or None


def smoothing_successor(D: LinkDiagram, arc: int) -> int:
    """The arc that follows ``arc`` after the oriented smoothing of its head crossing."""
    i, k = D.head(arc)
    if k == 0:
        out = 3 if D.over_forward[i] else 1
    else:
        out = 2
    return D.arc_at(i, out)


def face_arcs(D: LinkDiagram, face_id: int) -> frozenset:
    return frozenset(D.arc_at(i, (k + 1) % 4) for i, k in D.faces[face_id].boundary)


def seifert_circles(D: LinkDiagram) -> SeifertCircles:
    seen = set()
    circles = []
    for arc in D.arcs:
        if arc in seen:
            continue
        circle = []
        x = arc
        while x not in seen:
            seen.add(x)
            circle.append(x)
            x = smoothing_successor(D, x)
        circles.append(tuple(circle))
    s = len(circles)
    b1 = D.n_crossings - s + len(D.pieces)

    col = default_coloring(D)
    circle_sets = {frozenset(c) for c in circles}
    matches = []
    for color in (Color.WHITE, Color.BLACK):
        matches.append({face_arcs(D, f) for f in col.faces_of(color)} <= circle_sets)
    by_piece = []
    for p in range(len(D.pieces)):
        ok = False
        for color in (Color.WHITE, Color.BLACK):
            sets = {face_arcs(D, f) for f in col.faces_of(color)
                    if D.piece_of(D.faces[f].boundary[0][0]) == p}
            ok = ok or sets <= circle_sets
        by_piece.append(ok)
    special_color = None
    if D.is_connected:
        special_color = next(
            (c for c, m in zip((Color.WHITE, Color.BLACK), matches) if m), None)
    return SeifertCircles(s, tuple(circles), b1, all(by_piece), special_color)
