"""Diagram generators: braid closures, kinks, random diagrams and flype pairs.

Crossings are first built geometrically, as four endpoint labels listed
counterclockwise plus a flag saying which opposite pair is the under strand.
``_to_pd`` then orients every component by walking it and numbers the arcs
consecutively, which is the form the PD parser expects.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .diagram import LinkDiagram, is_alternating_syntactic, is_reduced, switch_crossings
from .errors import KnotLatticeError


@dataclass(frozen=True)
class _Crossing:
    ends: tuple  # four endpoint labels, counterclockwise
    under: int  # 0: ends[0]-ends[2] is the under strand; 1: ends[1]-ends[3]


def _to_pd(crossings, incoming=frozenset()):
    """Orient by traversal and renumber arcs along each component.

    A component's direction follows ``incoming`` (slots ``(i, k)`` where an
    edge is known to enter) when it touches one, else it is arbitrary.
    """
    slots = {}
    for i, x in enumerate(crossings):
        for k, label in enumerate(x.ends):
            slots.setdefault(label, []).append((i, k))
    if any(len(v) != 2 for v in slots.values()):
        raise ValueError("every edge label must have exactly two endpoints")

    def across(i, k):
        return i, (k + 2) % 4

    def partner(label, at):
        a, b = slots[label]
        return b if a == at else a

    # each directed edge: (label, slot where it ends)
    head = {}
    order = []
    for label in sorted(slots):
        if label in head:
            continue
        a, b = slots[label]
        at = a if a in incoming else b
        while True:
            head[label] = at
            order.append(label)
            nxt = crossings[at[0]].ends[across(*at)[1]]
            at = partner(nxt, across(*at))
            label = nxt
            if label in head:
                break
        order.append(None)
    number = {}
    for label in order:
        if label is not None:
            number[label] = len(number) + 1
    quads = []
    for i, x in enumerate(crossings):
        k0 = x.under
        if head[x.ends[k0]] != (i, k0):
            k0 += 2
        quads.append(tuple(number[x.ends[(k0 + t) % 4]] for t in range(4)))
    return quads


# -- braids --------------------------------------------------------------------

def braid_closure(word, strands=None) -> LinkDiagram:
    """Closure of a braid word of nonzero ints (``i`` is sigma_i, ``-i`` its inverse).

    Strands run upward; sigma_i is a positive crossing of strands i and i+1.
    """
    if not word:
        raise ValueError("empty braid word")
    n = strands or max(abs(g) for g in word) + 1
    current = list(range(n))
    fresh = n
    crossings = []
    for g in word:
        i = abs(g) - 1
        if not 0 <= i < n - 1:
            raise ValueError(f"generator {g} out of range for {n} strands")
        sw, se = current[i], current[i + 1]
        nw, ne = fresh, fresh + 1
        fresh += 2
        # counterclockwise from SW: SW, SE, NE, NW; the over strand runs SW -> NE when positive
        crossings.append(_Crossing((sw, se, ne, nw), 1 if g > 0 else 0))
        current[i], current[i + 1] = nw, ne
    rename = {}
    for j, top in enumerate(current):
        if top == j:
            raise ValueError(f"strand {j + 1} meets no crossing")
        rename[top] = j
    crossings = [_Crossing(tuple(rename.get(e, e) for e in x.ends), x.under) for x in crossings]
    incoming = {(i, k) for i in range(len(crossings)) for k in (0, 1)}
    return LinkDiagram(_to_pd(crossings, incoming))


# -- local modifications -----------------------------------------------------

def add_kink(D: LinkDiagram, arc: int, kind: int = 0) -> LinkDiagram:
    """Insert a one-crossing curl on ``arc``; ``kind`` in 0..3 picks sign and side."""
    top = max(D.arcs)
    a1, loop, a2 = arc, top + 1, top + 2
    quads = [list(q) for q in D.pd]
    hi, hk = D.head(arc)
    quads[hi][hk] = a2
    kinks = (
        (a1, loop, loop, a2),
        (a1, a2, loop, loop),
        (loop, a1, a2, loop),
        (loop, loop, a2, a1),
    )
    quads.append(kinks[kind % 4])
    # old and new crossings alike keep the under strand at slots 0 and 2
    crossings = [_Crossing(tuple(q), 0) for q in quads]
    incoming = {(i, 0) for i in range(len(quads))}
    incoming |= {(i, 1 if fwd else 3) for i, fwd in enumerate(D.over_forward)}
    return LinkDiagram(_to_pd(crossings, incoming))


# -- tangles -----------------------------------------------------------------

@dataclass(frozen=True)
class Tangle:
    """A 4-ended tangle: crossings plus the edge labels at NW, NE, SW, SE."""

    crossings: tuple
    nw: int
    ne: int
    sw: int
    se: int


_labels = itertools.count(1)


def _fresh():
    return next(_labels)


def crossing_tangle(positive_slope: bool) -> Tangle:
    """One crossing; the strand SW-NE is over when ``positive_slope``."""
    sw, se, ne, nw = (_fresh() for _ in range(4))
    return Tangle((_Crossing((sw, se, ne, nw), 1 if positive_slope else 0),), nw, ne, sw, se)


def _rename(T: Tangle, mapping) -> Tangle:
    xs = tuple(_Crossing(tuple(mapping.get(e, e) for e in x.ends), x.under) for x in T.crossings)
    return Tangle(xs, *(mapping.get(e, e) for e in (T.nw, T.ne, T.sw, T.se)))


def add(T: Tangle, R: Tangle) -> Tangle:
    """Horizontal sum: T's east ends meet R's west ends."""
    R = _rename(R, {R.nw: T.ne, R.sw: T.se})
    return Tangle(T.crossings + R.crossings, T.nw, R.ne, T.sw, R.se)


def rotate(T: Tangle) -> Tangle:
    """Quarter turn in the plane (NW -> NE -> SE -> SW)."""
    return Tangle(T.crossings, T.sw, T.nw, T.se, T.ne)


def flip(T: Tangle) -> Tangle:
    """Half turn about the horizontal axis: mirror top-bottom and exchange over with under."""
    xs = tuple(_Crossing((x.ends[0], x.ends[3], x.ends[2], x.ends[1]), 1 - x.under)
               for x in T.crossings)
    return Tangle(xs, T.sw, T.se, T.nw, T.ne)


def numerator(T: Tangle) -> LinkDiagram:
    T = _rename(T, {T.ne: T.nw, T.se: T.sw})
    return LinkDiagram(_to_pd(list(T.crossings)))


def twist(n: int) -> Tangle:
    """Horizontal twist of |n| crossings, alternating as a chain."""
    T = crossing_tangle(n > 0)
    for _ in range(abs(n) - 1):
        T = add(T, crossing_tangle(n > 0))
    return T


def vertical_twist(n: int) -> Tangle:
    return rotate(twist(-n))


def rational_tangle(terms, sign: int = 1) -> Tangle:
    """Continued-fraction tangle: twist, quarter turn, twist, ... with alternating signs.

    Positive ``terms`` and the alternating signs keep the result alternating.
    """
    T = twist(terms[0] * sign)
    for j, a in enumerate(terms[1:], 1):
        T = add(rotate(T), twist(a * sign * (-1) ** j))
    return T


def flype_pair(T: Tangle, R: Tangle, positive: bool):
    """N([c] + T + R) and N(flip(T) + [c] + R): the single crossing moved across T."""
    c1 = crossing_tangle(positive)
    c2 = crossing_tangle(positive)
    return numerator(add(add(c1, T), R)), numerator(add(add(flip(T), c2), R))


# -- random diagrams ---------------------------------------------------------

def random_braid_word(rng: random.Random, strands: int, length: int, alternating=False):
    """Random word using every generator; ``alternating`` signs sigma_i by the parity of i."""
    flip_all = rng.choice((1, -1))
    while True:
        gens = [rng.randint(1, strands - 1) for _ in range(length)]
        if set(gens) != set(range(1, strands)):
            continue
        if alternating:
            return [g * flip_all * (1 if g % 2 else -1) for g in gens]
        return [g * rng.choice((1, -1)) for g in gens]


def random_diagram(rng: random.Random, max_crossings: int = 8) -> LinkDiagram:
    """A connected valid diagram: a random braid closure, mutated.

    Half the braids are alternating before mutation.  Mutations switch a few
    random crossings and insert kinks while the crossing budget allows.
    """
    while True:
        strands = rng.randint(2, 4)
        length = rng.randint(strands - 1, max(strands - 1, max_crossings - 1))
        try:
            D = braid_closure(random_braid_word(rng, strands, length, rng.random() < 0.5))
            switches = rng.sample(range(D.n_crossings), rng.randint(0, min(2, D.n_crossings)))
            D = switch_crossings(D, switches)
            while D.n_crossings < max_crossings and rng.random() < 0.25:
                D = add_kink(D, rng.choice(D.arcs), rng.randrange(4))
        except (KnotLatticeError, ValueError):
            continue
        if D.is_connected and D.n_crossings <= max_crossings:
            return D


def random_tangle(rng: random.Random, size: int) -> Tangle:
    T = crossing_tangle(rng.random() < 0.5)
    for _ in range(size - 1):
        op = rng.randrange(3)
        piece = crossing_tangle(rng.random() < 0.5)
        if op == 0:
            T = add(T, piece)
        elif op == 1:
            T = add(piece, T)
        else:
            T = rotate(T)
            T = add(T, piece)
    return T


def is_reduced_alternating(D: LinkDiagram) -> bool:
    return D.is_connected and is_reduced(D) and is_alternating_syntactic(D)
