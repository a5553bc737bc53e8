"""Flow lattices of weighted plane multigraphs and exact quadratic-form tools."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import (
    BoundExceeded,
    InternalConventionError,
    NotACycle,
    NotConnected,
    NotInLattice,
    NotPositiveDefinite,
)
from .taitgraph import PlaneMultigraph

DEFAULT_NORM_BOUND = 64


def norm_bound(override=None) -> int:
    """Enumeration cap: explicit override, else ``KNOTLATTICE_NORM_BOUND``, else 64."""
    if override is not None:
        return int(override)
    env = os.environ.get("KNOTLATTICE_NORM_BOUND")
    return int(env) if env else DEFAULT_NORM_BOUND


# -- exact forms ------------------------------------------------------------

class SignatureTriple(NamedTuple):
    pos: int
    neg: int
    null: int

    @property
    def sigma(self):
        return self.pos - self.neg

    def to_json(self):
        return {"pos": self.pos, "neg": self.neg, "null": self.null}


class Definiteness(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INDEFINITE = "indefinite"
    DEGENERATE = "degenerate"
    RANK_ZERO = "definite-rank-0"

    @property
    def is_definite(self):
        return self in (Definiteness.POSITIVE, Definiteness.NEGATIVE, Definiteness.RANK_ZERO)


def _check_symmetric(M):
    rows = [list(r) for r in M]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix is not symmetric")
    return rows


def signature(M) -> SignatureTriple:
    """Inertia by symmetric Gaussian elimination over the rationals.

    A nonzero diagonal entry is pivoted directly.  When the whole diagonal
    vanishes but some entry does not, the 2x2 hyperbolic block on it is
    eliminated at once and contributes one positive and one negative square.
    """
    A = [[Fraction(x) for x in row] for row in _check_symmetric(M)]
    pos = neg = 0
    while A:
        n = len(A)
        piv = next((i for i in range(n) if A[i][i] != 0), None)
        if piv is not None:
            p = A[piv][piv]
            if p > 0:
                pos += 1
            else:
                neg += 1
            keep = [r for r in range(n) if r != piv]
            A = [[A[r][c] - A[r][piv] * A[piv][c] / p for c in keep] for r in keep]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if A[i][j] != 0), None)
        if pair is None:
            return SignatureTriple(pos, neg, n)
        i, j = pair
        a = A[i][j]
        pos += 1
        neg += 1
        keep = [r for r in range(n) if r not in pair]
        A = [[A[r][c] - (A[r][i] * A[j][c] + A[r][j] * A[i][c]) / a for c in keep] for r in keep]
    return SignatureTriple(pos, neg, 0)


def definiteness(M) -> Definiteness:
    s = signature(M)
    if s.pos + s.neg + s.null == 0:
        return Definiteness.RANK_ZERO
    if s.null:
        return Definiteness.DEGENERATE
    if s.neg == 0:
        return Definiteness.POSITIVE
    if s.pos == 0:
        return Definiteness.NEGATIVE
    return Definiteness.INDEFINITE


def determinant(M) -> int:
    """Exact determinant (Bareiss fraction-free elimination)."""
    A = [[int(x) for x in row] for row in _check_symmetric(M)]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[-1][-1] if n else 1


def negated(M):
    return tuple(tuple(-x for x in row) for row in M)


# -- flow lattices ------------------------------------------------------------

@dataclass(frozen=True)
class FlowLattice:
    graph: PlaneMultigraph
    basis: tuple  # edge vectors
    chords: tuple  # non-tree edge carrying coordinate k of the basis
    gram: tuple
    _definiteness: Definiteness = field(default=None, repr=False, compare=False)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def definiteness(self):
        if self._definiteness is None:
            object.__setattr__(self, "_definiteness", definiteness(self.gram))
        return self._definiteness

    def pairing(self, x, y):
        return sum(w * a * b for w, a, b in zip(self.graph.weights, x, y))

    def coords(self, vec):
        """Basis coordinates of an edge vector in the lattice."""
        vec = tuple(int(a) for a in vec)
        if len(vec) != self.graph.n_edges:
            raise NotInLattice("edge vector has the wrong length")
        if any(self.graph.boundary(vec)):
            raise NotInLattice("edge vector is not a flow (nonzero boundary)")
        coords = tuple(vec[e] for e in self.chords)
        if self.to_edges(coords) != vec:
            raise InternalConventionError("fundamental-cycle coordinates do not reconstruct the flow")
        return coords

    def to_edges(self, coords):
        out = [0] * self.graph.n_edges
        for c, b in zip(coords, self.basis):
            if c:
                for e, x in enumerate(b):
                    out[e] += c * x
        return tuple(out)

    def basis_matrix(self):
        return np.array(self.basis, dtype=np.int64).reshape(self.rank, self.graph.n_edges)


def spanning_tree(G: PlaneMultigraph):
    """BFS tree from vertex 0 scanning edges in index order: (tree edges, parent edge per vertex)."""
    incident = [[] for _ in range(G.n_vertices)]
    for e, edge in enumerate(G.edges):
        incident[edge.tail].append(e)
        if not edge.is_loop:
            incident[edge.head].append(e)
    parent = [None] * G.n_vertices
    seen = [False] * G.n_vertices
    tree = []
    if G.n_vertices:
        seen[0] = True
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for e in incident[v]:
                edge = G.edges[e]
                u = edge.head if edge.tail == v else edge.tail
                if not seen[u]:
                    seen[u] = True
                    parent[u] = e
                    tree.append(e)
                    queue.append(u)
    if not all(seen):
        raise NotConnected("flow lattices here need a connected graph")
    return tuple(tree), tuple(parent)


def flow_lattice(G: PlaneMultigraph, weights=None) -> FlowLattice:
    """Fundamental-cycle basis of ker(boundary) with Gram sum_e w_e x_e y_e."""
    if weights is not None:
        G = G.with_weights(weights)
    tree, parent = spanning_tree(G)
    m = G.n_edges
    # root-to-vertex tree paths as edge vectors
    order = [0]
    children = {}
    for v, e in enumerate(parent):
        if e is not None:
            edge = G.edges[e]
            children.setdefault(edge.tail if edge.head == v else edge.head, []).append(v)
    paths = {0: [0] * m} if G.n_vertices else {}
    while order:
        v = order.pop()
        for u in children.get(v, ()):
            e = parent[u]
            p = list(paths[v])
            p[e] += 1 if G.edges[e].tail == v else -1
            paths[u] = p
            order.append(u)
    tree_set = set(tree)
    chords = tuple(e for e in range(m) if e not in tree_set)
    basis = []
    for e in chords:
        edge = G.edges[e]
        vec = [a - b for a, b in zip(paths[edge.tail], paths[edge.head])]
        vec[e] += 1
        basis.append(tuple(vec))
    w = G.weights
    gram = tuple(
        tuple(sum(w[e] * x[e] * y[e] for e in range(m)) for y in basis) for x in basis)
    return FlowLattice(G, tuple(basis), chords, gram)


# -- enumeration ---------------------------------------------------------------

def _gram_of(F):
    return F.gram if isinstance(F, FlowLattice) else tuple(tuple(r) for r in F)


def short_vectors(F, bound: int, cap=None):
    """All nonzero coordinate vectors with norm <= bound, as an (k, n) int array."""
    cap = norm_bound(cap)
    if bound > cap:
        raise BoundExceeded(f"norm bound {bound} exceeds the cap {cap}")
    gram = _gram_of(F)
    kind = F.definiteness if isinstance(F, FlowLattice) else definiteness(gram)
    if kind not in (Definiteness.POSITIVE, Definiteness.RANK_ZERO):
        raise NotPositiveDefinite("enumeration needs a positive definite form")
    vecs = kernels.short_vectors(np.array(gram, dtype=np.int64).reshape(len(gram), len(gram)), int(bound))
    if len(vecs):
        vecs = vecs[np.lexsort(vecs.T[::-1])]
    return vecs


def _quad(gram, x):
    return sum(gram[i][j] * x[i] * x[j] for i in range(len(x)) for j in range(len(x)))


def _decide(F, v, irreducible, cap):
    if F.definiteness not in (Definiteness.POSITIVE, Definiteness.RANK_ZERO):
        raise NotPositiveDefinite("irreducibility is defined for positive definite lattices")
    x = F.coords(v)
    nv = _quad(F.gram, x)
    limit = norm_bound(cap)
    if nv > limit:
        raise BoundExceeded(f"v.v = {nv} exceeds the norm cap {limit}")
    if not any(x):
        return not irreducible
    gram = np.array(F.gram, dtype=np.int64)
    return kernels.find_violator(gram, np.array(x, dtype=np.int64), irreducible) is None


def is_irreducible(F: FlowLattice, v, cap=None) -> bool:
    """v != 0 and v.x < x.x for every lattice x outside {0, v}."""
    return _decide(F, v, True, cap)


def is_simple(F: FlowLattice, v, cap=None) -> bool:
    """v.x <= x.x for every lattice x."""
    return _decide(F, v, False, cap)


# -- combinatorial characterizations -------------------------------------------

def _degrees(G, v):
    indeg = [0] * G.n_vertices
    outdeg = [0] * G.n_vertices
    for edge, x in zip(G.edges, v):
        if x > 0:
            outdeg[edge.tail] += 1
            indeg[edge.head] += 1
        elif x < 0:
            outdeg[edge.head] += 1
            indeg[edge.tail] += 1
    return indeg, outdeg


def is_oriented_eulerian(G: PlaneMultigraph, v) -> bool:
    if any(G.boundary(v)):
        raise NotInLattice("edge vector is not a flow")
    return all(x in (-1, 0, 1) for x in v)


def is_oriented_cycle(G: PlaneMultigraph, v) -> bool:
    if not is_oriented_eulerian(G, v) or not any(v):
        return False
    indeg, outdeg = _degrees(G, v)
    if any((i, o) not in ((0, 0), (1, 1)) for i, o in zip(indeg, outdeg)):
        return False
    support = [e for e, x in enumerate(v) if x]
    start = G.edges[support[0]].tail
    reach = {start}
    grew = True
    while grew:
        grew = False
        for e in support:
            edge = G.edges[e]
            if (edge.tail in reach) != (edge.head in reach):
                reach.update((edge.tail, edge.head))
                grew = True
    return all(G.edges[e].tail in reach for e in support)


class PairCheck(NamedTuple):
    simple: bool
    opposite_orientations: bool
    count_identity: bool


def simple_pair_check(G: PlaneMultigraph, Ci, Cj, lattice=None) -> PairCheck:
    """The three equivalent conditions on a pair of oriented cycles, each computed separately."""
    for C in (Ci, Cj):
        if len(C) != G.n_edges or not is_oriented_cycle(G, C):
            raise NotACycle(f"{list(C)} is not an oriented cycle")
    F = lattice or flow_lattice(G, [1] * G.n_edges)
    total = tuple(a + b for a, b in zip(Ci, Cj))
    simple = is_simple(F, total)
    shared = [e for e in range(G.n_edges) if Ci[e] and Cj[e]]
    opposite = all(Ci[e] == -Cj[e] for e in shared)
    dot = sum(a * b for a, b in zip(Ci, Cj))
    check = PairCheck(simple, opposite, len(shared) == -dot)
    if len(set(check)) != 1:
        raise InternalConventionError(f"pair conditions disagree: {check}")
    return check


def face_products(cycles):
    """Pairwise unit-weight products C_i . C_j."""
    return tuple(tuple(sum(a * b for a, b in zip(x, y)) for y in cycles) for x in cycles)


def edge_count_recovery(face_grams) -> int:
    n = len(face_grams)
    return sum(-face_grams[i][j] for i in range(n) for j in range(i + 1, n))
