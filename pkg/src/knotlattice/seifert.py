"""Link signature from a Seifert surface, independent of the chessboard route.

Seifert's algorithm: smooth every crossing along the orientation, cap the
circles with disks stacked by nesting depth (inner disks higher), and join
them by one half-twisted band per crossing.  H1 of the surface is the cycle
space of the Seifert graph (circles as vertices, bands as edges).

For cycles a, b the symmetrized Seifert form lk(a, b+) + lk(b, a+) splits
into local terms.  Bands contribute -sign(c) for every band both cycles run
through.  Paths across a disk follow its boundary in the circle's direction,
so they pass under exactly the inward bands (those leading to a nested disk)
attached between their entry and exit points.  An inward band also folds
back over its parent disk; two paths meeting the fold in the same direction
d pick up -orient(v) * d there, independent of their order in the band.
"""

from __future__ import annotations

from collections import deque

from .diagram import LinkDiagram, _DSU, outer_face, seifert_circles
from .errors import InternalConventionError
from .lattice import signature


def _regions(D):
    dsu = _DSU(range(len(D.faces)))
    for i, s in enumerate(D.signs):
        k = 1 if s > 0 else 0
        dsu.union(D.corner_face(i, k), D.corner_face(i, k + 2))
    return dsu


def seifert_form(D: LinkDiagram, outer=None):
    """Symmetrized Seifert matrix V + V^T in a fundamental-cycle basis of the Seifert graph."""
    circles = seifert_circles(D).circles
    circ = {a: v for v, c in enumerate(circles) for a in c}
    regions = _regions(D)

    sides = []
    for c in circles:
        found = {tuple(regions.find(f) for f in D.arc_sides(a)) for a in c}
        if len(found) != 1:
            raise InternalConventionError("Seifert circle with inconsistent sides")
        sides.append(found.pop())

    # nesting tree of regions and circles rooted at the outer region
    if outer is None:
        outer = outer_face(D)
    root = regions.find(outer)
    by_region = {}
    for v, (left, right) in enumerate(sides):
        by_region.setdefault(left, []).append(v)
        by_region.setdefault(right, []).append(v)
    inside = [None] * len(circles)
    queue = deque([root])
    seen_regions = {root}
    while queue:
        R = queue.popleft()
        for v in by_region.get(R, ()):
            if inside[v] is not None:
                continue
            left, right = sides[v]
            inside[v] = right if left == R else left
            if inside[v] not in seen_regions:
                seen_regions.add(inside[v])
                queue.append(inside[v])
    if any(x is None for x in inside):
        raise InternalConventionError("circle not reached from the outer region")
    orient = [1 if inside[v] == sides[v][0] else -1 for v in range(len(circles))]

    # bands: crossing i joins the circle through the incoming under arc (tail)
    # to the circle through the incoming over arc (head)
    bands = []
    for i, s in enumerate(D.signs):
        over_in = 1 if D.over_forward[i] else 3
        a, b = circ[D.arc_at(i, 0)], circ[D.arc_at(i, over_in)]
        if a == b:
            raise InternalConventionError("band with both ends on one circle")
        region = regions.find(D.corner_face(i, 1 if s > 0 else 0))
        bands.append((a, b, -s, region))

    position = [dict() for _ in circles]
    for v, c in enumerate(circles):
        for j, arc in enumerate(c):
            position[v][D.head(arc)[0]] = j

    # fundamental cycles of the Seifert graph as closed walks
    n = len(circles)
    parent = [None] * n
    depth = [0] * n
    seen = [False] * n
    incident = [[] for _ in range(n)]
    for e, (a, b, _, _) in enumerate(bands):
        incident[a].append(e)
        incident[b].append(e)
    tree = set()
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e in incident[v]:
                a, b = bands[e][:2]
                u = b if a == v else a
                if not seen[u]:
                    seen[u] = True
                    parent[u] = e
                    depth[u] = depth[v] + 1
                    tree.add(e)
                    queue.append(u)

    def step(e, frm):
        a, b = bands[e][:2]
        return (b, 1) if frm == a else (a, -1)

    def climb(v):
        """Walk from v up to the root as [(edge, direction)], plus vertices visited."""
        path = []
        while parent[v] is not None:
            e = parent[v]
            u, d = step(e, v)
            path.append((e, d))
            v = u
        return path

    walks = []
    for e in range(len(bands)):
        if e in tree:
            continue
        a, b = bands[e][:2]
        up_b = climb(b)
        up_a = climb(a)
        # drop the common part above the lowest common ancestor
        while up_a and up_b and up_a[-1] == up_b[-1]:
            up_a.pop()
            up_b.pop()
        down_a = [(f, -d) for f, d in reversed(up_a)]
        walks.append([(e, 1)] + up_b + down_a)

    vectors = []
    for walk in walks:
        vec = [0] * len(bands)
        for e, d in walk:
            vec[e] += d
        vectors.append(vec)

    def inflow(vec, e, v):
        a = bands[e][0]
        return vec[e] if a == v else -vec[e]

    inward = [[] for _ in circles]
    for e, (a, b, _, region) in enumerate(bands):
        for v in (a, b):
            if region == inside[v]:
                inward[v].append(e)

    k = len(walks)
    N = [[0] * k for _ in range(k)]
    for x, walk in enumerate(walks):
        for j, (e, d) in enumerate(walk):
            a, b = bands[e][:2]
            v = b if d > 0 else a
            e_next = walk[(j + 1) % len(walk)][0]
            size = len(circles[v])
            p_in = position[v][e]
            p_out = position[v][e_next]
            between = {(p_in + t) % size for t in range(1, (p_out - p_in) % size)}
            for f in inward[v]:
                if position[v][f] in between:
                    for y in range(k):
                        N[x][y] += -orient[v] * inflow(vectors[y], f, v)

    # bands into a nested disk fold back over their parent disk; paths that
    # start or end on the same fold in the same direction pick up -orient
    for v in range(len(circles)):
        for f in inward[v]:
            flows = [inflow(vectors[y], f, v) for y in range(k)]
            for x in range(k):
                for y in range(k):
                    if flows[x] and flows[x] == flows[y]:
                        N[x][y] += -orient[v] * flows[x] / 2

    w = [band[2] for band in bands]
    form = []
    for x in range(k):
        row = []
        for y in range(k):
            gram = sum(w[e] * vectors[x][e] * vectors[y][e] for e in range(len(bands)))
            total = gram + N[x][y] + N[y][x]
            if total != int(total):
                raise InternalConventionError("non-integral Seifert form entry")
            row.append(int(total))
        form.append(tuple(row))
    return tuple(form)


def seifert_signature(D: LinkDiagram, outer=None) -> int:
    return signature(seifert_form(D, outer)).sigma
