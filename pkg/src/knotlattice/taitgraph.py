"""Plane multigraphs given by rotation systems, Tait graphs and duals.

A dart is a pair ``(edge, end)`` with ``end`` 0 at the tail and 1 at the
head.  ``rotation[v]`` is the cyclic order of darts at vertex ``v``; faces
are orbits of ``d -> rotation-successor(opposite(d))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .diagram import Color, Coloring, LinkDiagram, white_odd
from .errors import HasBridge, InvalidRotation, NotConnected


@dataclass(frozen=True)
class Edge:
    tail: int
    head: int
    weight: int = 1
    crossing: int | None = None

    def end(self, k):
        return self.head if k else self.tail

    @property
    def is_loop(self):
        return self.tail == self.head


@dataclass(frozen=True)
class PlaneMultigraph:
    n_vertices: int
    edges: tuple
    rotation: tuple
    _faces: tuple = field(init=False, repr=False, compare=False)
    _dart_face: dict = field(init=False, repr=False, compare=False)
    _component: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        rotation = tuple(tuple((int(e), int(k)) for e, k in r) for r in self.rotation)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "rotation", rotation)
        if len(rotation) != self.n_vertices:
            raise InvalidRotation("one rotation list per vertex is required")
        for e in edges:
            if not (0 <= e.tail < self.n_vertices and 0 <= e.head < self.n_vertices):
                raise InvalidRotation(f"edge {e} has an endpoint out of range")

        succ = {}
        seen = set()
        for v, r in enumerate(rotation):
            for j, d in enumerate(r):
                e, k = d
                if not 0 <= e < len(edges) or k not in (0, 1):
                    raise InvalidRotation(f"dart {d} does not exist")
                if edges[e].end(k) != v:
                    raise InvalidRotation(f"dart {d} listed at vertex {v}, not its endpoint")
                if d in seen:
                    raise InvalidRotation(f"dart {d} listed twice")
                seen.add(d)
                succ[d] = r[(j + 1) % len(r)]
        if len(seen) != 2 * len(edges):
            raise InvalidRotation("every dart must appear in exactly one rotation list")

        faces = []
        dart_face = {}
        for v in range(self.n_vertices):
            for d in rotation[v]:
                if d in dart_face:
                    continue
                orbit = []
                while d not in dart_face:
                    dart_face[d] = len(faces)
                    orbit.append(d)
                    d = succ[(d[0], 1 - d[1])]
                faces.append(tuple(orbit))

        comp = list(range(self.n_vertices))

        def find(x):
            while comp[x] != x:
                comp[x] = comp[comp[x]]
                x = comp[x]
            return x

        for e in edges:
            a, b = find(e.tail), find(e.head)
            if a != b:
                comp[max(a, b)] = min(a, b)
        component = tuple(find(v) for v in range(self.n_vertices))
        n_comp = len(set(component))
        isolated = sum(1 for r in rotation if not r)
        if self.n_vertices - len(edges) + len(faces) + isolated != 2 * n_comp:
            raise InvalidRotation("rotation system is not a sphere embedding")

        object.__setattr__(self, "_faces", tuple(faces))
        object.__setattr__(self, "_dart_face", dart_face)
        object.__setattr__(self, "_component", component)

    # -- structure -------------------------------------------------------

    @property
    def n_edges(self):
        return len(self.edges)

    @property
    def faces(self):
        """Dart orbits, one per face."""
        return self._faces

    def face_of(self, dart):
        return self._dart_face[dart]

    @property
    def is_connected(self):
        return len(set(self._component)) <= 1

    def bridges(self):
        return tuple(e for e in range(self.n_edges)
                     if self._dart_face[(e, 0)] == self._dart_face[(e, 1)])

    def loops(self):
        return tuple(e for e, edge in enumerate(self.edges) if edge.is_loop)

    @property
    def weights(self):
        return tuple(e.weight for e in self.edges)

    def with_weights(self, weights):
        edges = tuple(Edge(e.tail, e.head, w, e.crossing) for e, w in zip(self.edges, weights))
        return PlaneMultigraph(self.n_vertices, edges, self.rotation)

    def boundary(self, vec):
        """Net inflow minus outflow at each vertex for an edge vector."""
        out = [0] * self.n_vertices
        for e, x in zip(self.edges, vec):
            out[e.head] += x
            out[e.tail] -= x
        return tuple(out)

    def to_json(self):
        return json.dumps({
            "vertices": self.n_vertices,
            "edges": [{"tail": e.tail, "head": e.head, "weight": e.weight, "crossing": e.crossing}
                      for e in self.edges],
            "rotation": [[list(d) for d in r] for r in self.rotation],
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        edges = [Edge(e["tail"], e["head"], e.get("weight", 1), e.get("crossing"))
                 for e in data["edges"]]
        if "rotation" not in data:
            return cls.from_edges(data["vertices"], edges)
        return cls(data["vertices"], tuple(edges), tuple(tuple(map(tuple, r)) for r in data["rotation"]))

    @classmethod
    def from_edges(cls, n_vertices, edges):
        """Embed an abstract multigraph, choosing any planar rotation system."""
        import networkx as nx

        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        simple = nx.Graph()
        simple.add_nodes_from(range(n_vertices))
        bundles = {}
        loops = {v: [] for v in range(n_vertices)}
        for idx, e in enumerate(edges):
            if e.is_loop:
                loops[e.tail].append(idx)
            else:
                simple.add_edge(e.tail, e.head)
                bundles.setdefault(frozenset((e.tail, e.head)), []).append(idx)
        planar, emb = nx.check_planarity(simple)
        if not planar:
            raise InvalidRotation("graph is not planar")
        rotation = []
        for v in range(n_vertices):
            r = []
            for idx in loops[v]:
                r.extend([(idx, 0), (idx, 1)])
            nbrs = list(emb.neighbors_cw_order(v)) if simple.degree(v) else []
            for u in nbrs:
                bundle = bundles[frozenset((u, v))]
                if v > u:
                    bundle = bundle[::-1]
                r.extend((idx, 0 if edges[idx].tail == v else 1) for idx in bundle)
            rotation.append(tuple(r))
        return cls(n_vertices, edges, tuple(rotation))


# -- constructions --------------------------------------------------------

def tait_graph(D: LinkDiagram, col: Coloring, color: Color) -> PlaneMultigraph:
    """Vertex per face of ``color``; edge ``i`` through crossing ``i``.

    White-graph weights are +1 at type b crossings and -1 at type a; the
    Black graph carries the negated weights.
    """
    if not D.is_connected:
        raise NotConnected("Tait graphs need a connected diagram")
    color = Color(color)
    b_flags = white_odd(D, col)
    vertex = {f: v for v, f in enumerate(col.faces_of(color))}
    first = []
    edges = []
    for i, is_b in enumerate(b_flags):
        k0 = 1 if is_b == (color is Color.WHITE) else 0
        first.append(k0)
        w = 1 if is_b else -1
        if color is Color.BLACK:
            w = -w
        edges.append(Edge(vertex[D.corner_face(i, k0)], vertex[D.corner_face(i, k0 + 2)], w, i))
    rotation = []
    for f in vertex:
        r = []
        for i, k in D.faces[f].boundary:
            r.append((i, 0 if k == first[i] else 1))
        rotation.append(tuple(r))
    return PlaneMultigraph(len(vertex), tuple(edges), tuple(rotation))


def planar_dual(G: PlaneMultigraph) -> PlaneMultigraph:
    """Vertex per face, dual edges carry negated weights."""
    edges = tuple(
        Edge(G.face_of((e, 0)), G.face_of((e, 1)), -edge.weight, edge.crossing)
        for e, edge in enumerate(G.edges))
    return PlaneMultigraph(len(G.faces), edges, G.faces)


def face_cycles(G: PlaneMultigraph):
    """Oriented boundary of every face, as edge vectors."""
    if not G.is_connected:
        raise NotConnected("face cycles need a connected graph")
    br = G.bridges()
    if br:
        raise HasBridge(f"edges {list(br)} are bridges")
    out = []
    for orbit in G.faces:
        vec = [0] * G.n_edges
        for e, k in orbit:
            vec[e] += -1 if k else 1
        out.append(tuple(vec))
    return tuple(out)


def is_isomorphic_labelled(G: PlaneMultigraph, H: PlaneMultigraph) -> bool:
    """Isomorphism of connected graphs matching edges by crossing label and weight.

    Edge directions are ignored; only unordered endpoint pairs must correspond.
    """
    if G.n_vertices != H.n_vertices or G.n_edges != H.n_edges:
        return False
    by_label = {e.crossing: e for e in H.edges}
    if len(by_label) != H.n_edges or set(by_label) != {e.crossing for e in G.edges}:
        return False
    if any(e.weight != by_label[e.crossing].weight for e in G.edges):
        return False
    if not G.edges:
        return G.n_vertices == H.n_vertices <= 1
    incident = {}
    for e in G.edges:
        incident.setdefault(e.tail, []).append(e)
        incident.setdefault(e.head, []).append(e)

    def attempt(v0, w0):
        vmap, used = {v0: w0}, {w0}
        stack = [v0]
        while stack:
            v = stack.pop()
            for e in incident.get(v, ()):
                f = by_label[e.crossing]
                u = e.head if e.tail == v else e.tail
                if vmap[v] not in (f.tail, f.head) or e.is_loop != f.is_loop:
                    return False
                img = f.head if f.tail == vmap[v] else f.tail
                if u in vmap:
                    if vmap[u] != img:
                        return False
                elif img in used:
                    return False
                else:
                    vmap[u] = img
                    used.add(img)
                    stack.append(u)
        return len(vmap) == G.n_vertices

    seed = G.edges[0]
    f = by_label[seed.crossing]
    return attempt(seed.tail, f.tail) or attempt(seed.tail, f.head)
