"""Connected bridgeless multigraphs (loops allowed) with few edges, up to isomorphism.

The bridgeless family is grown by ear additions.  The slower route through all
connected multigraphs (grown edge by edge, then filtered) is kept as a
cross-check: every connected multigraph with e edges arises from one with
e - 1 edges by adding an edge, a loop, or a pendant edge to a new vertex.
"""

from __future__ import annotations

from functools import lru_cache

import networkx as nx


def _key(n, edges):
    """Subdivided simple graph: isomorphism of it is multigraph isomorphism."""
    H = nx.Graph()
    H.add_nodes_from(range(n), kind="v")
    for k, (a, b) in enumerate(edges):
        mid = ("e", k)
        H.add_node(mid, kind="e")
        H.add_edge(a, mid)
        H.add_edge(mid, b)
        if a == b:
            H.add_edge(mid, ("loop", k))
            H.nodes[("loop", k)]["kind"] = "l"
    return H


def _dedup(graphs):
    buckets = {}
    out = []
    match = nx.algorithms.isomorphism.categorical_node_match("kind", None)
    for n, edges in graphs:
        H = _key(n, edges)
        h = nx.weisfeiler_lehman_graph_hash(H, node_attr="kind")
        bucket = buckets.setdefault(h, [])
        if any(nx.is_isomorphic(H, K, node_match=match) for K in bucket):
            continue
        bucket.append(H)
        out.append((n, edges))
    return out


@lru_cache(maxsize=None)
def connected_multigraphs(m):
    """All connected multigraphs with exactly m edges, as (n, sorted edge tuple)."""
    if m == 0:
        return ((1, ()),)
    grown = []
    for n, edges in connected_multigraphs(m - 1):
        for a in range(n):
            for b in range(a, n + 1):
                grown.append((max(n, b + 1), tuple(sorted(edges + ((a, b),)))))
    return tuple(_dedup(grown))


def is_bridgeless(n, edges):
    """No edge whose removal disconnects the graph (direct check, no embedding)."""
    for skip in range(len(edges)):
        G = nx.MultiGraph()
        G.add_nodes_from(range(n))
        G.add_edges_from(e for k, e in enumerate(edges) if k != skip)
        if not nx.is_connected(G):
            return False
    return True


@lru_cache(maxsize=None)
def bridgeless_multigraphs(m):
    """Connected bridgeless multigraphs with exactly m edges, by ear additions.

    A connected graph is bridgeless iff it has an ear decomposition with closed
    ears allowed, so adding a path of k edges (k - 1 new inner vertices)
    between existing vertices, or a closed ear at one vertex, reaches them all.
    """
    if m == 0:
        return ((1, ()),)
    grown = []
    for k in range(1, m + 1):
        for n, edges in bridgeless_multigraphs(m - k):
            for a in range(n):
                for b in range(a, n):
                    path = [a] + list(range(n, n + k - 1)) + [b]
                    new = tuple(tuple(sorted(p)) for p in zip(path, path[1:]))
                    grown.append((n + k - 1, tuple(sorted(edges + new))))
    return tuple(_dedup(grown))


def bridgeless_family(max_edges=8):
    """(n, edges) for every connected bridgeless multigraph with <= max_edges edges."""
    return [g for m in range(max_edges + 1) for g in bridgeless_multigraphs(m)]
