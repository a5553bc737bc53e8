from graph_family import _dedup, bridgeless_multigraphs, connected_multigraphs, is_bridgeless


def test_ear_route_matches_filtered_route():
    for m in range(7):
        filtered = [g for g in connected_multigraphs(m) if is_bridgeless(*g)]
        ears = list(bridgeless_multigraphs(m))
        assert len(_dedup(filtered + ears)) == len(filtered) == len(ears)


def test_ear_graphs_are_bridgeless_and_connected():
    for m in range(8):
        for n, edges in bridgeless_multigraphs(m):
            assert len(edges) == m and is_bridgeless(n, edges)
