"""Bitmask graph core: graph6 codec, constructions, surgery, recognition."""

import random

import pytest

from spectralminors import (
    MAX_VERTICES,
    Graph,
    complete,
    complete_bipartite,
    construct_cdv_extremal,
    construct_kr_extremal,
    construct_kst_extremal,
    contract_edge,
    cycle,
    decompose_apex_clique,
    delete_edge,
    delete_vertex,
    disjoint_union,
    encode_graph6,
    independent,
    is_bipartite,
    is_path_union,
    join,
    kst_parts,
    parse_graph6,
    path,
    petersen,
    recognize_residual,
)

from helpers import random_graph


def edge_set(g):
    return set(g.edges())


# ---------------------------------------------------------------------------
# Graph basics


def test_from_edges_and_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count == 3
    assert g.degrees() == (1, 2, 2, 1)
    assert g.max_degree() == 2
    assert g.has_edge(1, 2) and g.has_edge(2, 1)
    assert not g.has_edge(0, 3)
    assert g.neighbors(1) == (0, 2)
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric adjacency
    with pytest.raises(ValueError):
        Graph(2, (1, 2))  # loop bit on vertex 0
    with pytest.raises(ValueError):
        Graph.empty(-1)
    with pytest.raises(ValueError):
        Graph.empty(MAX_VERTICES + 1)
    # the boundary itself is fine
    assert Graph.empty(MAX_VERTICES).n == MAX_VERTICES


def test_components_and_connectivity():
    g = disjoint_union(complete(3), path(2), independent(1))
    assert g.components() == [(0, 1, 2), (3, 4), (5,)]
    assert not g.is_connected()
    assert cycle(5).is_connected()
    assert Graph.empty(0).is_connected()
    assert not Graph.empty(2).is_connected()


def test_induced_subgraph_and_relabel():
    g = cycle(5)
    h = g.induced_subgraph([0, 1, 2])
    assert edge_set(h) == {(0, 1), (1, 2)}
    perm = [4, 3, 2, 1, 0]
    r = g.relabel(perm)
    assert r.edge_count == g.edge_count
    assert r.has_edge(4, 3)  # image of edge (0, 1)
    back = r.relabel(perm)
    assert back == g


# ---------------------------------------------------------------------------
# graph6 codec


def test_graph6_anchors():
    assert parse_graph6("?") == Graph.empty(0)
    assert parse_graph6("@") == Graph.empty(1)
    assert parse_graph6("A_") == complete(2)
    assert parse_graph6("A?") == independent(2)
    assert parse_graph6("Dhc") == cycle(5)
    # star with center 4
    assert parse_graph6("D?{") == Graph.from_edges(5, [(0, 4), (1, 4), (2, 4), (3, 4)])


def test_graph6_encode_anchors():
    assert encode_graph6(Graph.empty(0)) == "?"
    assert encode_graph6(complete(2)) == "A_"
    assert encode_graph6(cycle(5)) == "Dhc"


def test_graph6_header_and_bytes():
    assert parse_graph6(">>graph6<<A_") == complete(2)
    assert parse_graph6(b"A_") == complete(2)
    assert parse_graph6("A_\n") == complete(2)


def test_graph6_malformed():
    with pytest.raises(ValueError, match="truncated"):
        parse_graph6("D")
    with pytest.raises(ValueError, match="trailing"):
        parse_graph6("A_?")
    with pytest.raises(ValueError):
        parse_graph6("")
    with pytest.raises(ValueError):
        parse_graph6("A" + chr(20))
    with pytest.raises(ValueError):
        parse_graph6("~~" + "?" * 10)  # 8-byte order form is out of scope


def test_graph6_long_form_boundary():
    # orders up to 62 use the single-byte header, 63 and up the 4-byte one
    g62 = encode_graph6(independent(62))
    g63 = encode_graph6(independent(63))
    assert g62[0] != "~" and g63[0] == "~"
    assert parse_graph6(g62).n == 62
    assert parse_graph6(g63).n == 63


def test_graph6_roundtrip_random():
    rng = random.Random(1405)
    for trial in range(300):
        n = rng.randint(0, 14)
        g = random_graph(rng, n, rng.random())
        assert parse_graph6(encode_graph6(g)) == g
    for trial in range(5):
        g = random_graph(rng, 70, 0.08)
        assert parse_graph6(encode_graph6(g)) == g


def test_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(77)
    for trial in range(120):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.random())
        ng = nx.Graph()
        ng.add_nodes_from(range(n))
        ng.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(ng, header=False).decode().strip()
        assert encode_graph6(g) == expected
        assert parse_graph6(expected) == g


# ---------------------------------------------------------------------------
# Generators and surgery


def test_generators():
    assert complete(4).edge_count == 6
    assert independent(5).edge_count == 0
    assert path(5).edge_count == 4
    assert cycle(5).edge_count == 5
    assert complete_bipartite(2, 3).edge_count == 6
    p = petersen()
    assert p.n == 10 and p.edge_count == 15
    assert p.degrees() == (3,) * 10


def test_join():
    g = join(complete(2), independent(3))
    assert g.n == 5
    assert g.edge_count == 1 + 6
    assert g.degree(0) == 4 and g.degree(2) == 2
    assert join(Graph.empty(0), cycle(4)) == cycle(4)


def test_disjoint_union():
    g = disjoint_union(complete(3), cycle(4))
    assert g.n == 7 and g.edge_count == 7
    assert not g.has_edge(2, 3)
    assert disjoint_union() == Graph.empty(0)


def test_delete_and_contract():
    g = cycle(4)
    assert delete_vertex(g, 0) == path(3)
    assert delete_edge(g, 0, 1).edge_count == 3
    tri = contract_edge(g, 0, 1)
    assert tri.n == 3 and tri.edge_count == 3
    with pytest.raises(ValueError):
        contract_edge(g, 0, 2)  # not an edge
    # contracting a pendant edge of a path shortens it
    assert contract_edge(path(4), 0, 1) == path(3)
    # parallel edges collapse: contracting a triangle edge gives K2, not a multigraph
    assert contract_edge(complete(3), 0, 1) == complete(2)


# ---------------------------------------------------------------------------
# Extremal constructions


def test_kr_construction():
    g = construct_kr_extremal(10, 5)
    assert g.n == 10
    assert g.edge_count == 3 + 3 * 7  # K3 join E7
    assert decompose_apex_clique(g)[0] == (0, 1, 2)
    assert construct_kr_extremal(4, 5) == complete(4)  # degenerate order n = r-1
    with pytest.raises(ValueError):
        construct_kr_extremal(10, 2)
    with pytest.raises(ValueError):
        construct_kr_extremal(3, 5)


def test_kst_construction():
    assert kst_parts(10, 2, 3) == (3, 0)
    assert kst_parts(11, 2, 3) == (3, 1)
    g = construct_kst_extremal(10, 2, 3)
    assert g.edge_count == 9 + 3 * 3  # apex degree 9, three triangles
    g = construct_kst_extremal(11, 2, 3)
    assert g.edge_count == 10 + 9
    univ, rest = decompose_apex_clique(construct_kst_extremal(14, 3, 4))
    assert len(univ) == 2
    shape = recognize_residual(rest)
    assert shape.kind == "disjoint_cliques" and shape.clique_size == 4
    # a nonzero remainder leaves a smaller trailing clique
    _, rest = decompose_apex_clique(construct_kst_extremal(13, 3, 4))
    assert recognize_residual(rest).kind == "other"
    with pytest.raises(ValueError):
        construct_kst_extremal(10, 3, 2)
    with pytest.raises(ValueError):
        construct_kst_extremal(1, 2, 2)


def test_cdv_construction():
    g = construct_cdv_extremal(6, 3)
    assert g.edge_count == 1 + 2 * 4 + 3  # K2 join P4
    assert construct_cdv_extremal(5, 2).edge_count == 1 * 4 + 3
    assert construct_cdv_extremal(4, 4) == complete(4)
    with pytest.raises(ValueError):
        construct_cdv_extremal(3, 1)
    with pytest.raises(ValueError):
        construct_cdv_extremal(2, 3)


# ---------------------------------------------------------------------------
# Recognition


def test_decompose_apex_clique():
    univ, rest = decompose_apex_clique(join(complete(2), independent(3)))
    assert univ == (0, 1) and rest == independent(3)
    univ, rest = decompose_apex_clique(complete(4))
    assert univ == (0, 1, 2, 3) and rest.n == 0
    univ, rest = decompose_apex_clique(cycle(5))
    assert univ == () and rest == cycle(5)


def test_recognize_residual():
    assert recognize_residual(independent(4)).kind == "independent"
    assert recognize_residual(Graph.empty(0)).kind == "independent"
    shape = recognize_residual(disjoint_union(complete(3), complete(3)))
    assert shape.kind == "disjoint_cliques" and shape.clique_size == 3
    # a perfect matching reads as copies of K2, not as paths
    shape = recognize_residual(disjoint_union(complete(2), complete(2), complete(2)))
    assert shape.kind == "disjoint_cliques" and shape.clique_size == 2
    assert recognize_residual(path(4)).kind == "disjoint_paths"
    assert recognize_residual(disjoint_union(path(3), path(2))).kind == "disjoint_paths"
    assert recognize_residual(disjoint_union(path(3), path(3))).kind == "disjoint_paths"
    assert recognize_residual(disjoint_union(complete(3), complete(2))).kind == "other"
    assert recognize_residual(cycle(4)).kind == "other"


def test_is_path_union():
    assert is_path_union(path(5))
    assert is_path_union(independent(3))
    assert is_path_union(disjoint_union(path(2), path(3), independent(1)))
    assert not is_path_union(cycle(3))
    assert not is_path_union(complete_bipartite(1, 3))


def test_is_bipartite():
    assert is_bipartite(complete_bipartite(3, 4))
    assert is_bipartite(cycle(6))
    assert not is_bipartite(cycle(5))
    assert not is_bipartite(complete(3))
    assert is_bipartite(Graph.empty(0))
