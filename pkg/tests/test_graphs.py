import math
import random

import pytest

from lapdist.graphs import (
    Graph,
    GraphError,
    add_edges,
    complement,
    complete,
    delete_edge,
    diameter,
    disjoint_union,
    distances,
    empty,
    from_edges,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_connected,
    is_path_graph,
    is_spanning_subgraph,
    join,
    path,
    relabel,
)


def test_path_basics():
    with pytest.raises(GraphError):
        path(0)
    assert path(1).n == 1 and path(1).edge_count == 0
    p5 = path(5)
    assert p5.edge_count == 4
    assert diameter(p5) == 4
    assert sorted(path(4).degrees()) == [1, 1, 2, 2]


def test_complete_basics():
    with pytest.raises(GraphError):
        complete(0)
    assert complete(4).edge_count == 6
    assert complete(2).edge_count == 1
    assert complete(5).degrees() == (4, 4, 4, 4, 4)
    assert diameter(complete(7)) == 1


def test_construction_validation():
    with pytest.raises(GraphError):
        Graph(2, (1, 2))  # loop at vertex 0
    with pytest.raises(GraphError):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, (0, 0), labels=("a", "a"))


def test_disjoint_union():
    g = disjoint_union(path(2), path(2))
    assert g.n == 4 and g.edge_count == 2 and not is_connected(g)
    h = disjoint_union(complete(3), complete(1))
    assert h.edge_count == 3
    same = disjoint_union(path(3), empty(0))
    assert same.adj == path(3).adj


def test_join():
    assert join(complete(1), complete(1)).adj == complete(2).adj
    p3 = join(disjoint_union(complete(1), complete(1)), complete(1))
    assert is_path_graph(p3) and p3.n == 3
    # edge count formula checked against direct enumeration
    for a, b, c in [(1, 2, 3), (2, 2, 2), (3, 1, 4)]:
        g = join(disjoint_union(complete(a), complete(b)), complete(c))
        formula = math.comb(a, 2) + math.comb(b, 2) + math.comb(c, 2) + c * (a + b)
        assert len(g.edges()) == formula == g.edge_count


def test_add_delete_edges():
    k4e = delete_edge(complete(4), (0, 1))
    assert sorted(k4e.degrees()) == [2, 2, 3, 3]
    back = add_edges(k4e, [(0, 1)])
    assert back.adj == complete(4).adj
    with pytest.raises(GraphError):
        delete_edge(k4e, (0, 1))
    with pytest.raises(GraphError):
        add_edges(complete(3), [(0, 1)])
    with pytest.raises(GraphError):
        add_edges(path(3), [(1, 1)])
    assert not is_connected(delete_edge(path(3), (1, 2)))


def test_induced_subgraph():
    k3 = induced_subgraph(complete(5), [0, 2, 4])
    assert k3.adj == complete(3).adj
    iso3 = induced_subgraph(path(5), [0, 2, 4])
    assert iso3.edge_count == 0
    g = from_edges(4, [(0, 1), (1, 2), (2, 3)], labels="abcd")
    same = induced_subgraph(g, range(4))
    assert same.adj == g.adj and same.labels == g.labels
    assert induced_subgraph(g, [1, 3]).labels == ("b", "d")
    with pytest.raises(GraphError):
        induced_subgraph(g, [])
    with pytest.raises(GraphError):
        induced_subgraph(g, [9])


def test_complement():
    assert complement(complete(6)).edge_count == 0
    p4 = path(4)
    assert complement(complement(p4)).adj == p4.adj
    # P4 is self-complementary: its complement is the path 1-3-0-2
    expected = from_edges(4, [(1, 3), (3, 0), (0, 2)])
    assert complement(p4).adj == expected.adj


def test_distances_and_diameter():
    d = distances(path(4))
    assert d[0][3] == 3 and d[0][0] == 0
    for row in d:
        assert all(isinstance(x, int) or x == math.inf for x in row)
    two = disjoint_union(path(2), path(2))
    assert distances(two)[0][2] == math.inf
    with pytest.raises(GraphError):
        diameter(two)
    for n in range(2, 9):
        assert diameter(path(n)) == n - 1


def test_diameter_grows_under_edge_deletion():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(3, 8)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.6:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if not is_connected(g):
            continue
        base = diameter(g)
        for e in g.edges():
            h = delete_edge(g, e)
            if is_connected(h):
                assert diameter(h) >= base


def test_spanning_subgraph():
    assert is_spanning_subgraph(path(5), complete(5))
    assert not is_spanning_subgraph(complete(4), path(4))
    g = delete_edge(complete(5), (1, 2))
    assert is_spanning_subgraph(g, complete(5))
    assert is_spanning_subgraph(g, g)  # reflexive
    with pytest.raises(GraphError):
        is_spanning_subgraph(path(3), path(4))
    # explicit correspondence: reversed path still maps into the path
    assert is_spanning_subgraph(path(4), path(4), mapping=[3, 2, 1, 0])


def test_spanning_subgraph_transitive():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(2, 7)
        h = complete(n)
        mid_edges = [e for e in h.edges() if rng.random() < 0.7]
        mid = from_edges(n, mid_edges)
        low_edges = [e for e in mid_edges if rng.random() < 0.7]
        low = from_edges(n, low_edges)
        assert is_spanning_subgraph(low, mid) and is_spanning_subgraph(mid, h)
        assert is_spanning_subgraph(low, h)


def test_graph6_known_values():
    assert graph6_encode(complete(1)) == "@"
    assert graph6_encode(path(2)) == "A_"
    assert graph6_decode("A_").adj == path(2).adj
    assert graph6_decode("@").n == 1


def test_graph6_round_trip_random():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 12)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        assert graph6_decode(graph6_encode(g)).adj == g.adj


def test_graph6_medium_order():
    g = path(80)
    assert graph6_decode(graph6_encode(g)).adj == g.adj


def test_graph6_malformed():
    with pytest.raises(GraphError):
        graph6_decode("")
    with pytest.raises(GraphError):
        graph6_decode("B")  # truncated body
    with pytest.raises(GraphError):
        graph6_decode("A" + chr(30))  # byte below the printable offset


def test_relabel_preserves_structure():
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    h = relabel(g, [4, 3, 2, 1, 0])
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert h.edge_count == g.edge_count


def test_is_path_graph():
    assert is_path_graph(path(1))
    assert is_path_graph(path(2))
    assert is_path_graph(path(7))
    assert not is_path_graph(complete(3))
    assert not is_path_graph(disjoint_union(path(2), path(2)))
    assert not is_path_graph(from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
