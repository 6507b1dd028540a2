import pytest

from lapdist.enumeration import are_isomorphic
from lapdist.families import (
    FamilyParameterError,
    FamilySpec,
    GNDRA,
    GNDT,
    build,
    build_gndra,
    build_gndt,
    build_h_ab,
    build_h_abc,
    build_p_plusplus,
    canonical_equality_specs,
    canonicalize,
    mirror,
    parse_spec,
    valid_gndra_specs,
    valid_gndt_specs,
)
from lapdist.graphs import (
    add_edges,
    complete,
    delete_edge,
    diameter,
    induced_subgraph,
    is_connected,
    path,
)


def test_spec_validation():
    with pytest.raises(FamilyParameterError):
        FamilySpec(GNDT, 5, d=5, t=2)  # d > n-2
    with pytest.raises(FamilyParameterError):
        FamilySpec(GNDT, 6, d=3, t=1)  # t < 2
    with pytest.raises(FamilyParameterError):
        FamilySpec(GNDRA, 6, d=2, r=2, a=1)  # d < 3
    with pytest.raises(FamilyParameterError):
        FamilySpec(GNDRA, 6, d=3, r=3, a=1)  # r > d-1
    with pytest.raises(FamilyParameterError):
        FamilySpec(GNDRA, 6, d=3, r=2, a=2)  # a > n-d-2
    with pytest.raises(FamilyParameterError):
        FamilySpec("hab", 9, d=5, t=2, a=1, b=2)  # t < 3
    with pytest.raises(FamilyParameterError):
        FamilySpec("hab", 9, d=5, t=3, a=1, b=1)  # a+b != n-d-1
    with pytest.raises(FamilyParameterError):
        FamilySpec("ppp", 5, t=3)  # t > n-3
    with pytest.raises(FamilyParameterError):
        FamilySpec("nope", 5, t=1)


def test_spec_text_round_trip():
    spec = FamilySpec(GNDT, 9, d=4, t=3)
    assert spec.text() == "gndt:n=9,d=4,t=3"
    assert parse_spec("gndt:n=9,d=4,t=3") == spec
    assert parse_spec(" gndra:n=10,d=5,r=2,a=3 ").text() == "gndra:n=10,d=5,r=2,a=3"
    with pytest.raises(FamilyParameterError):
        parse_spec("gndt:n=9,d=4")
    with pytest.raises(FamilyParameterError):
        parse_spec("gndt:n=9,d=4,t=x")


def test_gndt_structure():
    g = build_gndt(5, 2, 2)
    assert are_isomorphic(g, delete_edge(complete(5), (0, 1))) is not None
    for n in range(4, 9):
        assert are_isomorphic(build_gndt(n, 2, 2), delete_edge(complete(n), (0, 1))) is not None
    g = build_gndt(9, 4, 3)
    assert diameter(g) == 4
    assert max(g.degrees()) == 9 - 4 + 1
    # clique vertices attach exactly to v_{t-1}, v_t, v_{t+1}
    w = g.vertex_by_label("w1")
    assert set(g.neighbors(w)) == {1, 2, 3} | {g.vertex_by_label(f"w{i}") for i in (2, 3, 4)}


def test_gndt_diameters():
    for spec in valid_gndt_specs(9):
        assert diameter(build(spec)) == spec.d
    assert diameter(build_gndt(10, 4, 2)) == 4


def test_gndt_interval_values():
    from lapdist.spectra import m_interval, mu_k

    g = build_gndt(6, 3, 2)
    assert m_interval(g, 5, 6).count == 3
    assert mu_k(g, 3).exact_integer == 5


def test_gndt_edge_deletions_are_spanning_subgraphs():
    from lapdist.graphs import is_spanning_subgraph
    from lapdist.spectra import laplacian_spectrum

    g = build_gndt(8, 4, 3)
    mu = laplacian_spectrum(g).mu(8 - 4)
    for e in g.edges():
        h = delete_edge(g, e)
        assert is_spanning_subgraph(h, g)
        assert laplacian_spectrum(h).mu(8 - 4) <= mu + 1e-8


def test_gndra_structure():
    g = build_gndra(6, 3, 2, 1)
    assert g.n == 6
    w1, w2 = g.vertex_by_label("w1"), g.vertex_by_label("w2")
    v = [g.vertex_by_label(f"v{i}") for i in range(1, 5)]
    for w in (w1, w2):
        assert g.has_edge(w, v[1]) and g.has_edge(w, v[2])
    assert g.has_edge(w1, v[0]) and not g.has_edge(w1, v[3])
    assert g.has_edge(w2, v[3]) and not g.has_edge(w2, v[0])
    assert diameter(build_gndra(10, 5, 3, 2)) == 5


def test_gndra_diameters():
    for spec in valid_gndra_specs(9):
        assert diameter(build(spec)) == spec.d


def test_family_graphs_connected():
    for spec in valid_gndt_specs(8) + valid_gndra_specs(8):
        assert is_connected(build(spec))


def test_mirror_isomorphism():
    for spec in valid_gndt_specs(10) + valid_gndra_specs(10):
        assert are_isomorphic(build(spec), build(mirror(spec))) is not None


def test_canonicalize():
    assert canonicalize(parse_spec("gndt:n=9,d=4,t=4")) == parse_spec("gndt:n=9,d=4,t=2")
    assert canonicalize(parse_spec("gndt:n=9,d=4,t=3")) == parse_spec("gndt:n=9,d=4,t=3")
    assert canonicalize(parse_spec("gndra:n=10,d=5,r=4,a=1")) == parse_spec(
        "gndra:n=10,d=5,r=2,a=3"
    )
    # fixed-point r: only a is reduced
    assert canonicalize(parse_spec("gndra:n=7,d=3,r=2,a=2")) == parse_spec("gndra:n=7,d=3,r=2,a=1")
    with pytest.raises(FamilyParameterError):
        canonicalize(FamilySpec("ppp", 6, t=2))


def test_canonicalize_idempotent_and_isomorphic():
    for spec in valid_gndt_specs(9) + valid_gndra_specs(9):
        canon = canonicalize(spec)
        assert canonicalize(canon) == canon
        assert are_isomorphic(build(spec), build(canon)) is not None


def test_h_ab_structure():
    g = build_h_ab(9, 5, 3, 1, 2)
    assert g.n == 9 and diameter(g) == 5
    a1 = g.vertex_by_label("a1")
    assert set(g.neighbors(a1)) == {0, 1, 2}  # v1, v2, v3
    for lbl in ("b1", "b2"):
        b = g.vertex_by_label(lbl)
        other = g.vertex_by_label("b2" if lbl == "b1" else "b1")
        assert set(g.neighbors(b)) == {2, 3, 4, other}
        assert not g.has_edge(a1, b)
    # edge count formula vs construction
    for n, d, t, a, b in [(9, 5, 3, 1, 2), (10, 5, 3, 2, 2), (10, 6, 4, 1, 2)]:
        g = build_h_ab(n, d, t, a, b)
        assert g.edge_count == d + a * (a - 1) // 2 + b * (b - 1) // 2 + 3 * (a + b)


def test_h_abc_structure():
    g = build_h_abc(10, 5, 3, 1, 1, 2)
    assert g.n == 10
    a1 = g.vertex_by_label("a1")
    b1 = g.vertex_by_label("b1")
    c = [g.vertex_by_label("c1"), g.vertex_by_label("c2")]
    assert not g.has_edge(a1, b1)
    for w in c:
        assert g.has_edge(a1, w) and g.has_edge(b1, w)
        assert {1, 2, 3} <= set(g.neighbors(w))  # v2, v3, v4
    # unit blocks: order d+1+a+b+c, bundle sizes 3a, 3b, 3c
    g = build_h_abc(9, 5, 3, 1, 1, 1)
    assert g.n == 9
    bundle = [(u, v) for u, v in g.edges() if g.labels[u].startswith("v") != g.labels[v].startswith("v")]
    assert len(bundle) == 9
    # removing the joined clique leaves the two-clique family
    keep = [v for v in range(g.n) if g.labels[v] != "c1"]
    reduced = induced_subgraph(g, keep)
    assert are_isomorphic(reduced, build_h_ab(8, 5, 3, 1, 1)) is not None


def test_p_plusplus_structure():
    g = build_p_plusplus(8, 3)
    u = g.vertex_by_label("u")
    assert g.degree(u) == 2
    assert set(g.neighbors(u)) == {2, 4}  # v3 and v5
    for n in range(4, 10):
        for t in range(1, n - 2):
            assert diameter(build_p_plusplus(n, t)) == n - 2
    # removing the first holding edge of u when t=1 leaves a path
    g = build_p_plusplus(7, 1)
    u = g.vertex_by_label("u")
    h = delete_edge(g, (u, g.vertex_by_label("v3")))
    assert are_isomorphic(h, path(7)) is not None
    # adding u v_{t+1} yields the diameter n-2 family with anchor t+1
    g = build_p_plusplus(8, 3)
    u = g.vertex_by_label("u")
    h = add_edges(g, [(u, g.vertex_by_label("v4"))])
    assert are_isomorphic(h, build_gndt(8, 6, 4)) is not None


def test_canonical_equality_specs():
    specs = canonical_equality_specs(6, 3)
    assert [s.text() for s in specs] == ["gndt:n=6,d=3,t=2", "gndra:n=6,d=3,r=2,a=1"]
    specs = canonical_equality_specs(7, 4)
    assert [s.text() for s in specs] == [
        "gndt:n=7,d=4,t=2",
        "gndt:n=7,d=4,t=3",
        "gndra:n=7,d=4,r=2,a=1",
    ]
    # mirror fixed point: a capped at floor((n-d-1)/2)
    specs = canonical_equality_specs(7, 3)
    assert [s.text() for s in specs] == ["gndt:n=7,d=3,t=2", "gndra:n=7,d=3,r=2,a=1"]
    # built canonical graphs are pairwise non-isomorphic
    for n, d in [(6, 3), (7, 3), (7, 4), (8, 4), (9, 5)]:
        graphs = [build(s) for s in canonical_equality_specs(n, d)]
        for i in range(len(graphs)):
            for j in range(i + 1, len(graphs)):
                assert are_isomorphic(graphs[i], graphs[j]) is None, (n, d, i, j)
