import random

import pytest

from lapdist.checks import (
    EDGE_CLASSES_44,
    EDGE_CLASSES_45,
    EQUALITY,
    NOT_APPLICABLE,
    STRICT,
    check_bound,
    classify_equality,
    complement_identity_check,
    edge_interlacing_check,
    lemma_grid,
    max_degree_bound_check,
    random_connected_graph,
    random_integer_symmetric,
    run_complement_exhaustive,
    run_edge_interlacing_exhaustive,
    run_family_lemma_grid,
    run_interlacing_suite,
    run_max_degree_exhaustive,
    run_weyl_suite,
    submatrix_interlacing_check,
    verify_edge_deleted_lemma,
    verify_family_lemma,
    weyl_check,
)
from lapdist.enumeration import are_isomorphic, enumerate_connected
from lapdist.families import build_gndra, build_gndt
from lapdist.graphs import (
    Graph,
    add_edges,
    complete,
    delete_edge,
    disjoint_union,
    from_edges,
    path,
)
from lapdist.spectra import (
    diagonal_matrix,
    integer_symmetric,
    laplacian,
    laplacian_spectrum,
    numeric_spectrum,
)


def test_check_bound_equality_family():
    v = check_bound(build_gndt(6, 3, 2))
    assert v.status == EQUALITY and v.m == 3 and v.bound == 3


def test_check_bound_path_excluded():
    v = check_bound(path(6))
    assert v.status == NOT_APPLICABLE
    assert v.m == 2 and v.bound == 1  # the bound genuinely fails on paths


def test_check_bound_small_diameter():
    assert check_bound(complete(4)).status == NOT_APPLICABLE  # d = 1
    assert check_bound(complete(1)).status == NOT_APPLICABLE  # d = 0
    with pytest.raises(ValueError):
        check_bound(disjoint_union(path(2), path(2)))


def test_check_bound_strict_case():
    g = delete_edge(delete_edge(complete(5), (0, 1)), (2, 3))
    v = check_bound(g)
    assert v.status in (STRICT, EQUALITY)
    assert v.m <= v.bound


def test_classify_equality():
    m = classify_equality(delete_edge(complete(5), (0, 1)))
    assert m.spec is not None and m.spec.text() == "gndt:n=5,d=2,t=2"
    m = classify_equality(build_gndra(6, 3, 2, 1))
    assert m.spec.text() == "gndra:n=6,d=3,r=2,a=1"
    m = classify_equality(build_gndt(9, 4, 4))
    assert m.spec.text() == "gndt:n=9,d=4,t=2"
    with pytest.raises(ValueError):
        classify_equality(path(5))


def test_weyl_zero_matrix_equality():
    a = laplacian(path(5))
    zero = diagonal_matrix([0] * 5)
    for i in range(1, 6):
        report = weyl_check(a, zero, i, 1)
        assert report.passed
        assert abs(report.details["margin"]) <= 1e-8


def test_weyl_validation():
    a = laplacian(path(4))
    with pytest.raises(ValueError):
        weyl_check(a, laplacian(path(5)), 1, 1)
    with pytest.raises(ValueError):
        weyl_check(a, a, 3, 3)


def _proof_shift_matrix(d: int, t: int):
    """The rank-two bump used to compare the augmented path with the plain one:
    +1 on the diagonal at t-1..t+2, -1 on the (t-1, t+1) and (t, t+2) pairs
    (1-based positions within order d+2)."""
    n = d + 2
    rows = [[0] * n for _ in range(n)]
    for i in (t - 1, t, t + 1, t + 2):
        rows[i - 1][i - 1] = 1
    for i, j in ((t - 1, t + 1), (t, t + 2)):
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = -1
    return integer_symmetric(rows)


def test_weyl_on_proof_shift_matrix():
    # L(H) = L(P_{d+2}) + S where H is the path plus the two chords; S has
    # spectrum {2, 2, 0, ...}, so mu_3(H) <= mu_1(P_{d+2})
    for d, t in [(4, 3), (5, 3), (6, 4)]:
        s = _proof_shift_matrix(d, t)
        vals = numeric_spectrum(s).values
        assert abs(vals[0] - 2) <= 1e-9 and abs(vals[1] - 2) <= 1e-9
        assert all(abs(v) <= 1e-9 for v in vals[2:])
        h = add_edges(path(d + 2), [(t - 2, t), (t - 1, t + 1)])
        lp = laplacian(path(d + 2))
        assert (lp + s).rows == laplacian(h).rows
        report = weyl_check(lp, s, 1, 3)
        assert report.passed
        mu3_h = laplacian_spectrum(h).mu(3)
        mu1_p = laplacian_spectrum(path(d + 2)).mu(1)
        assert mu3_h <= mu1_p + 1e-8 < 4


def test_submatrix_interlacing_full_matrix():
    m = laplacian(complete(4))
    report = submatrix_interlacing_check(m, range(4))
    assert report.passed and abs(report.details["min_margin"]) <= 1e-9


def test_submatrix_interlacing_random():
    report = run_interlacing_suite(trials=120, seed=9)
    assert report.passed and report.details["failures"] == 0


def test_submatrix_interlacing_proof_instance():
    # principal submatrix on the proof's d+2 vertices of the big family graph:
    # mu_{n-d+1}(G) <= rho_3(B)
    n, d, t = 9, 4, 3
    g = build_gndt(n, d, t)
    rows = list(range(t - 1)) + [d + 1] + list(range(t - 1, d + 1))
    m = laplacian(g)
    report = submatrix_interlacing_check(m, rows)
    assert report.passed
    b = m.submatrix(rows)
    rho3 = numeric_spectrum(b).mu(3)
    mu_nd1 = laplacian_spectrum(g).mu(n - d + 1)
    assert mu_nd1 <= rho3 + 1e-8
    assert rho3 < n - d + 2


def test_edge_interlacing_k3():
    report = edge_interlacing_check(complete(3), (0, 1))
    assert report.passed
    with pytest.raises(ValueError):
        edge_interlacing_check(path(3), (0, 2))


def test_edge_interlacing_exhaustive_small():
    report = run_edge_interlacing_exhaustive(max_n=5)
    assert report.passed and report.details["checked"] > 50


def test_max_degree_star():
    star = from_edges(5, [(0, i) for i in range(1, 5)])
    report = max_degree_bound_check(star)
    assert report.passed
    assert report.details["equality_exact"] is True
    assert abs(report.details["mu1"] - 5) <= 1e-9


def test_max_degree_strict_when_delta_small():
    report = max_degree_bound_check(build_gndt(7, 3, 2))
    assert report.passed and report.details["equality_exact"] is False
    with pytest.raises(ValueError):
        max_degree_bound_check(Graph(3, (0, 0, 0)))


def test_max_degree_exhaustive_small():
    report = run_max_degree_exhaustive(max_n=5)
    assert report.passed


def test_complement_identity():
    assert complement_identity_check(complete(6)).passed
    assert complement_identity_check(path(4)).passed
    report = run_complement_exhaustive(max_n=5)
    assert report.passed
    with pytest.raises(ValueError):
        complement_identity_check(complete(1))


def test_weyl_suite_seeded():
    a = run_weyl_suite(trials=60, seed=42)
    b = run_weyl_suite(trials=60, seed=42)
    assert a.passed and a.details == b.details


def test_family_lemma_equalities():
    r = verify_family_lemma("2.6", (6, 3, 2))
    assert r.passed and r.details["m"] == 3 and r.details["mu_exact"]
    r = verify_family_lemma("2.6", (6, 3, 2))
    assert r.details["boundary_multiplicity"] >= 2
    r = verify_family_lemma("2.7", (7, 3, 2, 1))
    assert r.passed and r.details["m"] == 4
    with pytest.raises(ValueError):
        verify_family_lemma("9.9", (5, 2, 2))


def test_family_lemma_strict_bounds():
    r = verify_family_lemma("4.1", (9, 5, 3, 1, 2))
    assert r.passed and r.details["margin"] > 0
    r = verify_family_lemma("4.3", (8, 3))
    assert r.passed
    assert r.details["boundary_multiplicity"] == 0
    # the boundary can be an eigenvalue at an index below the claimed one;
    # strictness still holds (and is certified exactly)
    r = verify_family_lemma("4.3", (4, 1))  # the 4-cycle
    assert r.passed and r.details["boundary_multiplicity"] == 1
    r = verify_family_lemma("4.2", (10, 5, 3, 1, 1, 2))
    assert r.passed and r.details["boundary_multiplicity"] == 2


def test_edge_deleted_lemmas():
    r = verify_edge_deleted_lemma("4.4", (9, 4, 3), "vt")
    assert r.passed and r.details["boundary"] == 7
    for cls in EDGE_CLASSES_44:
        assert verify_edge_deleted_lemma("4.4", (7, 3, 2), cls).passed
    for cls in EDGE_CLASSES_45:
        assert verify_edge_deleted_lemma("4.5", (9, 4, 3, 1), cls).passed
    with pytest.raises(ValueError):
        verify_edge_deleted_lemma("4.4", (9, 4, 3), "nope")
    with pytest.raises(ValueError):
        verify_edge_deleted_lemma("4.4", (6, 4, 2), "vt")  # d > n-3


def test_clique_edge_deletion_reduces_to_named_class():
    # deleting an edge between two clique vertices is isomorphic to deleting
    # a vt-to-clique edge instead
    g = build_gndt(8, 4, 3)
    w1, w2 = 5, 6
    assert g.has_edge(w1, w2)
    reduced = delete_edge(g, (w1, w2))
    named = delete_edge(g, (3 - 1, 5))  # v_t w
    assert are_isomorphic(reduced, named) is not None


def test_lemma_grids_nonempty():
    assert (6, 3, 2) in lemma_grid("2.6", 10)
    assert (9, 5, 3, 1, 2) in lemma_grid("4.1", 10)
    assert (9, 5, 3, 1, 1, 1) in lemma_grid("4.2", 10)
    assert (4, 1) in lemma_grid("4.3", 10)
    assert all(len(p) == 3 for p in lemma_grid("4.4", 9))
    assert all(len(p) == 4 for p in lemma_grid("4.5", 9))
    with pytest.raises(ValueError):
        lemma_grid("weyl", 10)


def test_run_family_lemma_grid_small():
    reports = run_family_lemma_grid("2.6", 8)
    assert reports and all(r.passed for r in reports)
    reports = run_family_lemma_grid("4.4", 7)
    assert reports and all(r.passed for r in reports)


def test_random_generators_deterministic():
    rng1, rng2 = random.Random(5), random.Random(5)
    m1 = random_integer_symmetric(rng1, 5)
    m2 = random_integer_symmetric(rng2, 5)
    assert m1.rows == m2.rows
    g1 = random_connected_graph(random.Random(6), 6)
    g2 = random_connected_graph(random.Random(6), 6)
    assert g1.adj == g2.adj


def test_every_small_graph_has_no_violation():
    for n in range(2, 6):
        for g in enumerate_connected(n):
            v = check_bound(g)
            assert v.status != "violation"
