"""Executable checks for the eigenvalue-distribution bound and its lemma suite.

The main bound check decides m_G[n-d+2, n] <= n-d exactly and classifies
equality graphs against the canonical families. Supporting inequality checks
(Weyl, interlacing, the max-degree bound, the complement identity) verify
their claims numerically with a fixed slack, with exact certificates wherever
the claim is an algebraic yes/no fact.

Strict family bounds are certified exactly by root-count bracketing:
mu_k < c holds iff fewer than k eigenvalues are >= c. The multiplicity of
the boundary value itself is reported as a diagnostic (it is legitimately
nonzero for some families, at indices above k).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .enumeration import are_isomorphic, enumerate_connected
from .families import (
    FamilyMatch,
    build,
    build_gndra,
    build_gndt,
    build_h_ab,
    build_h_abc,
    build_p_plusplus,
    canonical_equality_specs,
)
from .graphs import Graph, complement, delete_edge, diameter, is_connected, is_path_graph
from .spectra import (
    IntegerSymmetricMatrix,
    count_roots_geq,
    eigenvalue_equals,
    integer_symmetric,
    laplacian,
    laplacian_char_poly,
    laplacian_spectrum,
    m_interval,
    multiplicity_at,
    numeric_spectrum,
)

SLACK = 1e-8

STRICT = "strict"
EQUALITY = "equality"
VIOLATION = "violation"
NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of the main bound m_G[n-d+2, n] <= n-d on one graph."""

    n: int
    d: int
    m: int | None
    bound: int | None
    status: str


@dataclass(frozen=True)
class LemmaReport:
    """One verified claim instance: what was claimed, what was computed."""

    lemma: str
    params: dict
    claim: str
    passed: bool
    details: dict = field(default_factory=dict)


def check_bound(g: Graph) -> BoundVerdict:
    """Exact bound check; paths and diameter <= 1 are not applicable."""
    if not is_connected(g):
        raise ValueError("bound check requires a connected graph")
    d = diameter(g)
    n = g.n
    if d < 2:
        return BoundVerdict(n, d, None, None, NOT_APPLICABLE)
    m = m_interval(g, n - d + 2, n).count
    bound = n - d
    if is_path_graph(g):
        return BoundVerdict(n, d, m, bound, NOT_APPLICABLE)
    if m < bound:
        status = STRICT
    elif m == bound:
        status = EQUALITY
    else:
        status = VIOLATION
    return BoundVerdict(n, d, m, bound, status)


def classify_equality(g: Graph) -> FamilyMatch:
    """Match an equality graph against the canonical family parameter space."""
    verdict = check_bound(g)
    if verdict.status != EQUALITY:
        raise ValueError(f"classify_equality needs an equality graph, got {verdict.status}")
    for spec in canonical_equality_specs(g.n, verdict.d):
        witness = are_isomorphic(g, build(spec))
        if witness is not None:
            return FamilyMatch(spec, witness)
    return FamilyMatch(None, None)


# ---------------------------------------------------------------------------
# Inequality checks on matrices and graphs.
# ---------------------------------------------------------------------------


def weyl_check(a: IntegerSymmetricMatrix, b: IntegerSymmetricMatrix, i: int, j: int) -> LemmaReport:
    """rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B), within slack."""
    if a.n != b.n:
        raise ValueError("order mismatch")
    n = a.n
    if not (1 <= i <= n and 1 <= j <= n and i + j - 1 <= n):
        raise ValueError(f"need 1 <= i, j and i+j-1 <= n, got i={i}, j={j}, n={n}")
    lhs = numeric_spectrum(a + b).mu(i + j - 1)
    rhs = numeric_spectrum(a).mu(i) + numeric_spectrum(b).mu(j)
    margin = rhs - lhs
    return LemmaReport(
        lemma="weyl",
        params={"n": n, "i": i, "j": j},
        claim="rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B)",
        passed=margin >= -SLACK,
        details={"lhs": lhs, "rhs": rhs, "margin": margin},
    )


def submatrix_interlacing_check(m: IntegerSymmetricMatrix, rows) -> LemmaReport:
    """rho_{n-p+i}(M) <= rho_i(B) <= rho_i(M) for a principal submatrix B."""
    sub = m.submatrix(rows)
    full = numeric_spectrum(m)
    part = numeric_spectrum(sub)
    n, p = m.n, sub.n
    worst = float("inf")
    for i in range(1, p + 1):
        worst = min(worst, part.mu(i) - full.mu(n - p + i))
        worst = min(worst, full.mu(i) - part.mu(i))
    return LemmaReport(
        lemma="interlacing",
        params={"n": n, "p": p},
        claim="rho_{n-p+i}(M) <= rho_i(B) <= rho_i(M)",
        passed=worst >= -SLACK,
        details={"min_margin": worst},
    )


def edge_interlacing_check(g: Graph, e: tuple[int, int]) -> LemmaReport:
    """Full edge-deletion interleaving chain, ending at mu_n = 0 on both sides."""
    h = delete_edge(g, e)
    sg = laplacian_spectrum(g)
    sh = laplacian_spectrum(h)
    n = g.n
    worst = float("inf")
    for i in range(1, n):
        worst = min(worst, sg.mu(i) - sh.mu(i))
        worst = min(worst, sh.mu(i) - sg.mu(i + 1))
    zeros_ok = abs(sg.mu(n)) <= SLACK and abs(sh.mu(n)) <= SLACK
    return LemmaReport(
        lemma="edge-interlacing",
        params={"n": n, "edge": list(e)},
        claim="mu_i(G) >= mu_i(G-e) >= mu_{i+1}(G), mu_n = 0 both sides",
        passed=worst >= -SLACK and zeros_ok,
        details={"min_margin": worst, "zeros_ok": zeros_ok},
    )


def max_degree_bound_check(g: Graph) -> LemmaReport:
    """mu_1 >= Delta+1, with the exact equality-iff-(Delta = n-1) test when connected."""
    degs = g.degrees()
    delta = max(degs) if degs else 0
    if delta < 1:
        raise ValueError("max-degree bound needs at least one edge")
    p = laplacian_char_poly(g)
    geq_exact = count_roots_geq(p, delta + 1) >= 1
    mu1 = laplacian_spectrum(g).mu(1)
    details: dict = {"delta": delta, "mu1": mu1, "margin": mu1 - (delta + 1)}
    passed = geq_exact
    if is_connected(g):
        equality_exact = eigenvalue_equals(g, 1, delta + 1)
        expected = delta == g.n - 1
        details["equality_exact"] = equality_exact
        details["delta_is_n_minus_1"] = expected
        passed = passed and (equality_exact == expected)
    return LemmaReport(
        lemma="max-degree",
        params={"n": g.n},
        claim="mu_1 >= Delta+1; equality iff Delta = n-1 when connected",
        passed=passed,
        details=details,
    )


def complement_identity_check(g: Graph) -> LemmaReport:
    """mu_i(G) + mu_{n-i}(complement) = n for i = 1..n-1.

    Checked numerically for every index and exactly at every integer value
    via characteristic-polynomial multiplicities.
    """
    n = g.n
    if n < 2:
        raise ValueError("complement identity needs n >= 2")
    h = complement(g)
    sg = laplacian_spectrum(g)
    sh = laplacian_spectrum(h)
    worst = max(abs(sg.mu(i) + sh.mu(n - i) - n) for i in range(1, n))
    pg = laplacian_char_poly(g)
    ph = laplacian_char_poly(h)
    exact_ok = True
    for z in range(n + 1):
        lhs = multiplicity_at(ph, z)
        rhs = multiplicity_at(pg, n - z) - (1 if z == n else 0) + (1 if z == 0 else 0)
        if lhs != rhs:
            exact_ok = False
            break
    return LemmaReport(
        lemma="complement",
        params={"n": n},
        claim="mu_i(G) + mu_{n-i}(complement(G)) = n for i = 1..n-1",
        passed=worst <= SLACK and exact_ok,
        details={"max_error": worst, "integer_multiplicities_ok": exact_ok},
    )


# ---------------------------------------------------------------------------
# Family lemmas: exact equalities and exactly certified strict bounds.
# ---------------------------------------------------------------------------


def _strict_bound_report(
    lemma: str, params: dict, g: Graph, k: int, boundary: int, claim: str
) -> LemmaReport:
    """Certify mu_k(g) < boundary exactly, with numeric margin as diagnostic."""
    p = laplacian_char_poly(g)
    strict_exact = count_roots_geq(p, boundary) <= k - 1
    mu = laplacian_spectrum(g).mu(k)
    return LemmaReport(
        lemma=lemma,
        params=params,
        claim=claim,
        passed=strict_exact,
        details={
            "strict_exact": strict_exact,
            "margin": boundary - mu,
            "boundary": boundary,
            "boundary_multiplicity": multiplicity_at(p, boundary),
        },
    )


def verify_family_lemma(lemma_id: str, params: tuple) -> LemmaReport:
    """Verify one family-lemma instance; equalities exactly, strict bounds exactly."""
    if lemma_id == "2.6":
        n, d, t = params
        g = build_gndt(n, d, t)
        p = laplacian_char_poly(g)
        m = m_interval(g, n - d + 2, n).count
        mult = multiplicity_at(p, n - d + 2)
        mu_eq = eigenvalue_equals(g, n - d, n - d + 2)
        return LemmaReport(
            lemma="2.6",
            params={"n": n, "d": d, "t": t},
            claim="m[n-d+2, n] = n-d, mu_{n-d} = n-d+2, boundary multiplicity >= n-d-1",
            passed=(m == n - d) and mu_eq and mult >= n - d - 1,
            details={"m": m, "bound": n - d, "mu_exact": mu_eq, "boundary_multiplicity": mult},
        )
    if lemma_id == "2.7":
        n, d, t, a = params
        g = build_gndra(n, d, t, a)
        p = laplacian_char_poly(g)
        m = m_interval(g, n - d + 2, n).count
        mult = multiplicity_at(p, n - d + 2)
        return LemmaReport(
            lemma="2.7",
            params={"n": n, "d": d, "t": t, "a": a},
            claim="m[n-d+2, n] = n-d, boundary multiplicity >= n-d-1",
            passed=(m == n - d) and mult >= n - d - 1,
            details={"m": m, "bound": n - d, "boundary_multiplicity": mult},
        )
    if lemma_id == "4.1":
        n, d, t, a, b = params
        g = build_h_ab(n, d, t, a, b)
        return _strict_bound_report(
            "4.1",
            {"n": n, "d": d, "t": t, "a": a, "b": b},
            g,
            n - d,
            n - d + 2,
            "mu_{n-d} < n-d+2",
        )
    if lemma_id == "4.2":
        n, d, t, a, b, c = params
        g = build_h_abc(n, d, t, a, b, c)
        return _strict_bound_report(
            "4.2",
            {"n": n, "d": d, "t": t, "a": a, "b": b, "c": c},
            g,
            n - d,
            n - d + 2,
            "mu_{n-d} < n-d+2",
        )
    if lemma_id == "4.3":
        n, t = params
        g = build_p_plusplus(n, t)
        return _strict_bound_report("4.3", {"n": n, "t": t}, g, 2, 4, "mu_2 < 4")
    raise ValueError(f"unknown family lemma id {lemma_id!r}")


EDGE_CLASSES_44 = ("vt-1", "vt", "vt+1")
EDGE_CLASSES_45 = ("vt-1:a", "vt:a", "vt:b", "vt+1:a", "vt+1:b", "vt+2:b")


def _deleted_edge(g: Graph, lemma_id: str, params: tuple, edge_class: str) -> tuple[int, int]:
    if lemma_id == "4.4":
        n, d, t = params
        offsets = {"vt-1": t - 2, "vt": t - 1, "vt+1": t}
        if edge_class not in offsets:
            raise ValueError(f"edge class for 4.4 must be one of {EDGE_CLASSES_44}")
        return offsets[edge_class], d + 1  # any clique vertex; the first is representative
    n, d, t, a = params
    if edge_class not in EDGE_CLASSES_45:
        raise ValueError(f"edge class for 4.5 must be one of {EDGE_CLASSES_45}")
    path_part, side = edge_class.split(":")
    offsets = {"vt-1": t - 2, "vt": t - 1, "vt+1": t, "vt+2": t + 1}
    w = d + 1 if side == "a" else d + 1 + a
    return offsets[path_part], w


def verify_edge_deleted_lemma(lemma_id: str, params: tuple, edge_class: str) -> LemmaReport:
    """Strict bound after deleting one representative path-to-clique edge."""
    if lemma_id == "4.4":
        n, d, t = params
        if not (2 <= d <= n - 3 and 2 <= t <= d):
            raise ValueError(f"4.4 requires 2 <= d <= n-3 and 2 <= t <= d, got {params}")
        g = build_gndt(n, d, t)
        report_params = {"n": n, "d": d, "t": t, "edge_class": edge_class}
    elif lemma_id == "4.5":
        n, d, t, a = params
        if not (3 <= d <= n - 3):
            raise ValueError(f"4.5 requires 3 <= d <= n-3, got {params}")
        g = build_gndra(n, d, t, a)
        report_params = {"n": n, "d": d, "t": t, "a": a, "edge_class": edge_class}
    else:
        raise ValueError(f"unknown edge-deleted lemma id {lemma_id!r}")
    e = _deleted_edge(g, lemma_id, params, edge_class)
    if not g.has_edge(*e):
        raise ValueError(f"edge class {edge_class} is empty for parameters {params}")
    reduced = delete_edge(g, e)
    n = g.n
    d_param = params[1]
    return _strict_bound_report(
        lemma_id, report_params, reduced, n - d_param, n - d_param + 2, "mu_{n-d}(G-e) < n-d+2"
    )


# ---------------------------------------------------------------------------
# Parameter grids and randomized suites (shared by the CLI and the tests).
# ---------------------------------------------------------------------------


def lemma_grid(lemma_id: str, max_n: int) -> list[tuple]:
    """All valid parameter tuples for a family lemma with n <= max_n."""
    grid: list[tuple] = []
    if lemma_id in ("2.6", "4.4"):
        d_cap = -3 if lemma_id == "4.4" else -2
        for n in range(4, max_n + 1):
            for d in range(2, n + d_cap + 1):
                for t in range(2, d + 1):
                    grid.append((n, d, t))
    elif lemma_id in ("2.7", "4.5"):
        d_cap = -3 if lemma_id == "4.5" else -2
        for n in range(5, max_n + 1):
            for d in range(3, n + d_cap + 1):
                for t in range(2, d):
                    for a in range(1, n - d - 1):
                        grid.append((n, d, t, a))
    elif lemma_id == "4.1":
        for n in range(8, max_n + 1):
            for d in range(5, n - 2):
                for t in range(3, d - 1):
                    for a in range(1, n - d - 1):
                        grid.append((n, d, t, a, n - d - 1 - a))
    elif lemma_id == "4.2":
        for n in range(9, max_n + 1):
            for d in range(5, n - 2):
                for t in range(3, d - 1):
                    for a in range(1, n - d - 2):
                        for b in range(1, n - d - 1 - a):
                            grid.append((n, d, t, a, b, n - d - 1 - a - b))
    elif lemma_id == "4.3":
        for n in range(4, max_n + 1):
            for t in range(1, n - 2):
                grid.append((n, t))
    else:
        raise ValueError(f"unknown lemma id {lemma_id!r}")
    return grid


def run_family_lemma_grid(lemma_id: str, max_n: int) -> list[LemmaReport]:
    grid = lemma_grid(lemma_id, max_n)
    if lemma_id in ("2.6", "2.7", "4.1", "4.2", "4.3"):
        return [verify_family_lemma(lemma_id, params) for params in grid]
    classes = EDGE_CLASSES_44 if lemma_id == "4.4" else EDGE_CLASSES_45
    return [
        verify_edge_deleted_lemma(lemma_id, params, cls) for params in grid for cls in classes
    ]


def random_integer_symmetric(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> IntegerSymmetricMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    return integer_symmetric(rows)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = Graph(n, tuple(adj))
        if is_connected(g):
            return g


def run_weyl_suite(trials: int = 1000, seed: int = 42, max_n: int = 8) -> LemmaReport:
    """Seeded random Weyl inequality sweep over all valid (i, j) pairs."""
    rng = random.Random(seed)
    checked = 0
    min_margin = float("inf")
    failures = 0
    for _ in range(trials):
        n = rng.randint(2, max_n)
        a = random_integer_symmetric(rng, n)
        b = random_integer_symmetric(rng, n)
        sa = numeric_spectrum(a)
        sb = numeric_spectrum(b)
        sab = numeric_spectrum(a + b)
        for i in range(1, n + 1):
            for j in range(1, n + 2 - i):
                margin = sa.mu(i) + sb.mu(j) - sab.mu(i + j - 1)
                checked += 1
                min_margin = min(min_margin, margin)
                if margin < -SLACK:
                    failures += 1
    return LemmaReport(
        lemma="weyl",
        params={"trials": trials, "seed": seed, "max_n": max_n},
        claim="rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B) over random integer pairs",
        passed=failures == 0,
        details={"checked": checked, "failures": failures, "min_margin": min_margin},
    )


def run_interlacing_suite(trials: int = 1000, seed: int = 42, max_n: int = 8) -> LemmaReport:
    """Seeded random principal-submatrix interlacing sweep on graph Laplacians."""
    rng = random.Random(seed)
    checked = 0
    failures = 0
    min_margin = float("inf")
    for _ in range(trials):
        n = rng.randint(2, max_n)
        g = random_connected_graph(rng, n)
        p = rng.randint(1, n)
        rows = rng.sample(range(n), p)
        report = submatrix_interlacing_check(laplacian(g), rows)
        checked += 1
        min_margin = min(min_margin, report.details["min_margin"])
        if not report.passed:
            failures += 1
    return LemmaReport(
        lemma="interlacing",
        params={"trials": trials, "seed": seed, "max_n": max_n},
        claim="principal submatrix interlacing on random connected Laplacians",
        passed=failures == 0,
        details={"checked": checked, "failures": failures, "min_margin": min_margin},
    )


def run_edge_interlacing_exhaustive(max_n: int = 6) -> LemmaReport:
    """Edge-deletion interlacing over every (connected class, edge), n <= max_n."""
    checked = 0
    failures = 0
    min_margin = float("inf")
    for n in range(2, max_n + 1):
        for g in enumerate_connected(n):
            for e in g.edges():
                report = edge_interlacing_check(g, e)
                checked += 1
                min_margin = min(min_margin, report.details["min_margin"])
                if not report.passed:
                    failures += 1
    return LemmaReport(
        lemma="edge-interlacing",
        params={"max_n": max_n},
        claim="edge-deletion interlacing chain, exhaustive over small graphs",
        passed=failures == 0,
        details={"checked": checked, "failures": failures, "min_margin": min_margin},
    )


def run_complement_exhaustive(max_n: int = 7) -> LemmaReport:
    """Complement identity over every connected class with n <= max_n."""
    checked = 0
    failures = 0
    for n in range(2, max_n + 1):
        for g in enumerate_connected(n):
            report = complement_identity_check(g)
            checked += 1
            if not report.passed:
                failures += 1
    return LemmaReport(
        lemma="complement",
        params={"max_n": max_n},
        claim="complement spectrum identity, exhaustive over small graphs",
        passed=failures == 0,
        details={"checked": checked, "failures": failures},
    )


def run_max_degree_exhaustive(max_n: int = 6) -> LemmaReport:
    """Max-degree bound with the equality characterization, connected n <= max_n."""
    checked = 0
    failures = 0
    for n in range(2, max_n + 1):
        for g in enumerate_connected(n):
            report = max_degree_bound_check(g)
            checked += 1
            if not report.passed:
                failures += 1
    return LemmaReport(
        lemma="max-degree",
        params={"max_n": max_n},
        claim="mu_1 >= Delta+1 with equality iff Delta = n-1, exhaustive",
        passed=failures == 0,
        details={"checked": checked, "failures": failures},
    )
