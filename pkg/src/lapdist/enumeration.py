"""Exhaustive connected-graph enumeration, canonical forms, isomorphism.

The canonical form of a graph is the minimum of its adjacency bit-string
(upper triangle, column-major, first pair most significant) over all vertex
permutations, rendered as the graph6 line of the minimizing relabeling.

For n <= 7 the enumerator sweeps all 2^C(n,2) labeled graphs in increasing
bit-string order, keeps connected ones, and marks whole permutation orbits:
the first labeled graph seen in each orbit is exactly its canonical form.
n = 8 (opt-in) extends the 7-vertex classes by one vertex and deduplicates
the candidates by canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .graphs import Graph, diameter, graph6_encode

ENUM_MAX_N = 7
ENUM_MAX_N_BIG = 8

# Published only to be reproduced: the test suite recomputes these counts.
CONNECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def _pair_positions(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def mask_of_graph(g: Graph) -> int:
    """Pack the upper triangle into an int, first pair most significant."""
    pairs = _pair_positions(g.n)
    p = len(pairs)
    m = 0
    for k, (u, v) in enumerate(pairs):
        if g.adj[u] >> v & 1:
            m |= 1 << (p - 1 - k)
    return m


def graph_of_mask(n: int, m: int) -> Graph:
    pairs = _pair_positions(n)
    p = len(pairs)
    adj = [0] * n
    for k, (u, v) in enumerate(pairs):
        if m >> (p - 1 - k) & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def canonical_form(g: Graph) -> bytes:
    """Relabeling-invariant certificate: graph6 of the minimal relabeling."""
    graph, _ = canonical_graph(g)
    return graph6_encode(graph).encode("ascii")


def canonical_graph(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Minimal relabeling of g and the permutation achieving it.

    perm[i] is the original vertex placed at canonical position i. The search
    extends a placement one vertex at a time; column-major bit order means a
    placement prefix fixes a bit-string prefix, so worse branches prune early.
    """
    n = g.n
    if n == 0:
        return g, ()
    adj = g.adj
    best_bits: list[int] | None = None
    best_perm: list[int] = []
    placed: list[int] = []
    used = [False] * n
    bits: list[int] = []

    def recurse() -> None:
        nonlocal best_bits, best_perm
        r = len(placed)
        if r == n:
            if best_bits is None or bits < best_bits:
                best_bits = bits.copy()
                best_perm = placed.copy()
            return
        base = len(bits)
        cands = []
        for v in range(n):
            if not used[v]:
                ext = [adj[placed[i]] >> v & 1 for i in range(r)]
                cands.append((ext, v))
        cands.sort()
        for ext, v in cands:
            # Prune only while the current prefix ties the incumbent; on a
            # strictly smaller prefix every completion is an improvement.
            if best_bits is not None and bits == best_bits[:base]:
                if ext > best_bits[base : base + r]:
                    break  # candidates are sorted; everything later is worse
            bits.extend(ext)
            used[v] = True
            placed.append(v)
            recurse()
            placed.pop()
            used[v] = False
            del bits[base:]

    recurse()
    assert best_bits is not None
    p = n * (n - 1) // 2
    mask = 0
    for k, bit in enumerate(best_bits):
        if bit:
            mask |= 1 << (p - 1 - k)
    return graph_of_mask(n, mask), tuple(best_perm)


def _degree_profile(g: Graph):
    degs = g.degrees()
    return sorted((degs[v], sorted(degs[u] for u in g.neighbors(v))) for v in range(g.n))


def are_isomorphic(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Explicit isomorphism g -> h (witness[v] = image of v), or None.

    Backtracking over vertex maps with degree and neighbor-degree-multiset
    pruning; the witness is re-verified before being returned.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if _degree_profile(g) != _degree_profile(h):
        return None
    n = g.n
    if n == 0:
        return ()
    g_degs = g.degrees()
    h_degs = h.degrees()
    h_profiles = [tuple(sorted(h_degs[u] for u in h.neighbors(v))) for v in range(n)]
    g_profiles = [tuple(sorted(g_degs[u] for u in g.neighbors(v))) for v in range(n)]

    order: list[int] = []
    remaining = set(range(n))
    while remaining:
        touching = [v for v in remaining if any(g.adj[v] >> u & 1 for u in order)]
        pool = touching or sorted(remaining)
        v = max(pool, key=lambda x: (g_degs[x], -x))
        order.append(v)
        remaining.remove(v)

    image = [-1] * n
    used_h = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used_h[w] or h_degs[w] != g_degs[v] or h_profiles[w] != g_profiles[v]:
                continue
            ok = True
            for u in order[:i]:
                if (g.adj[v] >> u & 1) != (h.adj[w] >> image[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used_h[w] = True
            if extend(i + 1):
                return True
            used_h[w] = False
            image[v] = -1
        return False

    if not extend(0):
        return None
    witness = tuple(image)
    assert all(
        h.adj[witness[u]] >> witness[v] & 1 for u, v in g.edges()
    ), "isomorphism witness failed verification"
    return witness


@lru_cache(maxsize=4)
def _orbit_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """(src, shifts): src[pi, k] = source bit position of pair k under pi."""
    pairs = _pair_positions(n)
    p = len(pairs)
    pos = {}
    for k, (u, v) in enumerate(pairs):
        pos[(u, v)] = k
    perms = list(permutations(range(n)))
    src = np.empty((len(perms), p), dtype=np.int64)
    for row, perm in enumerate(perms):
        for k, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            src[row, k] = pos[(min(a, b), max(a, b))]
    shifts = np.array([p - 1 - k for k in range(p)], dtype=np.int64)
    return src, shifts


def _connected_mask_table(n: int) -> np.ndarray:
    """Boolean table over all 2^C(n,2) packed masks: is the graph connected."""
    pairs = _pair_positions(n)
    p = len(pairs)
    total = 1 << p
    masks = np.arange(total, dtype=np.int64)
    rows = np.zeros((total, n), dtype=np.uint8)
    for k, (u, v) in enumerate(pairs):
        bit = (masks >> (p - 1 - k) & 1).astype(np.uint8)
        rows[:, u] |= bit << v
        rows[:, v] |= bit << u
    reach = np.ones(total, dtype=np.uint8)
    for _ in range(n):
        for v in range(n):
            sel = (reach >> v & 1).astype(bool)
            reach[sel] |= rows[sel, v]
    return reach == (1 << n) - 1


def enumerate_connected(n: int, *, allow_big: bool = False) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Representatives are the canonical (minimum bit-string) labelings, in
    increasing bit-string order. n = 8 must be opted into explicitly.
    """
    if n < 1:
        raise ValueError(f"enumeration needs n >= 1, got {n}")
    if n > ENUM_MAX_N and not (allow_big and n <= ENUM_MAX_N_BIG):
        raise ValueError(
            f"enumeration supports n <= {ENUM_MAX_N} (n = {ENUM_MAX_N_BIG} behind allow_big), got {n}"
        )
    return list(_enumerate_cached(n))


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    if n == ENUM_MAX_N_BIG:
        return tuple(_enumerate_by_extension(n))
    connected = _connected_mask_table(n)
    src, shifts = _orbit_tables(n)
    handled = np.zeros(connected.shape[0], dtype=bool)
    reps: list[Graph] = []
    chunk = 1 << 16
    for base in range(0, connected.shape[0], chunk):
        for off in np.flatnonzero(connected[base : base + chunk]):
            m = base + int(off)
            if handled[m]:
                continue
            reps.append(graph_of_mask(n, m))
            bits = (m >> shifts) & 1
            orbit = (bits[src] << shifts).sum(axis=1)
            handled[orbit] = True
    return tuple(reps)


def _enumerate_by_extension(n: int) -> list[Graph]:
    """Classes on n vertices from (n-1)-vertex classes plus one new vertex."""
    seen: set[bytes] = set()
    reps: list[tuple[bytes, Graph]] = []
    for core in enumerate_connected(n - 1):
        adj = list(core.adj)
        for nbrs in range(1, 1 << core.n):
            cand_adj = adj + [nbrs]
            cand = list(cand_adj)
            for v in range(core.n):
                if nbrs >> v & 1:
                    cand[v] |= 1 << core.n
            g = Graph(n, tuple(cand))
            canon, _ = canonical_graph(g)
            form = graph6_encode(canon).encode("ascii")
            if form not in seen:
                seen.add(form)
                reps.append((form, canon))
    reps.sort(key=lambda item: item[0])
    return [g for _, g in reps]


@dataclass(frozen=True)
class CensusRecord:
    """Equality census for one (order, diameter) class."""

    n: int
    d: int
    total_classes: int
    equality_graph6: tuple[str, ...]
    family_matches: tuple[tuple[str, str], ...]  # (graph6, family spec text)
    unmatched_graph6: tuple[str, ...]
    missing_specs: tuple[str, ...]
    violations_graph6: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.unmatched_graph6 and not self.missing_specs and not self.violations_graph6


def extremal_census(n: int, d: int, *, allow_big: bool = False, classes=None) -> CensusRecord:
    """Exact equality census at (n, d) against the canonical family list.

    Every connected class of diameter d is bound-checked exactly; equality
    graphs are classified, and the resulting set is compared in both
    directions with the canonical family specs.
    """
    from .checks import EQUALITY, VIOLATION, check_bound, classify_equality
    from .families import canonical_equality_specs, build

    if not 2 <= d <= n - 2:
        raise ValueError(f"census needs 2 <= d <= n-2, got n={n}, d={d}")
    if classes is None:
        classes = enumerate_connected(n, allow_big=allow_big)
    in_class = [g for g in classes if diameter(g) == d]
    equality = []
    violations = []
    for g in in_class:
        verdict = check_bound(g)
        if verdict.status == EQUALITY:
            equality.append(g)
        elif verdict.status == VIOLATION:
            violations.append(g)

    specs = canonical_equality_specs(n, d)
    spec_forms = {}
    for spec in specs:
        spec_forms[canonical_form(build(spec))] = spec.text()

    matches = []
    unmatched = []
    matched_forms = set()
    for g in equality:
        match = classify_equality(g)
        g6 = canonical_form(g).decode("ascii")
        if match.spec is None:
            unmatched.append(g6)
        else:
            matches.append((g6, match.spec.text()))
            matched_forms.add(canonical_form(g))
    missing = sorted(
        text for form, text in spec_forms.items() if form not in matched_forms
    )
    return CensusRecord(
        n=n,
        d=d,
        total_classes=len(in_class),
        equality_graph6=tuple(sorted(canonical_form(g).decode("ascii") for g in equality)),
        family_matches=tuple(sorted(matches)),
        unmatched_graph6=tuple(sorted(unmatched)),
        missing_specs=tuple(missing),
        violations_graph6=tuple(sorted(canonical_form(g).decode("ascii") for g in violations)),
    )
