"""Constructors for the extremal graph families and their parameter algebra.

Every family starts from a path v_1 ... v_{d+1} on indices 0..d (labels
"v1".."v{d+1}") and attaches clique vertices after the path with stable
labels, so tests can address named vertices. Each family has a mirror
symmetry (reverse the path); canonicalize() maps a spec onto the mirror
representative with the smaller anchor parameter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, add_edges, disjoint_union, from_edges, path

GNDT = "gndt"
GNDRA = "gndra"
H_AB = "hab"
H_ABC = "habc"
P_PLUSPLUS = "ppp"

_KINDS = (GNDT, GNDRA, H_AB, H_ABC, P_PLUSPLUS)


class FamilyParameterError(ValueError):
    """Family parameters violate the validity ranges."""


@dataclass(frozen=True)
class FamilySpec:
    """Validated parameters naming one family graph."""

    kind: str
    n: int
    d: int | None = None
    t: int | None = None
    r: int | None = None
    a: int | None = None
    b: int | None = None
    c: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise FamilyParameterError(f"unknown family kind {self.kind!r}")
        _VALIDATORS[self.kind](self)

    def text(self) -> str:
        """Stable text form, e.g. 'gndt:n=9,d=4,t=3'."""
        parts = [f"{name}={getattr(self, name)}" for name in "ndtrabc" if getattr(self, name) is not None]
        return f"{self.kind}:" + ",".join(parts)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyParameterError(message)


def _validate_gndt(s: FamilySpec) -> None:
    _require(s.r is None and s.a is None and s.b is None and s.c is None, "gndt takes n, d, t only")
    _require(s.d is not None and s.t is not None, "gndt needs n, d, t")
    _require(2 <= s.d <= s.n - 2, f"gndt requires 2 <= d <= n-2 (got n={s.n}, d={s.d})")
    _require(2 <= s.t <= s.d, f"gndt requires 2 <= t <= d (got t={s.t}, d={s.d})")


def _validate_gndra(s: FamilySpec) -> None:
    _require(s.t is None and s.b is None and s.c is None, "gndra takes n, d, r, a only")
    _require(s.d is not None and s.r is not None and s.a is not None, "gndra needs n, d, r, a")
    _require(3 <= s.d <= s.n - 2, f"gndra requires 3 <= d <= n-2 (got n={s.n}, d={s.d})")
    _require(2 <= s.r <= s.d - 1, f"gndra requires 2 <= r <= d-1 (got r={s.r}, d={s.d})")
    _require(1 <= s.a <= s.n - s.d - 2, f"gndra requires 1 <= a <= n-d-2 (got a={s.a}, n={s.n}, d={s.d})")


def _validate_h_ab(s: FamilySpec) -> None:
    _require(s.r is None and s.c is None, "hab takes n, d, t, a, b only")
    _require(None not in (s.d, s.t, s.a, s.b), "hab needs n, d, t, a, b")
    _require(3 <= s.t <= s.d - 2, f"hab requires 3 <= t <= d-2 (got t={s.t}, d={s.d})")
    _require(s.d <= s.n - 3, f"hab requires d <= n-3 (got d={s.d}, n={s.n})")
    _require(s.a >= 1 and s.b >= 1, f"hab requires a, b >= 1 (got a={s.a}, b={s.b})")
    _require(s.a + s.b == s.n - s.d - 1, f"hab requires a+b = n-d-1 (got a+b={s.a + s.b}, n-d-1={s.n - s.d - 1})")


def _validate_h_abc(s: FamilySpec) -> None:
    _require(s.r is None, "habc takes n, d, t, a, b, c only")
    _require(None not in (s.d, s.t, s.a, s.b, s.c), "habc needs n, d, t, a, b, c")
    _require(3 <= s.t <= s.d - 2, f"habc requires 3 <= t <= d-2 (got t={s.t}, d={s.d})")
    _require(s.d <= s.n - 3, f"habc requires d <= n-3 (got d={s.d}, n={s.n})")
    _require(s.a >= 1 and s.b >= 1 and s.c >= 1, f"habc requires a, b, c >= 1 (got a={s.a}, b={s.b}, c={s.c})")
    _require(
        s.a + s.b + s.c == s.n - s.d - 1,
        f"habc requires a+b+c = n-d-1 (got a+b+c={s.a + s.b + s.c}, n-d-1={s.n - s.d - 1})",
    )


def _validate_p_plusplus(s: FamilySpec) -> None:
    _require(s.d is None and s.r is None and s.a is None and s.b is None and s.c is None, "ppp takes n, t only")
    _require(s.t is not None, "ppp needs n, t")
    _require(1 <= s.t <= s.n - 3, f"ppp requires 1 <= t <= n-3 (got t={s.t}, n={s.n})")


_VALIDATORS = {
    GNDT: _validate_gndt,
    GNDRA: _validate_gndra,
    H_AB: _validate_h_ab,
    H_ABC: _validate_h_abc,
    P_PLUSPLUS: _validate_p_plusplus,
}


@dataclass(frozen=True)
class FamilyMatch:
    """Classification result: the matched canonical spec plus a verified
    isomorphism witness (image of each vertex), or spec=None for no match."""

    spec: FamilySpec | None
    witness: tuple[int, ...] | None


def parse_spec(text: str) -> FamilySpec:
    """Parse the stable text form, e.g. 'gndt:n=9,d=4,t=3'."""
    try:
        kind, _, body = text.strip().partition(":")
        kind = kind.strip().lower()
        params: dict[str, int] = {}
        for item in body.split(","):
            key, _, value = item.partition("=")
            params[key.strip()] = int(value.strip())
    except ValueError as exc:
        raise FamilyParameterError(f"cannot parse family spec {text!r}: {exc}") from None
    if kind not in _KINDS:
        raise FamilyParameterError(f"unknown family kind {kind!r}")
    if "n" not in params:
        raise FamilyParameterError(f"family spec {text!r} is missing n")
    allowed = set("ndtrabc")
    extra = set(params) - allowed
    if extra:
        raise FamilyParameterError(f"unknown parameters {sorted(extra)} in {text!r}")
    return FamilySpec(kind=kind, **params)


def _path_with_clique(n: int, d: int) -> Graph:
    """Labeled path v1..v{d+1} plus a clique w1..w{n-d-1} on the remaining vertices."""
    p = path(d + 1)
    p = Graph(p.n, p.adj, tuple(f"v{i + 1}" for i in range(d + 1)))
    k = n - d - 1
    clique_edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    clique = from_edges(k, clique_edges, [f"w{i + 1}" for i in range(k)])
    return disjoint_union(p, clique)


def build_gndt(n: int, d: int, t: int) -> Graph:
    """Path plus a clique fully joined to the three path vertices v_{t-1}, v_t, v_{t+1}."""
    FamilySpec(GNDT, n, d=d, t=t)
    g = _path_with_clique(n, d)
    new = [(w, v - 1) for w in range(d + 1, n) for v in (t - 1, t, t + 1)]
    return add_edges(g, new)


def build_gndra(n: int, d: int, r: int, a: int) -> Graph:
    """Path plus a clique joined to v_r and v_{r+1}; a clique vertices also
    reach v_{r-1} and the remaining ones reach v_{r+2}."""
    FamilySpec(GNDRA, n, d=d, r=r, a=a)
    g = _path_with_clique(n, d)
    new = [(w, v - 1) for w in range(d + 1, n) for v in (r, r + 1)]
    new += [(w, r - 2) for w in range(d + 1, d + 1 + a)]
    new += [(w, r + 1) for w in range(d + 1 + a, n)]
    return add_edges(g, new)


def build_h_ab(n: int, d: int, t: int, a: int, b: int) -> Graph:
    """Path plus cliques K_a and K_b; K_a joins v_{t-2}..v_t, K_b joins v_t..v_{t+2}."""
    FamilySpec(H_AB, n, d=d, t=t, a=a, b=b)
    p = path(d + 1)
    labels = [f"v{i + 1}" for i in range(d + 1)]
    labels += [f"a{i + 1}" for i in range(a)] + [f"b{i + 1}" for i in range(b)]
    edges = p.edges()
    a_verts = range(d + 1, d + 1 + a)
    b_verts = range(d + 1 + a, n)
    edges += [(u, v) for u in a_verts for v in a_verts if u < v]
    edges += [(u, v) for u in b_verts for v in b_verts if u < v]
    edges += [(w, v - 1) for w in a_verts for v in (t - 2, t - 1, t)]
    edges += [(w, v - 1) for w in b_verts for v in (t, t + 1, t + 2)]
    return from_edges(n, edges, labels)


def build_h_abc(n: int, d: int, t: int, a: int, b: int, c: int) -> Graph:
    """Path plus (K_a u K_b) joined to K_c; K_a joins v_{t-2}..v_t, K_b joins
    v_t..v_{t+2}, K_c joins v_{t-1}..v_{t+1}."""
    FamilySpec(H_ABC, n, d=d, t=t, a=a, b=b, c=c)
    p = path(d + 1)
    labels = [f"v{i + 1}" for i in range(d + 1)]
    labels += [f"a{i + 1}" for i in range(a)]
    labels += [f"b{i + 1}" for i in range(b)]
    labels += [f"c{i + 1}" for i in range(c)]
    edges = p.edges()
    a_verts = range(d + 1, d + 1 + a)
    b_verts = range(d + 1 + a, d + 1 + a + b)
    c_verts = range(d + 1 + a + b, n)
    for block in (a_verts, b_verts, c_verts):
        edges += [(u, v) for u in block for v in block if u < v]
    edges += [(u, w) for u in a_verts for w in c_verts]
    edges += [(u, w) for u in b_verts for w in c_verts]
    edges += [(w, v - 1) for w in a_verts for v in (t - 2, t - 1, t)]
    edges += [(w, v - 1) for w in b_verts for v in (t, t + 1, t + 2)]
    edges += [(w, v - 1) for w in c_verts for v in (t - 1, t, t + 1)]
    return from_edges(n, edges, labels)


def build_p_plusplus(n: int, t: int) -> Graph:
    """Path of order n-1 plus a vertex u adjacent to v_t and v_{t+2}."""
    FamilySpec(P_PLUSPLUS, n, t=t)
    edges = [(i, i + 1) for i in range(n - 2)]
    u = n - 1
    edges += [(u, t - 1), (u, t + 1)]
    labels = [f"v{i + 1}" for i in range(n - 1)] + ["u"]
    return from_edges(n, edges, labels)


def build(spec: FamilySpec) -> Graph:
    if spec.kind == GNDT:
        return build_gndt(spec.n, spec.d, spec.t)
    if spec.kind == GNDRA:
        return build_gndra(spec.n, spec.d, spec.r, spec.a)
    if spec.kind == H_AB:
        return build_h_ab(spec.n, spec.d, spec.t, spec.a, spec.b)
    if spec.kind == H_ABC:
        return build_h_abc(spec.n, spec.d, spec.t, spec.a, spec.b, spec.c)
    return build_p_plusplus(spec.n, spec.t)


def mirror(spec: FamilySpec) -> FamilySpec:
    """The spec obtained by reversing the path (an isomorphic graph)."""
    if spec.kind == GNDT:
        return FamilySpec(GNDT, spec.n, d=spec.d, t=spec.d + 2 - spec.t)
    if spec.kind == GNDRA:
        return FamilySpec(
            GNDRA, spec.n, d=spec.d, r=spec.d + 1 - spec.r, a=spec.n - spec.d - 1 - spec.a
        )
    raise FamilyParameterError(f"mirror is defined for gndt/gndra, not {spec.kind!r}")


def canonicalize(spec: FamilySpec) -> FamilySpec:
    """Mirror-equivalent representative with the anchor in the reduced range.

    For gndt the range is t <= floor(d/2)+1; for gndra it is
    r <= floor((d+1)/2). When r sits exactly at the mirror fixed point
    (odd d), the two sides differ only in a, so a is reduced to
    min(a, n-d-1-a) to keep one representative per isomorphism class.
    """
    if spec.kind == GNDT:
        if spec.t > spec.d // 2 + 1:
            return mirror(spec)
        return spec
    if spec.kind == GNDRA:
        if spec.r > (spec.d + 1) // 2:
            spec = mirror(spec)
        if spec.d + 1 - spec.r == spec.r:
            a = min(spec.a, spec.n - spec.d - 1 - spec.a)
            return FamilySpec(GNDRA, spec.n, d=spec.d, r=spec.r, a=a)
        return spec
    raise FamilyParameterError(f"canonicalize is defined for gndt/gndra, not {spec.kind!r}")


def canonical_equality_specs(n: int, d: int) -> list[FamilySpec]:
    """All canonical family specs whose graphs attain the bound at (n, d)."""
    if not 2 <= d <= n - 2:
        raise FamilyParameterError(f"equality families need 2 <= d <= n-2 (got n={n}, d={d})")
    specs = [FamilySpec(GNDT, n, d=d, t=t) for t in range(2, d // 2 + 2)]
    if d >= 3:
        for r in range(2, (d + 1) // 2 + 1):
            a_max = n - d - 2
            if d + 1 - r == r:
                a_max = min(a_max, (n - d - 1) // 2)
            for a in range(1, a_max + 1):
                specs.append(FamilySpec(GNDRA, n, d=d, r=r, a=a))
    return specs


def valid_gndt_specs(max_n: int, min_n: int = 4) -> list[FamilySpec]:
    """Every valid gndt spec with min_n <= n <= max_n (full t range)."""
    out = []
    for n in range(min_n, max_n + 1):
        for d in range(2, n - 1):
            for t in range(2, d + 1):
                out.append(FamilySpec(GNDT, n, d=d, t=t))
    return out


def valid_gndra_specs(max_n: int, min_n: int = 6) -> list[FamilySpec]:
    """Every valid gndra spec with min_n <= n <= max_n (full r range)."""
    out = []
    for n in range(min_n, max_n + 1):
        for d in range(3, n - 1):
            for r in range(2, d):
                for a in range(1, n - d - 1):
                    out.append(FamilySpec(GNDRA, n, d=d, r=r, a=a))
    return out
