"""Simple undirected graphs with bitset adjacency rows.

Vertices are indices 0..n-1; each adjacency row is a Python int used as a
bitset, so neighborhood operations are word-parallel. Graphs are immutable:
every operation returns a new Graph. Optional vertex labels are metadata
only and never affect the algorithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class GraphError(ValueError):
    """Invalid graph construction or graph operation."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    adj[v] is the neighbor bitset of v; bit u of adj[v] is set iff uv is an
    edge. Symmetry and loop-freeness are checked at construction.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} refers to vertices >= {self.n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        if self.labels is not None:
            if len(self.labels) != self.n or len(set(self.labels)) != self.n:
                raise GraphError("labels must be a bijection onto the vertices")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return _popcount(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(_popcount(row) for row in self.adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(_popcount(row) for row in self.adj) // 2

    def label_of(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_by_label(self, label: str) -> int:
        if self.labels is None:
            raise GraphError("graph has no labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"no vertex labeled {label!r}") from None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for order {self.n}")


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges, labels=None) -> Graph:
    """Build a graph from an explicit edge list."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for order {n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def path(n: int) -> Graph:
    """Path v_1 ... v_n (consecutive indices adjacent)."""
    if n < 1:
        raise GraphError(f"path order must be >= 1, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 1:
        raise GraphError(f"complete graph order must be >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    """Edgeless graph on n vertices (n = 0 allowed)."""
    return Graph(n, (0,) * n)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertices are re-indexed to follow g's."""
    adj = list(g.adj) + [row << g.n for row in h.adj]
    labels = None
    if g.labels is not None and h.labels is not None:
        labels = g.labels + h.labels
        if len(set(labels)) != len(labels):
            labels = None
    return Graph(g.n + h.n, tuple(adj), labels)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between g and h."""
    u = disjoint_union(g, h)
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << u.n) - 1) ^ g_mask
    adj = [row | h_mask for row in u.adj[: g.n]]
    adj += [row | g_mask for row in u.adj[g.n :]]
    return Graph(u.n, tuple(adj), u.labels)


def add_edges(g: Graph, pairs) -> Graph:
    """Add edges; adding an existing edge or a loop is an error."""
    adj = list(g.adj)
    for u, v in pairs:
        g._check_vertex(u)
        g._check_vertex(v)
        if u == v:
            raise GraphError(f"cannot add loop at vertex {u}")
        if adj[u] >> v & 1:
            raise GraphError(f"edge ({u},{v}) already present")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(g.n, tuple(adj), g.labels)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Delete one edge; deleting a non-edge is an error."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u},{v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj), g.labels)


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by the given vertex set, re-indexed in sorted order."""
    keep = sorted(set(vertices))
    if not keep:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    for v in keep:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for u in _bits(g.adj[v]):
            if u in index:
                adj[index[v]] |= 1 << index[u]
    labels = tuple(g.labels[v] for v in keep) if g.labels is not None else None
    return Graph(len(keep), tuple(adj), labels)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)), g.labels)


def relabel(g: Graph, perm) -> Graph:
    """Relabeled copy: new vertex i is old vertex perm[i]."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm must be a permutation of the vertices")
    adj = [0] * g.n
    pos = {old: new for new, old in enumerate(perm)}
    for new, old in enumerate(perm):
        for u in _bits(g.adj[old]):
            adj[new] |= 1 << pos[u]
    labels = tuple(g.labels[old] for old in perm) if g.labels is not None else None
    return Graph(g.n, tuple(adj), labels)


def distances(g: Graph) -> tuple[tuple[float, ...], ...]:
    """All-pairs BFS distances; math.inf marks unreachable pairs."""
    rows = []
    for s in range(g.n):
        dist = [math.inf] * g.n
        dist[s] = 0
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            for v in _bits(nxt):
                dist[v] = d
            seen |= nxt
            frontier = nxt
        rows.append(tuple(dist))
    return tuple(rows)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def connected_components(g: Graph) -> int:
    remaining = (1 << g.n) - 1
    count = 0
    while remaining:
        count += 1
        start = remaining & -remaining
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        remaining &= ~seen
    return count


def diameter(g: Graph) -> int:
    """Greatest distance between two vertices; disconnected input is an error."""
    if g.n == 0:
        raise GraphError("diameter of the empty graph is undefined")
    if not is_connected(g):
        raise GraphError("diameter requires a connected graph")
    best = 0
    for row in distances(g):
        m = max(row)
        if m > best:
            best = int(m)
    return best


def is_path_graph(g: Graph) -> bool:
    """True iff g is a path (including the orders 1 and 2)."""
    if g.n == 0 or not is_connected(g):
        return False
    if g.n == 1:
        return True
    degs = sorted(g.degrees())
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def is_spanning_subgraph(g: Graph, h: Graph, mapping=None) -> bool:
    """True iff every edge of g maps to an edge of h.

    mapping[v] gives the h-vertex corresponding to g-vertex v; identity by
    default. Orders must agree and mapping must be a bijection.
    """
    if g.n != h.n:
        raise GraphError(f"order mismatch: {g.n} vs {h.n}")
    if mapping is None:
        return all(grow & ~hrow == 0 for grow, hrow in zip(g.adj, h.adj))
    mapping = list(mapping)
    if sorted(mapping) != list(range(g.n)):
        raise GraphError("mapping must be a bijection between the vertex sets")
    return all(h.adj[mapping[u]] >> mapping[v] & 1 for u, v in g.edges())


# graph6: header-less printable encoding of simple graphs, upper triangle in
# column-major order, 6 bits per byte offset by 63.

_GRAPH6_MAX_N = 258047


def _g6_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def graph6_encode(g: Graph) -> str:
    if g.n > _GRAPH6_MAX_N:
        raise GraphError(f"graph6 encoding capped at order {_GRAPH6_MAX_N}")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    out = bytearray(_g6_header(g.n))
    for i in range(0, len(bits), 6):
        chunk = 0
        for b in bits[i : i + 6]:
            chunk = chunk << 1 | b
        out.append(chunk + 63)
    return out.decode("ascii")


def graph6_decode(line: str) -> Graph:
    data = line.strip().encode("ascii")
    if not data:
        raise GraphError("empty graph6 line")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise GraphError("graph6 orders above 258047 are not supported")
        if len(data) < 4:
            raise GraphError("truncated graph6 header")
        vals = [b - 63 for b in data[1:4]]
        if any(not 0 <= v < 64 for v in vals):
            raise GraphError("malformed graph6 header")
        n = vals[0] << 12 | vals[1] << 6 | vals[2]
        body = data[4:]
    else:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise GraphError("malformed graph6 header")
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for byte in body:
        val = byte - 63
        if not 0 <= val < 64:
            raise GraphError("graph6 body byte out of range")
        bits.extend(val >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("nonzero padding in graph6 body")
    adj = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    graphs = []
    with open(path, "r", encoding="ascii") as handle:
        for line in handle:
            line = line.strip()
            if line:
                graphs.append(graph6_decode(line))
    return graphs
