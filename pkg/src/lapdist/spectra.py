"""Laplacian spectra: floating-point eigenvalues and exact interval counts.

Two independent engines back every eigenvalue question:

* a numeric one (cyclic Jacobi sweeps) producing the full spectrum with a
  certified absolute accuracy, and
* an exact one (integer characteristic polynomial via Faddeev-LeVerrier,
  square-free decomposition, Sturm sequences) that decides how many
  eigenvalues lie in a closed rational interval, with multiplicity and with
  no floating point anywhere.

The exact engine is authoritative; the numeric one exists for full spectra
in reports and for inequality property checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .graphs import Graph

DEFAULT_TOL = 1e-10
NUMERIC_COUNT_EPS = 1e-8
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """Jacobi sweep cap exceeded."""


@dataclass(frozen=True)
class IntegerSymmetricMatrix:
    """Exact integer symmetric matrix."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError(f"expected {self.n}x{self.n} entries")
        for i in range(self.n):
            for j in range(i):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")

    def __add__(self, other: "IntegerSymmetricMatrix") -> "IntegerSymmetricMatrix":
        if self.n != other.n:
            raise ValueError("order mismatch")
        return IntegerSymmetricMatrix(
            self.n,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            ),
        )

    def submatrix(self, indices) -> "IntegerSymmetricMatrix":
        keep = sorted(set(indices))
        if not keep:
            raise ValueError("principal submatrix needs a nonempty index set")
        if keep[0] < 0 or keep[-1] >= self.n:
            raise ValueError("submatrix index out of range")
        return IntegerSymmetricMatrix(
            len(keep), tuple(tuple(self.rows[i][j] for j in keep) for i in keep)
        )

    def to_numpy(self) -> np.ndarray:
        return np.array(self.rows, dtype=float)


def integer_symmetric(rows) -> IntegerSymmetricMatrix:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    return IntegerSymmetricMatrix(len(rows), rows)


def diagonal_matrix(entries) -> IntegerSymmetricMatrix:
    entries = list(entries)
    n = len(entries)
    return IntegerSymmetricMatrix(
        n, tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n))
    )


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted nonincreasing, with the certified absolute accuracy."""

    values: tuple[float, ...]
    tol: float

    def __post_init__(self) -> None:
        for a, b in zip(self.values, self.values[1:]):
            if a < b:
                raise ValueError("spectrum must be sorted nonincreasing")

    def mu(self, k: int) -> float:
        """k-th largest eigenvalue, 1-indexed."""
        if not 1 <= k <= len(self.values):
            raise ValueError(f"index {k} out of range for order {len(self.values)}")
        return self.values[k - 1]

    def count_in(self, a: float, b: float, eps: float = NUMERIC_COUNT_EPS) -> int:
        return sum(1 for v in self.values if a - eps <= v <= b + eps)


@dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial with integer coefficients, stored low degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs == (0,):
            raise ValueError("zero polynomial")
        if self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class IntervalCount:
    """Number of eigenvalues in the closed interval [a, b]."""

    a: Fraction
    b: Fraction
    count: int
    mode: str  # "exact" or "numeric"


def laplacian(g: Graph) -> IntegerSymmetricMatrix:
    """Laplacian matrix: degree on the diagonal, -1 on edges."""
    rows = []
    for v in range(g.n):
        row = [0] * g.n
        row[v] = g.degree(v)
        for u in g.neighbors(v):
            row[u] = -1
        rows.append(tuple(row))
    return IntegerSymmetricMatrix(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# Numeric engine: cyclic Jacobi with a rotation-skip threshold.
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _rotation_rounds(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    """Round-robin schedule covering every index pair once per sweep.

    Pairs within a round are disjoint, so their rotations commute and can be
    applied in one batch; a full pass over the rounds is one cyclic sweep.
    """
    players: list[int | None] = list(range(n))
    if n % 2:
        players.append(None)
    m = len(players)
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            x, y = players[i], players[m - 1 - i]
            if x is not None and y is not None:
                ps.append(min(x, y))
                qs.append(max(x, y))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def numeric_spectrum(m: IntegerSymmetricMatrix, tol: float = DEFAULT_TOL) -> Spectrum:
    """Full spectrum by cyclic Jacobi sweeps.

    Sweeps run until the off-diagonal Frobenius norm drops below tol*||M||_F,
    with a hard cap of 100 sweeps. The returned Spectrum.tol is the certified
    absolute eigenvalue accuracy tol*||M||_F (Hoffman-Wielandt).
    """
    n = m.n
    if n == 0:
        return Spectrum((), 0.0)
    a = m.to_numpy()
    norm = float(np.sqrt((a * a).sum()))
    if norm == 0.0:
        return Spectrum((0.0,) * n, 0.0)
    stop = tol * norm
    rounds = _rotation_rounds(n)
    offdiag = ~np.eye(n, dtype=bool)
    for _ in range(JACOBI_MAX_SWEEPS):
        off = float(np.sqrt((a[offdiag] ** 2).sum()))
        if off < stop:
            values = tuple(sorted((float(x) for x in np.diag(a)), reverse=True))
            return Spectrum(values, stop)
        # Entries below the skip threshold are left alone this sweep. The
        # floor stop/(2n) keeps the skipped mass under stop/2, so a sweep
        # that rotates nothing certifies off < stop at the next check.
        skip = max(stop / (2 * n), off / (8 * n))
        for pall, qall in rounds:
            apq = a[pall, qall]
            act = np.abs(apq) >= skip
            if not act.any():
                continue
            p = pall[act]
            q = qall[act]
            apq = apq[act]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.where(theta >= 0.0, 1.0, -1.0) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp = c[:, None] * a[p, :] - s[:, None] * a[q, :]
            rq = s[:, None] * a[p, :] + c[:, None] * a[q, :]
            a[p, :] = rp
            a[q, :] = rq
            cp = c[None, :] * a[:, p] - s[None, :] * a[:, q]
            cq = s[None, :] * a[:, p] + c[None, :] * a[:, q]
            a[:, p] = cp
            a[:, q] = cq
            a[p, q] = 0.0
            a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not reach off-norm {stop:g} in {JACOBI_MAX_SWEEPS} sweeps")


def laplacian_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return numeric_spectrum(laplacian(g), tol)


def path_spectrum_closed_form(n: int) -> Spectrum:
    """Path Laplacian eigenvalues 4*sin^2((n-j)*pi/(2n)) for j = 1..n."""
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    values = tuple(4.0 * math.sin((n - j) * math.pi / (2 * n)) ** 2 for j in range(1, n + 1))
    return Spectrum(values, 1e-12)


# ---------------------------------------------------------------------------
# Exact engine: integer characteristic polynomial and Sturm root counting.
# ---------------------------------------------------------------------------


def char_poly(m: IntegerSymmetricMatrix) -> IntegerPolynomial:
    """Exact det(xI - M) by the Faddeev-LeVerrier recurrence over integers.

    Every division by the step index is exact; a failed division indicates
    a bug and raises AssertionError.
    """
    n = m.n
    if n == 0:
        return IntegerPolynomial((1,))
    a = [list(row) for row in m.rows]
    # Cache the sparsity pattern of M: the recurrence always multiplies by M.
    support = [[j for j in range(n) if a[i][j]] for i in range(n)]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # M_1 = I
    trace = sum(a[i][i] for i in range(n))
    coeffs[n - 1] = -trace
    for k in range(2, n + 1):
        prev = work
        work = [[0] * n for _ in range(n)]
        c = coeffs[n - k + 1]
        for i in range(n):
            row = work[i]
            arow = a[i]
            for j in support[i]:
                aij = arow[j]
                prow = prev[j]
                for col in range(n):
                    pv = prow[col]
                    if pv:
                        row[col] += aij * pv
            row[i] += c
        tr = 0
        for i in range(n):
            arow = a[i]
            for j in support[i]:
                tr += arow[j] * work[j][i]
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier divisibility violated (internal bug)"
        coeffs[n - k] = q
    return IntegerPolynomial(tuple(coeffs))


def laplacian_char_poly(g: Graph) -> IntegerPolynomial:
    return _cached_laplacian_char_poly(g.n, g.adj)


@lru_cache(maxsize=8192)
def _cached_laplacian_char_poly(n: int, adj: tuple[int, ...]) -> IntegerPolynomial:
    return char_poly(laplacian(Graph(n, adj)))


# Polynomial helpers on integer coefficient lists (low degree first). All
# normalizations divide by positive contents only, so signs are preserved.


def _normalize(c: list[int]) -> list[int]:
    if not c:
        return [0]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _content(c: list[int]) -> int:
    g = 0
    for x in c:
        g = math.gcd(g, x)
    return g or 1


def _primitive(c: list[int]) -> list[int]:
    c = _normalize(list(c))
    g = _content(c)
    return [x // g for x in c]


def _derivative(c: list[int]) -> list[int]:
    if len(c) == 1:
        return [0]
    return _normalize([i * c[i] for i in range(1, len(c))])


def _pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g, over the integers.

    The multiplier power is deterministic (the final rescale covers division
    steps skipped by vanishing leading coefficients), which the Sturm sign
    bookkeeping relies on.
    """
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        raise ValueError("pseudo-remainder needs deg f >= deg g")
    lg = g[-1]
    r = list(f)
    steps = df - dg + 1
    while len(r) - 1 >= dg:
        lead = r[-1]
        r = [x * lg for x in r[:-1]]
        shift = len(r) - dg
        for i in range(dg):
            r[shift + i] -= lead * g[i]
        steps -= 1
        r = _normalize(r)
        if r == [0]:
            break
    return _normalize([x * lg**steps for x in r]) if steps > 0 else r


def _gcd_poly(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd (positive leading coefficient) via pseudo-remainders."""
    f = _primitive(f)
    g = _primitive(g)
    if f == [0]:
        f, g = g, [0]
    if g == [0]:
        return f if f[-1] >= 0 else [-x for x in f]
    if len(f) < len(g):
        f, g = g, f
    while g != [0]:
        if len(g) == 1:
            return [1]
        r = _primitive(_pseudo_rem(f, g))
        f, g = g, r
    return f if f[-1] >= 0 else [-x for x in f]


# Fraction-coefficient helpers for the Yun square-free loop, whose identities
# need consistent scaling between intermediates.


def _frac(c: list[int]) -> list[Fraction]:
    return [Fraction(x) for x in c]


def _fnormalize(c: list[Fraction]) -> list[Fraction]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _fderivative(c: list[Fraction]) -> list[Fraction]:
    if len(c) == 1:
        return [Fraction(0)]
    return _fnormalize([i * c[i] for i in range(1, len(c))])


def _fsub(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    n = max(len(f), len(g))
    out = [
        (f[i] if i < len(f) else Fraction(0)) - (g[i] if i < len(g) else Fraction(0))
        for i in range(n)
    ]
    return _fnormalize(out)


def _fdiv_exact(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    """Quotient of an exact polynomial division; nonzero remainder is a bug."""
    f = _fnormalize(list(f))
    g = _fnormalize(list(g))
    assert g != [Fraction(0)], "division by zero polynomial"
    q = [Fraction(0)] * max(1, len(f) - len(g) + 1)
    while len(f) >= len(g) and f != [Fraction(0)]:
        shift = len(f) - len(g)
        coef = f[-1] / g[-1]
        q[shift] = coef
        for i in range(len(g)):
            f[shift + i] -= coef * g[i]
        f = _fnormalize(f[:-1] or [Fraction(0)])
    assert f == [Fraction(0)], "polynomial division was not exact"
    return _fnormalize(q)


def _fto_primitive_int(c: list[Fraction]) -> list[int]:
    denom = 1
    for x in c:
        denom = denom * x.denominator // math.gcd(denom, x.denominator)
    return _primitive([int(x * denom) for x in c])


def _square_free_factors(c: list[int]) -> list[tuple[int, list[int]]]:
    """Yun decomposition: [(multiplicity, primitive square-free factor), ...].

    Factors are normalized up to constants; only their root sets matter here.
    """
    f = _primitive(c)
    if len(f) == 1:
        return []
    fp = _derivative(f)
    d = _gcd_poly(f, fp)
    if len(d) == 1:
        return [(1, f)]
    a = _fdiv_exact(_frac(f), _frac(d))
    b = _fdiv_exact(_frac(fp), _frac(d))
    c_part = _fsub(b, _fderivative(a))
    out = []
    i = 1
    while len(a) > 1:
        g_int = _gcd_poly(_fto_primitive_int(a), _fto_primitive_int(c_part))
        g = _frac(g_int)
        if len(g) > 1:
            out.append((i, g_int))
        a = _fdiv_exact(a, g)
        b = _fdiv_exact(c_part, g)
        c_part = _fsub(b, _fderivative(a))
        i += 1
    return out


def _eval_at(c: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for v in reversed(c):
        acc = acc * x + v
    return acc


def _sturm_chain(c: list[int]) -> list[list[int]]:
    """Sturm sequence of a square-free integer polynomial.

    Pseudo-remainders are rescaled to primitive with the sign of the true
    remainder, so sign variations match the classical chain.
    """
    chain = [_primitive(c)]
    deriv = _derivative(c)
    if deriv != [0]:
        chain.append(_primitive(deriv))
    while len(chain[-1]) > 1:
        f, g = chain[-2], chain[-1]
        r = _pseudo_rem(f, g)
        if r == [0]:
            break
        # prem = lc(g)^k * rem; flip for -rem and undo a negative multiplier.
        k = len(f) - len(g) + 1
        if g[-1] < 0 and k % 2 == 1:
            r = [x for x in r]
        else:
            r = [-x for x in r]
        chain.append(_primitive(r))
    return chain


def _variations_at(chain: list[list[int]], x: Fraction) -> int:
    signs = []
    for c in chain:
        v = _eval_at(c, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_inf(chain: list[list[int]]) -> int:
    signs = [1 if c[-1] > 0 else -1 for c in chain]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _deflate(c: list[int], a: Fraction) -> list[int]:
    """Exact division by (x - a); the remainder must vanish."""
    out = [Fraction(0)] * (len(c) - 1)
    acc = Fraction(0)
    for i in range(len(c) - 1, 0, -1):
        acc = acc * a + c[i]
        out[i - 1] = acc
    rem = acc * a + c[0]
    assert rem == 0, "deflation at a non-root"
    denom = 1
    for x in out:
        denom = denom * x.denominator // math.gcd(denom, x.denominator)
    return _primitive([int(x * denom) for x in out])


def _distinct_roots_gt(square_free: list[int], a: Fraction) -> int:
    """Distinct real roots of a square-free polynomial in the open (a, inf)."""
    c = square_free
    if _eval_at(c, a) == 0:
        c = _deflate(c, a)
    if len(c) == 1:
        return 0
    chain = _sturm_chain(c)
    return _variations_at(chain, a) - _variations_at_inf(chain)


@lru_cache(maxsize=8192)
def _strata(coeffs: tuple[int, ...]) -> tuple[tuple[int, tuple[int, ...]], ...]:
    return tuple(
        (mult, tuple(factor)) for mult, factor in _square_free_factors(list(coeffs))
    )


def multiplicity_at(p: IntegerPolynomial, a: Fraction | int) -> int:
    """Largest k with (x-a)^k dividing p, by repeated synthetic division."""
    a = Fraction(a)
    c = [Fraction(x) for x in p.coeffs]
    k = 0
    while True:
        acc = Fraction(0)
        out = []
        for i in range(len(c) - 1, 0, -1):
            acc = acc * a + c[i]
            out.append(acc)
        rem = acc * a + c[0] if len(c) > 1 else c[0]
        if rem != 0 or len(c) == 1:
            return k
        k += 1
        c = list(reversed(out))


def count_roots_geq(p: IntegerPolynomial, a: Fraction | int) -> int:
    """Real roots of p in [a, inf), counted with multiplicity."""
    a = Fraction(a)
    total = multiplicity_at(p, a)
    for mult, factor in _strata(p.coeffs):
        total += mult * _distinct_roots_gt(list(factor), a)
    return total


def count_roots_gt(p: IntegerPolynomial, a: Fraction | int) -> int:
    return count_roots_geq(p, a) - multiplicity_at(p, a)


def m_interval(g: Graph, a, b, mode: str = "exact") -> IntervalCount:
    """Number of Laplacian eigenvalues of g in the closed interval [a, b]."""
    a = Fraction(a)
    b = Fraction(b)
    if a > b:
        raise ValueError(f"empty interval: {a} > {b}")
    if mode == "exact":
        p = laplacian_char_poly(g)
        count = count_roots_geq(p, a) - count_roots_geq(p, b) + multiplicity_at(p, b)
    elif mode == "numeric":
        count = laplacian_spectrum(g).count_in(float(a), float(b))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return IntervalCount(a, b, count, mode)


@dataclass(frozen=True)
class EigenvalueAt:
    """Numeric eigenvalue plus its exact integer value when it has one."""

    value: float
    exact_integer: int | None


def mu_k(g: Graph, k: int) -> EigenvalueAt:
    """k-th largest Laplacian eigenvalue with an exact-integer certificate.

    The flag is decided by the exact engine: mu_k equals the nearest integer
    r iff at least k eigenvalues are >= r and fewer than k are > r.
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"index {k} out of range for order {g.n}")
    value = laplacian_spectrum(g).mu(k)
    r = round(value)
    p = laplacian_char_poly(g)
    exact = None
    if multiplicity_at(p, r) > 0:
        if count_roots_geq(p, r) >= k and count_roots_gt(p, r) <= k - 1:
            exact = int(r)
    return EigenvalueAt(value, exact)


def eigenvalue_equals(g: Graph, k: int, value: Fraction | int) -> bool:
    """Exact test of mu_k(g) == value via root-count bracketing."""
    p = laplacian_char_poly(g)
    v = Fraction(value)
    return (
        multiplicity_at(p, v) > 0
        and count_roots_geq(p, v) >= k
        and count_roots_gt(p, v) <= k - 1
    )


def eigenvalue_below(g: Graph, k: int, bound: Fraction | int) -> bool:
    """Exact test of mu_k(g) < bound: fewer than k eigenvalues are >= bound."""
    p = laplacian_char_poly(g)
    return count_roots_geq(p, Fraction(bound)) <= k - 1


def integer_eigenvalue_multiplicities(g: Graph) -> dict[int, int]:
    """Exact multiplicity of every integer Laplacian eigenvalue in [0, n]."""
    p = laplacian_char_poly(g)
    out = {}
    for z in range(g.n + 1):
        m = multiplicity_at(p, z)
        if m:
            out[z] = m
    return out
