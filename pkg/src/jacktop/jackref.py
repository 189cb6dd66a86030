"""Independent reference oracle for Jack characters.

The Jack polynomial of a diagram is built in the monomial basis as the
eigenvector of the deformed Laplace-Beltrami operator

    D = (alpha/2) * sum_i x_i**2 d_i**2 + sum_{i != j} x_i**2/(x_i - x_j) d_i

restricted to symmetric polynomials of degree n in n variables, where the
operator matrix is dominance-triangular and the eigenvalues separate along
dominance, so a back-substitution per diagram suffices.  The result is
scaled to the J normalization (coefficient n! on the bottom monomial), then
converted to the power-sum basis; the expansion coefficients are the
unnormalized characters, which the normalized character wraps per the
classical binomial/z-factor prescription with alpha = A**2.

A Gram-Schmidt construction against the deformed power-sum inner product
is provided as an independent cross-check of the same polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import Laurent, RatFunc, alpha_to_A
from .young import (Partition, binom, length, multiplicities, partition,
                    partitions_of, size, z_factor)

DEFAULT_SIZE_BOUND = 8


class BoundExceeded(ValueError):
    """Requested diagram is larger than the configured oracle bound."""


# ---------------------------------------------------------------------------
# Dense-exponent machinery: a symmetric polynomial of degree n in n
# variables is a dict {exponent tuple: int/Fraction}.  The coefficient of
# the monomial symmetric function m_mu is the entry at mu padded with zeros.

def _distinct_perms(values: tuple):
    """Distinct permutations of a tuple (multiset permutations)."""
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    n = len(values)
    slot = [0] * n

    def rec(pos: int):
        if pos == n:
            yield tuple(slot)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                slot[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    yield from rec(0)


def _m_expand(mu: Partition, nvars: int) -> dict[tuple, int]:
    """Full monomial dict of m_mu in nvars variables."""
    padded = tuple(mu) + (0,) * (nvars - len(mu))
    return {a: 1 for a in _distinct_perms(padded)}


def _mul_power_sum(f: dict[tuple, int], k: int) -> dict[tuple, int]:
    """Multiply a full dict by p_k = sum_i x_i**k."""
    out: dict[tuple, int] = {}
    for a, c in f.items():
        for i in range(len(a)):
            key = a[:i] + (a[i] + k,) + a[i + 1:]
            out[key] = out.get(key, 0) + c
    return out


def _collect_m(f: dict[tuple, int], parts: list[Partition], nvars: int) -> dict[Partition, int]:
    out = {}
    for mu in parts:
        c = f.get(tuple(mu) + (0,) * (nvars - len(mu)), 0)
        if c:
            out[mu] = c
    return out


def _diff_term(f: dict[tuple, int], i: int) -> dict[tuple, int]:
    """x_i**2 * d/dx_i applied to f."""
    out: dict[tuple, int] = {}
    for a, c in f.items():
        if a[i]:
            key = a[:i] + (a[i] + 1,) + a[i + 1:]
            out[key] = out.get(key, 0) + c * a[i]
    return out


def _div_xi_minus_xj(h: dict[tuple, int], i: int, j: int) -> dict[tuple, int]:
    """Exact division by (x_i - x_j) via synthetic division in x_i."""
    if not h:
        return {}
    buckets: dict[int, dict[tuple, int]] = {}
    top = 0
    for a, c in h.items():
        d = a[i]
        buckets.setdefault(d, {})[a] = buckets.get(d, {}).get(a, 0) + c
        if d > top:
            top = d
    quo: dict[tuple, int] = {}
    for d in range(top, 0, -1):
        for a, c in buckets.get(d, {}).items():
            if not c:
                continue
            qa = a[:i] + (d - 1,) + a[i + 1:]
            quo[qa] = quo.get(qa, 0) + c
            ra = qa[:j] + (qa[j] + 1,) + qa[j + 1:]
            lower = buckets.setdefault(d - 1, {})
            lower[ra] = lower.get(ra, 0) + c
    if any(c for c in buckets.get(0, {}).values()):
        raise AssertionError("division by (x_i - x_j) left a remainder")
    return {a: c for a, c in quo.items() if c}


def _apply_U(f: dict[tuple, int], nvars: int) -> dict[tuple, int]:
    """The non-diagonal operator part sum_{i != j} x_i**2/(x_i-x_j) d_i.

    Brute-force route over the full monomial expansion; retained as the
    validation oracle for the pairwise closed form used in production.
    """
    out: dict[tuple, int] = {}
    for i in range(nvars):
        di = _diff_term(f, i)
        for j in range(i + 1, nvars):
            dj = _diff_term(f, j)
            h = dict(di)
            for a, c in dj.items():
                h[a] = h.get(a, 0) - c
            for a, c in _div_xi_minus_xj(h, i, j).items():
                s = out.get(a, 0) + c
                if s:
                    out[a] = s
                else:
                    del out[a]
    return out


def _t_coeff(p: int, q: int, a: int, b: int) -> int:
    """Ordered-monomial coefficient of x0**a x1**b in the two-variable image

        [x0**2 d0 - x1**2 d1] (x0**p x1**q + x0**q x1**p) / (x0 - x1)

    for p >= q and a >= b (the symmetrized-pair building block): the
    telescoped geometric sums give coefficient p on the endpoints (p, q)
    and (q, p), and p - q on every interior pair (p-s, q+s)."""
    if a + b != p + q:
        return 0
    if p == q:
        return p if a == p else 0
    if a == p:
        return p
    if b > q and a < p:
        return p - q
    return 0


def _u_matrix_entry(mu: Partition, nu: Partition, nvars: int) -> int:
    """Coefficient of m_nu in U(m_mu), via the pairwise closed form.

    For each ordered position pair (i < j) of the sorted representative of
    nu, the rest of the exponents must use up all of mu except a value
    pair {p, q}; the contribution is then the two-variable coefficient."""
    mu_count: dict[int, int] = {}
    for v in tuple(mu) + (0,) * (nvars - len(mu)):
        mu_count[v] = mu_count.get(v, 0) + 1
    nu_star = tuple(nu) + (0,) * (nvars - len(nu))
    delta = dict(mu_count)
    for v in nu_star:
        delta[v] = delta.get(v, 0) - 1
    if sum(-c for c in delta.values() if c < 0) > 2:
        return 0
    total = 0
    for i in range(nvars):
        for j in range(i + 1, nvars):
            a, b = nu_star[i], nu_star[j]
            e = dict(delta)
            e[a] = e.get(a, 0) + 1
            e[b] = e.get(b, 0) + 1
            pair = []
            ok = True
            for v, c in e.items():
                if c < 0:
                    ok = False
                    break
                pair.extend([v] * c)
            if not ok:
                continue
            p, q = max(pair), min(pair)
            total += _t_coeff(p, q, a, b)
    return total


def _count_assignments(parts: Partition, caps: Partition) -> int:
    """Ways to place the parts, in order, onto distinguishable rows with the
    given capacities so that every row is filled exactly.  This is the
    monomial coefficient of the power sum product."""
    memo: dict[tuple, int] = {}

    def rec(idx: int, caps_sorted: tuple) -> int:
        if idx == len(parts):
            return 1 if not any(caps_sorted) else 0
        key = (idx, caps_sorted)
        hit = memo.get(key)
        if hit is not None:
            return hit
        part = parts[idx]
        total = 0
        prev = None
        for pos, c in enumerate(caps_sorted):
            if c == prev or c < part:
                continue
            prev = c
            count = caps_sorted.count(c)
            nxt = tuple(sorted(caps_sorted[:pos] + (c - part,)
                               + caps_sorted[pos + 1:], reverse=True))
            total += count * rec(idx + 1, nxt)
        memo[key] = total
        return total

    return rec(0, tuple(caps))


class _Basis:
    """Per-degree data: partitions in a dominance-compatible order, the
    operator matrix in the monomial basis, and the power-sum transition."""

    def __init__(self, n: int):
        self.n = n
        self.parts: list[Partition] = sorted(partitions_of(n), reverse=True)
        self.index = {mu: i for i, mu in enumerate(self.parts)}
        k = len(self.parts)
        # U matrix: column nu holds the m-expansion of U(m_nu); the operator
        # lowers dominance, which the stored (lex-descending) order refines,
        # so entries live at row >= column.
        self.u_cols: list[dict[int, int]] = []
        for ci, nu in enumerate(self.parts):
            col = {}
            for ri in range(ci, k):
                c = _u_matrix_entry(nu, self.parts[ri], n)
                if c:
                    col[ri] = c
            self.u_cols.append(col)
        # Diagonal alpha coefficient of (alpha/2) sum x**2 d**2 on m_nu.
        self.alpha_diag = [Fraction(sum(x * (x - 1) for x in nu), 2)
                           for nu in self.parts]
        # Power sums in the monomial basis: row pi of `p_in_m`.
        self.p_in_m = [[_count_assignments(pi, mu) for mu in self.parts]
                       for pi in self.parts]
        self._theta_solver: list[list[Fraction]] | None = None

    def eigenvalue(self, nu_idx: int) -> RatFunc:
        return RatFunc((Fraction(self.u_cols[nu_idx].get(nu_idx, 0)),
                        self.alpha_diag[nu_idx]))

    def theta_from_m(self, rhs: list[RatFunc]) -> list[RatFunc]:
        """Convert a monomial-basis vector to power-sum coefficients."""
        if self._theta_solver is None:
            self._theta_solver = _invert_rational(
                [[Fraction(self.p_in_m[c][r]) for c in range(len(self.parts))]
                 for r in range(len(self.parts))])
        inv = self._theta_solver
        out = []
        for row in inv:
            acc = RatFunc(0)
            for coeff, value in zip(row, rhs):
                if coeff and value:
                    acc = acc + coeff * value
            out.append(acc)
        return out


@lru_cache(maxsize=None)
def _basis(n: int) -> _Basis:
    return _Basis(n)


def _invert_rational(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a rational matrix by Gauss-Jordan elimination."""
    k = len(matrix)
    m = [row[:] + [Fraction(int(i == j)) for j in range(k)]
         for i, row in enumerate(matrix)]
    for col in range(k):
        piv = next(r for r in range(col, k) if m[r][col])
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(k):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[k:] for row in m]


def _solve_rational(matrix: list[list[Fraction]], rhs: list[RatFunc]) -> list[RatFunc]:
    """Solve a square rational system with rational-function right-hand side."""
    k = len(matrix)
    m = [row[:] for row in matrix]
    b = rhs[:]
    perm = list(range(k))
    for col in range(k):
        piv = next(r for r in range(col, k) if m[r][col])
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            b[col], b[piv] = b[piv], b[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        b[col] = b[col] * inv
        for r in range(k):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                b[r] = b[r] - f * b[col]
    del perm
    return b


def _jack_m_vector(lam: Partition) -> dict[Partition, RatFunc]:
    """J-normalized Jack polynomial of lam in the monomial basis."""
    n = size(lam)
    basis = _basis(n)
    li = basis.index[lam]
    e_lam = basis.eigenvalue(li)
    k = len(basis.parts)
    v: list[RatFunc | None] = [None] * k
    for idx in range(k):
        if idx < li:
            v[idx] = RatFunc(0)
            continue
        if idx == li:
            v[idx] = RatFunc(1)
            continue
        acc = RatFunc(0)
        for nu_idx in range(li, idx):
            c = basis.u_cols[nu_idx].get(idx, 0)
            if c and v[nu_idx]:
                acc = acc + Fraction(c) * v[nu_idx]
        if acc.is_zero():
            v[idx] = RatFunc(0)
            continue
        denom = e_lam - basis.eigenvalue(idx)
        if denom.is_zero():
            raise AssertionError(
                f"eigenvalue collision below {lam}: {basis.parts[idx]}")
        v[idx] = acc / denom
    bottom = v[basis.index[tuple([1] * n)]] if n else RatFunc(1)
    if bottom.is_zero():
        raise AssertionError(f"vanishing bottom coefficient for {lam}")
    scale = RatFunc(factorial(n)) / bottom
    return {mu: v[i] * scale for i, mu in enumerate(basis.parts)
            if v[i] and not v[i].is_zero()}


_POWERSUM_CACHE: dict[Partition, dict[Partition, RatFunc]] = {}
_DISK_CACHE = None  # set by the CLI; see jacktop.cache


def set_disk_cache(cache) -> None:
    global _DISK_CACHE
    _DISK_CACHE = cache


def jack_powersum(lam: Partition, bound: int | None = None) -> dict[Partition, RatFunc]:
    """Power-sum expansion of the J-normalized Jack polynomial of lam.

    Returns a map from power-sum index partitions to coefficients in alpha;
    these coefficients are the unnormalized characters.
    """
    lam = partition(lam)
    limit = DEFAULT_SIZE_BOUND if bound is None else bound
    if size(lam) > limit:
        raise BoundExceeded(f"|lambda| = {size(lam)} exceeds bound {limit}")
    hit = _POWERSUM_CACHE.get(lam)
    if hit is not None:
        return hit
    if _DISK_CACHE is not None:
        stored = _DISK_CACHE.load_jack(lam)
        if stored is not None:
            _POWERSUM_CACHE[lam] = stored
            return stored

    n = size(lam)
    if n == 0:
        result = {(): RatFunc(1)}
    else:
        basis = _basis(n)
        jvec = _jack_m_vector(lam)
        rhs = [jvec.get(mu, RatFunc(0)) for mu in basis.parts]
        theta = basis.theta_from_m(rhs)
        result = {pi: theta[i] for i, pi in enumerate(basis.parts)
                  if not theta[i].is_zero()}

    _POWERSUM_CACHE[lam] = result
    if _DISK_CACHE is not None:
        _DISK_CACHE.store_jack(lam, result)
    return result


def jack_m_expansion(lam: Partition) -> dict[Partition, RatFunc]:
    """Monomial-basis expansion (exposed for the cross-validation tests)."""
    lam = partition(lam)
    if size(lam) == 0:
        return {(): RatFunc(1)}
    return _jack_m_vector(lam)


def jack_m_expansion_gram_schmidt(lam: Partition) -> dict[Partition, RatFunc]:
    """Independent construction: orthogonalize the monomial basis against
    <p_mu, p_nu> = delta * z_mu * alpha**len(mu), then J-normalize."""
    lam = partition(lam)
    n = size(lam)
    if n == 0:
        return {(): RatFunc(1)}
    basis = _basis(n)
    parts = basis.parts
    k = len(parts)
    # m_mu in the p basis: invert the p->m rows over Q.
    ident = [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    p_rows = [[Fraction(x) for x in row] for row in basis.p_in_m]
    # Solve P^T X = I columnwise: column j of X is m-to-p of basis vector j.
    m_in_p: list[list[Fraction]] = [[Fraction(0)] * k for _ in range(k)]
    for j in range(k):
        rhs = [RatFunc(ident[r][j]) for r in range(k)]
        matrix = [[p_rows[c][r] for c in range(k)] for r in range(k)]
        col = _solve_rational(matrix, rhs)
        for r in range(k):
            assert col[r].den == (Fraction(1),)
            m_in_p[j][r] = col[r].num[0] if col[r].num else Fraction(0)

    def inner(u: list[RatFunc], v: list[RatFunc]) -> RatFunc:
        acc = RatFunc(0)
        for idx, pi in enumerate(parts):
            if u[idx].is_zero() or v[idx].is_zero():
                continue
            weight = RatFunc((Fraction(0),) * length(pi) + (Fraction(z_factor(pi)),))
            acc = acc + u[idx] * v[idx] * weight
        return acc

    # Gram-Schmidt in increasing order (reverse of the stored ordering).
    order = list(range(k - 1, -1, -1))
    built: dict[int, list[RatFunc]] = {}
    for idx in order:
        vec = [RatFunc(c) for c in m_in_p[idx]]
        for prev in order:
            if prev == idx:
                break
            p_vec = built[prev]
            coeff = inner(vec, p_vec) / inner(p_vec, p_vec)
            if not coeff.is_zero():
                vec = [a - coeff * b for a, b in zip(vec, p_vec)]
        built[idx] = vec
        if idx == basis.index[lam]:
            break

    target = built[basis.index[lam]]
    # Back to the monomial basis for the comparison and J-scaling.
    mvec = [RatFunc(0)] * k
    for j in range(k):
        if target[j].is_zero():
            continue
        for r in range(k):
            c = basis.p_in_m[j][r]
            if c:
                mvec[r] = mvec[r] + Fraction(c) * target[j]
    bottom = mvec[basis.index[tuple([1] * n)]]
    scale = RatFunc(factorial(n)) / bottom
    return {mu: mvec[i] * scale for i, mu in enumerate(parts)
            if not mvec[i].is_zero()}


_CHARACTER_CACHE: dict[tuple[Partition, Partition], Laurent] = {}


def jack_character(pi: Partition, lam: Partition, bound: int | None = None) -> Laurent:
    """The normalized character Ch_pi(lam), a Laurent polynomial in A.

    Zero when the diagram is smaller than pi; otherwise the power-sum
    coefficient at pi padded with fixed points, times the binomial and
    z-factor normalizations, carried to A via alpha = A**2.
    """
    pi = partition(pi)
    lam = partition(lam)
    if size(lam) < size(pi):
        return Laurent.zero()
    key = (pi, lam)
    hit = _CHARACTER_CACHE.get(key)
    if hit is not None:
        return hit
    extra = size(lam) - size(pi)
    padded = tuple(sorted(pi + (1,) * extra, reverse=True))
    theta = jack_powersum(lam, bound=bound).get(padded, RatFunc(0))
    m1 = multiplicities(pi).get(1, 0)
    factor = binom(extra + m1, m1) * z_factor(pi)
    value = alpha_to_A(theta * factor)
    shift = size(pi) - length(pi)
    result = Laurent({e - shift: c for e, c in value.items()})
    _CHARACTER_CACHE[key] = result
    return result
