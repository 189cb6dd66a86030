"""Shape functionals on Young diagrams.

T_n is the discrete functional (n-1) * sum of content**(n-2) over boxes;
S_n is its smooth counterpart, the integral of the same power over the
diagram as a plane region, computed from the per-box closed form.  The two
families generate the same algebra, related by triangular conversions with
polynomial coefficients in g.  Free cumulants R_k are signed sums of
normalized embedding counts over two-factorizations of a full cycle, and
KLPoly elements are evaluated on diagrams through them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as _itperms

from .exact import (GammaPoly, KLPoly, Laurent, gamma_power_A,
                    gamma_recover)
from .maps import compose, cycles, full_cycle, inverse, normalized_embeddings
from .young import Partition, binom, boxes, content


class BadIndex(ValueError):
    """Functional index out of range (needs n >= 2 or k >= 2)."""


def t_functional(n: int, lam: Partition) -> Laurent:
    """(n-1) * sum over boxes of content**(n-2)."""
    if n < 2:
        raise BadIndex(f"t_functional needs n >= 2, got {n}")
    total = Laurent.zero()
    for box in boxes(lam):
        total = total + content(box) ** (n - 2)
    return total.scale(n - 1)


def s_functional(n: int, lam: Partition) -> Laurent:
    """Integral of (n-1) * content**(n-2) over the diagram as a region.

    Per box with lower-left corner content c (the content of the box shifted
    by one column and one row), the integral equals
    -(1/n) * [(c+A-1/A)**n - (c+A)**n - (c-1/A)**n + c**n].
    """
    if n < 2:
        raise BadIndex(f"s_functional needs n >= 2, got {n}")
    a_pos = Laurent.monomial(1)
    a_neg = Laurent.monomial(-1)
    total = Laurent.zero()
    for (x, y) in boxes(lam):
        c = Laurent({1: x - 1, -1: -(y - 1)})
        term = ((c + a_pos - a_neg) ** n - (c + a_pos) ** n
                - (c - a_neg) ** n + c ** n)
        total = total + term
    return total.scale(Fraction(-1, n))


@lru_cache(maxsize=None)
def conversion_P(n: int) -> dict[int, GammaPoly]:
    """Coefficients P_2..P_n with S_n = sum of P_k(g) * T_k.

    Obtained by expanding the per-box integral in powers of the box content:
    the coefficient of (k-1) * c**(k-2) is an invariant Laurent polynomial,
    pulled back through the g-substitution.
    """
    if n < 2:
        raise BadIndex(f"conversion_P needs n >= 2, got {n}")
    out: dict[int, GammaPoly] = {}
    for k in range(2, n + 1):
        j = n + 2 - k
        a_inv_j = Laurent.monomial(-j)
        neg_a_j = Laurent.monomial(j, (-1) ** j)
        bracket = a_inv_j + neg_a_j - gamma_power_A(j)
        if j == 0:
            bracket = bracket - Laurent.const(1)
        d_k = bracket.scale(Fraction(binom(n, k - 2), n * (k - 1)))
        p_k = gamma_recover(d_k)
        if p_k:
            out[k] = p_k
    return out


@lru_cache(maxsize=None)
def conversion_Q(n: int) -> dict[int, GammaPoly]:
    """Coefficients Q_2..Q_n with T_n = sum of Q_k(g) * S_k.

    Triangular inversion of conversion_P: T_n = S_n - sum_{k<n} P_k T_k,
    with each T_k replaced by its own S-expansion.
    """
    if n < 2:
        raise BadIndex(f"conversion_Q needs n >= 2, got {n}")
    out: dict[int, GammaPoly] = {n: GammaPoly.const(1)}
    p_table = conversion_P(n)
    for k in range(n - 1, 1, -1):
        p_k = p_table.get(k, GammaPoly.zero())
        q_sub = conversion_Q(k)
        for j, q in q_sub.items():
            term = -(p_k * q)
            acc = out.get(j, GammaPoly.zero()) + term
            if acc:
                out[j] = acc
            else:
                out.pop(j, None)
    return out


@lru_cache(maxsize=None)
def _cumulant_pairs(k: int) -> tuple:
    """Pairs (s1, s2) in S_{k-1} with s1*s2 the full cycle and k cycles total."""
    m = k - 1
    cyc = full_cycle(m)
    found = []
    for s1 in _itperms(range(m)):
        s1 = tuple(s1)
        s2 = compose(inverse(s1), cyc)
        if len(cycles(s1)) + len(cycles(s2)) == k:
            found.append((s1, s2))
    return tuple(found)


_FREE_CUMULANT_CACHE: dict[tuple[int, Partition], Laurent] = {}


def free_cumulant(k: int, lam: Partition) -> Laurent:
    """R_k: minus the sum of normalized embeddings over the tree pairs."""
    if k < 2:
        raise BadIndex(f"free_cumulant needs k >= 2, got {k}")
    key = (k, lam)
    hit = _FREE_CUMULANT_CACHE.get(key)
    if hit is not None:
        return hit
    total = Laurent.zero()
    for s1, s2 in _cumulant_pairs(k):
        total = total + normalized_embeddings(s1, s2, lam)
    result = -total
    _FREE_CUMULANT_CACHE[key] = result
    return result


def free_cumulant_pair_count(k: int) -> int:
    return len(_cumulant_pairs(k))


def kl_evaluate(p: KLPoly, lam: Partition) -> Laurent:
    """Evaluate a g/R-polynomial on a diagram."""
    total = Laurent.zero()
    for (g, mu), coeff in p.items():
        term = gamma_power_A(g).scale(coeff)
        for m in mu:
            term = term * free_cumulant(m, lam)
        total = total + term
    return total
