"""Top-degree part of the one-row character, via map enumeration.

Two equivalent routes are implemented: direct evaluation on a diagram as a
signed, g-weighted sum of normalized embedding counts over transitive
permutation pairs (summed over conjugation-orbit representatives, which
cancels the (n-1)! division exactly), and the symbolic expansion in the
g/R ring obtained by enumerating expander weights on each orbit.  The
moment and cumulant functions over permutations, related by the
set-partition formula, live here as well.
"""

from __future__ import annotations

from itertools import permutations as _itperms
from typing import Iterable, Iterator, Sequence

from .exact import GammaPoly, KLPoly, Laurent, gamma_power_A
from .maps import (BicoloredGraph, Perm, compose, cycles, graph_of_pair,
                   inverse, is_transitive_pair, normalized_embeddings,
                   orbit_reps)
from .young import Partition

DEFAULT_BUDGET = 6


class BudgetExceeded(ValueError):
    """n exceeds the configured enumeration budget."""


class DomainMismatch(ValueError):
    """Expander weight not defined exactly on the black vertices."""


class Disconnected(ValueError):
    """Graph collection requires connected graphs."""


def _check_budget(n: int, budget: int | None) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if n > limit:
        raise BudgetExceeded(f"n = {n} exceeds budget {limit}")
    if n < 1:
        raise BudgetExceeded(f"n must be >= 1, got {n}")


def ch_top_eval(n: int, lam: Partition, budget: int | None = None) -> Laurent:
    """Evaluate the top-degree character part on a diagram.

    Minus the sum, over orbit representatives, of
    g**(n+1-|C1|-|C2|) * (normalized embedding count); the orbit sum already
    absorbs the 1/(n-1)! of the labeled formula.
    """
    _check_budget(n, budget)
    total = Laurent.zero()
    for s1, s2 in orbit_reps(n):
        c1 = len(cycles(s1))
        c2 = len(cycles(s2))
        emb = normalized_embeddings(s1, s2, lam)
        if emb:
            total = total + gamma_power_A(n + 1 - c1 - c2) * emb
    return -total


def ch_top_eval_labeled(n: int, lam: Partition) -> Laurent:
    """Oracle route: sum over all labeled transitive pairs, divided by (n-1)!."""
    from math import factorial
    total = Laurent.zero()
    for s1 in _itperms(range(n)):
        s1 = tuple(s1)
        for s2 in _itperms(range(n)):
            s2 = tuple(s2)
            if not is_transitive_pair(s1, s2):
                continue
            c1 = len(cycles(s1))
            c2 = len(cycles(s2))
            emb = normalized_embeddings(s1, s2, lam)
            if emb:
                total = total + gamma_power_A(n + 1 - c1 - c2) * emb
    from fractions import Fraction
    return -total.scale(Fraction(1, factorial(n - 1)))


def is_expander(g: BicoloredGraph, weight: dict[int, int]) -> bool:
    """Whether (g, weight) satisfies the expander conditions.

    The weight maps each black vertex to an integer >= 2; the white count
    must equal the total weight excess, and every proper nonempty black
    subset must see strictly more whites than its own excess.
    """
    if set(weight) != set(range(g.blacks)):
        raise DomainMismatch(
            f"weight domain {sorted(weight)} != blacks 0..{g.blacks - 1}")
    if any(q < 2 for q in weight.values()):
        raise ValueError("expander weights must be >= 2")
    excess = sum(q - 1 for q in weight.values())
    if g.whites != excess:
        return False
    if g.blacks >= 2:
        masks = [sum(1 << b for b in s) for s in g.adjacency]
        for subset in range(1, (1 << g.blacks) - 1):
            seen = sum(1 for mask in masks if mask & subset)
            need = sum(weight[b] - 1 for b in range(g.blacks)
                       if subset >> b & 1)
            if seen <= need:
                return False
    return True


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of `total` into `parts` positive parts, colexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for last in range(1, total - parts + 2):
        for rest in _compositions(total - last, parts - 1):
            yield rest + (last,)


def expander_weights(g: BicoloredGraph) -> Iterator[dict[int, int]]:
    """All expander weights of a graph, in colexicographic order."""
    for comp in _compositions(g.whites, g.blacks):
        weight = {b: comp[b] + 1 for b in range(g.blacks)}
        if is_expander(g, weight):
            yield weight


_KL_TOP_CACHE: dict[int, KLPoly] = {}
_DISK_CACHE = None  # set by the CLI; see jacktop.cache


def set_disk_cache(cache) -> None:
    global _DISK_CACHE
    _DISK_CACHE = cache


def kl_top(n: int, budget: int | None = None) -> KLPoly:
    """The g/R expansion of the top-degree character part.

    One summand per orbit representative and expander weight: the g power
    records the genus-like defect, the R indices are the weights.
    """
    _check_budget(n, budget)
    hit = _KL_TOP_CACHE.get(n)
    if hit is not None:
        return hit
    if _DISK_CACHE is not None:
        stored = _DISK_CACHE.load_kl_top(n)
        if stored is not None:
            _KL_TOP_CACHE[n] = stored
            return stored

    total = KLPoly.zero()
    for s1, s2 in orbit_reps(n):
        g = graph_of_pair(s1, s2)
        gexp = n + 1 - g.whites - g.blacks
        for weight in expander_weights(g):
            mu = tuple(sorted(weight.values(), reverse=True))
            total = total + KLPoly.term(gexp, mu)

    _KL_TOP_CACHE[n] = total
    if _DISK_CACHE is not None:
        _DISK_CACHE.store_kl_top(n, total)
    return total


def kl_from_graphs(collection: Iterable[tuple[BicoloredGraph, GammaPoly]]) -> KLPoly:
    """The g/R expansion of a g-weighted embedding-count combination.

    For F = sum of m_G * (normalized embeddings of G), the expansion is
    the sum over expander weights of (-m_G) * prod R_q.
    """
    total = KLPoly.zero()
    for g, mult in collection:
        if g.has_isolated_vertex() or not g.is_connected():
            raise Disconnected(repr(g))
        for weight in expander_weights(g):
            mu = tuple(sorted(weight.values(), reverse=True))
            for gexp, coeff in (-mult).items():
                total = total + KLPoly.term(gexp, mu, coeff)
    return total


def map_formula_collection(n: int, budget: int | None = None
                           ) -> list[tuple[BicoloredGraph, GammaPoly]]:
    """The orbit-representative collection whose embedding sum evaluates the
    top-degree part: multiplicity -g**(n+1-|C1|-|C2|) per representative."""
    _check_budget(n, budget)
    out = []
    for s1, s2 in orbit_reps(n):
        g = graph_of_pair(s1, s2)
        gexp = n + 1 - g.whites - g.blacks
        out.append((g, GammaPoly({gexp: -1})))
    return out


def moment_M(perm: Perm, lam: Partition) -> Laurent:
    """(-1)**|C(pi)| times the embedding sum over all factorizations of pi."""
    return _moment_or_cumulant(perm, lam, transitive_only=False)


def cumulant_K(perm: Perm, lam: Partition) -> Laurent:
    """Same as the moment, restricted to transitive factorizations."""
    return _moment_or_cumulant(perm, lam, transitive_only=True)


def _moment_or_cumulant(perm: Perm, lam: Partition, transitive_only: bool) -> Laurent:
    n = len(perm)
    total = Laurent.zero()
    for s1 in _itperms(range(n)):
        s1 = tuple(s1)
        s2 = compose(inverse(s1), perm)
        if transitive_only and not is_transitive_pair(s1, s2):
            continue
        total = total + normalized_embeddings(s1, s2, lam)
    sign = -1 if len(cycles(perm)) % 2 else 1
    return total.scale(sign)


def set_partitions_above(blocks: Sequence[tuple[int, ...]]) -> Iterator[list[list[int]]]:
    """Set partitions of the ground set that are coarser than the given blocks."""
    items = list(blocks)

    def rec(rest: list, current: list[list]):
        if not rest:
            yield [sorted(x for blk in group for x in blk) for group in current]
            return
        head, tail = rest[0], rest[1:]
        for group in current:
            group.append(head)
            yield from rec(tail, current)
            group.pop()
        current.append([head])
        yield from rec(tail, current)
        current.pop()

    yield from rec(items, [])


def restricted_perm(perm: Perm, block: Sequence[int]) -> Perm:
    """Restriction of perm to an invariant subset, relabeled to 0..len-1."""
    order = sorted(block)
    pos = {x: i for i, x in enumerate(order)}
    return tuple(pos[perm[x]] for x in order)
