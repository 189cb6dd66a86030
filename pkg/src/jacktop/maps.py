"""Permutations, transitive pairs, their conjugation orbits, and the
bicolored graphs they span, together with exact embedding counts.

A permutation on [n] is a tuple of images on 0..n-1 (0-indexed internally;
the text form '2,1,3' is 1-indexed).  A pair (s1, s2) is transitive when
the group it generates acts transitively on the ground set; such pairs are
connected labeled bicolored oriented maps with n edges, and the orbits of
simultaneous conjugation by the stabilizer of the last point are the
unlabeled rooted maps.  Every such orbit has exactly (n-1)! elements.
"""

from __future__ import annotations

from itertools import permutations as _itperms
from math import factorial
from typing import Iterator, Sequence

from .exact import Laurent
from .young import Partition

Perm = tuple  # tuple[int, ...], images of 0..n-1


class SizeMismatch(ValueError):
    """Permutations act on ground sets of different sizes."""


class NotTransitive(ValueError):
    """Pair does not generate a transitive group."""


class IsolatedVertex(ValueError):
    """Graph has a vertex with no neighbors; embedding count is infinite."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def full_cycle(n: int) -> Perm:
    """The cycle (1, 2, ..., n) in 0-indexed form."""
    return tuple((i + 1) % n for i in range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """(a b)(i) = a(b(i))."""
    if len(a) != len(b):
        raise SizeMismatch(f"{len(a)} vs {len(b)}")
    return tuple(a[b[i]] for i in range(len(a)))


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def conjugate(pi: Perm, a: Perm) -> Perm:
    """pi a pi**-1."""
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[pi[i]] = pi[j]
    return tuple(out)


def cycles(a: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles covering the ground set, each starting at its minimum."""
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = a[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = a[j]
        out.append(tuple(cyc))
    return out


def cycle_type(a: Perm) -> Partition:
    return tuple(sorted((len(c) for c in cycles(a)), reverse=True))


def perm_from_cycle_type(ct: Sequence[int]) -> Perm:
    """A concrete permutation with the given cycle type."""
    out: list[int] = []
    base = 0
    for k in ct:
        out.extend([base + (i + 1) % k for i in range(k)])
        base += k
    return tuple(out)


def parse_perm(text: str) -> Perm:
    """One-line 1-indexed image list, e.g. '2,1,3'."""
    images = [int(x) - 1 for x in text.strip().split(",")]
    if sorted(images) != list(range(len(images))):
        raise ValueError(f"not a permutation: {text}")
    return tuple(images)


def format_perm(a: Perm) -> str:
    return ",".join(str(i + 1) for i in a)


def is_transitive_pair(a: Perm, b: Perm) -> bool:
    """True iff the cycles of a and b merge the ground set into one class."""
    n = len(a)
    if len(b) != n:
        raise SizeMismatch(f"{n} vs {len(b)}")
    if n == 0:
        return False
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merged = n
    for p in (a, b):
        for i in range(n):
            ri, rj = find(i), find(p[i])
            if ri != rj:
                parent[ri] = rj
                merged -= 1
    return merged == 1


_JOBS = 1


def set_jobs(jobs: int) -> None:
    """Worker count for the enumeration scans (results are order-stable)."""
    global _JOBS
    _JOBS = max(1, int(jobs))


def _transitive_chunk(args: tuple[int, Perm]) -> list[Perm]:
    n, s1 = args
    return [tuple(s2) for s2 in _itperms(range(n)) if is_transitive_pair(s1, s2)]


def enumerate_transitive_pairs(n: int, outer: Perm | None = None
                               ) -> Iterator[tuple[Perm, Perm]]:
    """All transitive pairs, in lexicographic order of (s1, s2).

    With ``outer`` set, only the chunk with s1 = outer is produced, so the
    full enumeration splits into n! independent chunks.  Worker processes
    (see set_jobs) only reorder the scan internally; the yielded order is
    always the lexicographic one.
    """
    if n < 1:
        return
    if outer is not None:
        for s2 in _transitive_chunk((n, tuple(outer))):
            yield (tuple(outer), s2)
        return
    firsts = [tuple(p) for p in _itperms(range(n))]
    if _JOBS > 1:
        from multiprocessing import Pool
        with Pool(_JOBS) as pool:
            work = ((n, s1) for s1 in firsts)
            for s1, chunk in zip(firsts, pool.imap(_transitive_chunk, work,
                                                   chunksize=16)):
                for s2 in chunk:
                    yield (s1, s2)
        return
    for s1 in firsts:
        for s2 in _itperms(range(n)):
            if is_transitive_pair(s1, s2):
                yield (s1, tuple(s2))


def stabilizer_perms(n: int) -> list[Perm]:
    """All permutations fixing the last point, lexicographically."""
    return [tuple(p) + (n - 1,) for p in _itperms(range(n - 1))]


def pair_orbit(a: Perm, b: Perm, stab: list[Perm] | None = None
               ) -> set[tuple[Perm, Perm]]:
    n = len(a)
    if stab is None:
        stab = stabilizer_perms(n)
    return {(conjugate(pi, a), conjugate(pi, b)) for pi in stab}


def canonical_orbit_rep(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """Lexicographically minimal pair in the conjugation orbit of (a, b)."""
    if not is_transitive_pair(a, b):
        raise NotTransitive(f"({format_perm(a)}, {format_perm(b)})")
    return min(pair_orbit(a, b))


_CENSUS_CACHE: dict[int, list] = {}


def orbit_census(n: int) -> list[tuple[tuple[Perm, Perm], int]]:
    """All orbits of transitive pairs as (canonical rep, orbit size).

    Walks the pairs in lexicographic order and floods each new orbit, so a
    representative is found exactly once; output is sorted by representative.
    """
    hit = _CENSUS_CACHE.get(n)
    if hit is not None:
        return hit
    stab = stabilizer_perms(n)
    seen: set[bytes] = set()  # pairs packed as bytes to keep n=6 in memory
    out = []
    for a, b in enumerate_transitive_pairs(n):
        if bytes(a + b) in seen:
            continue
        orbit = pair_orbit(a, b, stab=stab)
        seen.update(bytes(pa + pb) for pa, pb in orbit)
        out.append((min(orbit), len(orbit)))
    out.sort()
    _CENSUS_CACHE[n] = out
    return out


def orbit_reps(n: int) -> list[tuple[Perm, Perm]]:
    census = orbit_census(n)
    expected = factorial(n - 1)
    for rep, orbit_size in census:
        if orbit_size != expected:
            raise AssertionError(
                f"orbit of {rep} has size {orbit_size}, expected {expected}")
    return [rep for rep, _ in census]


# ---------------------------------------------------------------------------
# Bicolored graphs.  Whites and blacks are 0-indexed; adjacency holds, for
# each white vertex, the set of adjacent black vertices.

class BicoloredGraph:
    """Bipartite graph with colored sides, as white -> {black} adjacency."""

    __slots__ = ("whites", "blacks", "adjacency")

    def __init__(self, whites: int, blacks: int,
                 adjacency: Sequence[frozenset | set]):
        if len(adjacency) != whites:
            raise ValueError("adjacency must list one black-set per white")
        self.whites = whites
        self.blacks = blacks
        self.adjacency = tuple(frozenset(s) for s in adjacency)
        for s in self.adjacency:
            for v in s:
                if not 0 <= v < blacks:
                    raise ValueError(f"black index {v} out of range")

    def black_neighbors(self) -> list[set[int]]:
        out: list[set[int]] = [set() for _ in range(self.blacks)]
        for w, s in enumerate(self.adjacency):
            for b in s:
                out[b].add(w)
        return out

    def has_isolated_vertex(self) -> bool:
        if any(not s for s in self.adjacency):
            return True
        covered = set()
        for s in self.adjacency:
            covered |= s
        return len(covered) < self.blacks

    def is_connected(self) -> bool:
        if self.whites + self.blacks == 0:
            return True
        nbrs = self.black_neighbors()
        todo = [("w", 0)] if self.whites else [("b", 0)]
        seen = {todo[0]}
        while todo:
            color, v = todo.pop()
            nxt = (("b", b) for b in self.adjacency[v]) if color == "w" \
                else (("w", w) for w in nbrs[v])
            for node in nxt:
                if node not in seen:
                    seen.add(node)
                    todo.append(node)
        return len(seen) == self.whites + self.blacks

    def canonical_key(self) -> tuple:
        """Complete isomorphism invariant: minimal white-mask multiset over
        all relabelings of the black side.  Sides this small (<= 8) make the
        brute-force minimum affordable."""
        best = None
        for pi in _itperms(range(self.blacks)):
            masks = sorted(sum(1 << pi[b] for b in s) for s in self.adjacency)
            key = tuple(masks)
            if best is None or key < best:
                best = key
        return (self.whites, self.blacks, best)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BicoloredGraph):
            return NotImplemented
        return (self.whites, self.blacks, self.adjacency) == \
            (other.whites, other.blacks, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.whites, self.blacks, self.adjacency))

    def __repr__(self) -> str:
        adj = ",".join("{" + ",".join(map(str, sorted(s))) + "}"
                       for s in self.adjacency)
        return f"BicoloredGraph(w={self.whites}, b={self.blacks}, adj=[{adj}])"


def graph_of_pair(a: Perm, b: Perm) -> BicoloredGraph:
    """Whites = cycles of a, blacks = cycles of b, edge iff cycles intersect."""
    if len(a) != len(b):
        raise SizeMismatch(f"{len(a)} vs {len(b)}")
    ca = cycles(a)
    cb = cycles(b)
    black_of = {}
    for j, cyc in enumerate(cb):
        for x in cyc:
            black_of[x] = j
    adjacency = [frozenset(black_of[x] for x in cyc) for cyc in ca]
    return BicoloredGraph(len(ca), len(cb), adjacency)


_EMBED_CACHE: dict[tuple, int] = {}


def count_embeddings(g: BicoloredGraph, lam: Partition) -> int:
    """Number of embeddings of g into lam.

    Uses the min-product form: sum over row assignments of the black side of
    the product, over whites, of the smallest assigned row length among the
    white's neighbors.  Exact because the embedding condition reads
    column(w) <= lam[row(b)] for every edge.
    """
    if g.has_isolated_vertex():
        raise IsolatedVertex(repr(g))
    key = (g.canonical_key(), lam)
    hit = _EMBED_CACHE.get(key)
    if hit is not None:
        return hit

    if g.blacks == 0:
        result = 1  # vacuous graph
    elif not lam:
        result = 0
    else:
        # Group equal rows: assignments only depend on the row length chosen.
        values: list[int] = []
        mult: list[int] = []
        for row in lam:
            if values and values[-1] == row:
                mult[-1] += 1
            else:
                values.append(row)
                mult.append(1)
        t = len(values)
        masks = [sum(1 << b for b in s) for s in g.adjacency]
        total = 0
        assign = [0] * g.blacks

        def rec(b: int, weight: int):
            nonlocal total
            if b == g.blacks:
                prod = weight
                for mask in masks:
                    m = mask
                    best = None
                    while m:
                        low = (m & -m).bit_length() - 1
                        v = values[assign[low]]
                        if best is None or v < best:
                            best = v
                        m &= m - 1
                    prod *= best
                    if prod == 0:
                        break
                total += prod
                return
            for i in range(t):
                assign[b] = i
                rec(b + 1, weight * mult[i])

        rec(0, 1)
        result = total

    _EMBED_CACHE[key] = result
    return result


def count_embeddings_naive(g: BicoloredGraph, lam: Partition) -> int:
    """Oracle: raw enumeration of (f1, f2) over the bounding box."""
    if g.has_isolated_vertex():
        raise IsolatedVertex(repr(g))
    if not lam:
        return 0 if (g.whites or g.blacks) else 1
    rows = len(lam)
    cols = lam[0]
    nbrs = g.black_neighbors()
    count = 0
    from itertools import product
    for f1 in product(range(1, cols + 1), repeat=g.whites):
        for f2 in product(range(1, rows + 1), repeat=g.blacks):
            ok = True
            for w in range(g.whites):
                for b in g.adjacency[w]:
                    if f1[w] > lam[f2[b] - 1]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                count += 1
    return count


def normalized_embeddings(a: Perm, b: Perm, lam: Partition) -> Laurent:
    """A**|whites| * (-1/A)**|blacks| * N_G(lam) for G = graph_of_pair(a, b)."""
    g = graph_of_pair(a, b)
    n = count_embeddings(g, lam)
    sign = -1 if g.blacks % 2 else 1
    return Laurent({g.whites - g.blacks: sign * n})


def normalized_embeddings_graph(g: BicoloredGraph, lam: Partition) -> Laurent:
    n = count_embeddings(g, lam)
    sign = -1 if g.blacks % 2 else 1
    return Laurent({g.whites - g.blacks: sign * n})
