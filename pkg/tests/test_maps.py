from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacktop.exact import Laurent
from jacktop.maps import (BicoloredGraph, IsolatedVertex, NotTransitive,
                          SizeMismatch, canonical_orbit_rep, compose,
                          count_embeddings, count_embeddings_naive, cycles,
                          cycle_type, enumerate_transitive_pairs, full_cycle,
                          graph_of_pair, identity, inverse,
                          is_transitive_pair, normalized_embeddings,
                          orbit_census, pair_orbit, parse_perm,
                          perm_from_cycle_type)
from jacktop.young import enumerate_partitions


def test_cycles_and_compose():
    assert cycles(identity(3)) == [(0,), (1,), (2,)]
    assert len(cycles(full_cycle(3))) == 1
    swap = (1, 0)
    assert compose(swap, swap) == identity(2)
    with pytest.raises(SizeMismatch):
        compose(identity(2), identity(3))


def test_parse_perm():
    assert parse_perm("2,1,3") == (1, 0, 2)
    with pytest.raises(ValueError):
        parse_perm("2,2,3")


def test_cycle_type_and_from():
    assert cycle_type((1, 0, 2)) == (2, 1)
    assert cycle_type(perm_from_cycle_type((3, 2))) == (3, 2)


def test_transitivity_basics():
    n = 4
    assert is_transitive_pair(identity(n), full_cycle(n))
    assert not is_transitive_pair(identity(2), identity(2))
    with pytest.raises(SizeMismatch):
        is_transitive_pair(identity(2), identity(3))


def _group_closure_transitive(a, b):
    """Independent oracle: orbit of 0 under the generated group via BFS."""
    n = len(a)
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for p in (a, b, inverse(a), inverse(b)):
            y = p[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == n


def test_transitive_count_n2():
    pairs = list(enumerate_transitive_pairs(2))
    assert len(pairs) == 3
    assert ((0, 1), (0, 1)) not in pairs


def test_transitive_pairs_vs_group_closure_n3():
    expected = [(tuple(a), tuple(b))
                for a in permutations(range(3)) for b in permutations(range(3))
                if _group_closure_transitive(tuple(a), tuple(b))]
    assert list(enumerate_transitive_pairs(3)) == expected


def test_chunked_enumeration_matches():
    full = list(enumerate_transitive_pairs(3))
    chunked = []
    for outer in permutations(range(3)):
        chunked.extend(enumerate_transitive_pairs(3, outer=tuple(outer)))
    assert full == chunked


def test_orbit_census_small():
    census2 = orbit_census(2)
    assert len(census2) == 3 and all(s == 1 for _, s in census2)
    census3 = orbit_census(3)
    assert len(census3) == 13 and all(s == 2 for _, s in census3)
    total = sum(s for _, s in census3)
    assert total == len(list(enumerate_transitive_pairs(3)))


def test_orbit_sizes_factorial_n_le_5():
    from math import factorial
    for n in range(1, 6):
        assert all(s == factorial(n - 1) for _, s in orbit_census(n))


def test_canonical_rep_idempotent():
    for a, b in enumerate_transitive_pairs(3):
        rep = canonical_orbit_rep(a, b)
        assert canonical_orbit_rep(*rep) == rep
        assert rep in pair_orbit(a, b)
    with pytest.raises(NotTransitive):
        canonical_orbit_rep(identity(2), identity(2))


def test_census_reps_are_canonical():
    for rep, _ in orbit_census(4):
        assert canonical_orbit_rep(*rep) == rep


def test_graph_of_pair():
    g = graph_of_pair(identity(2), (1, 0))
    assert (g.whites, g.blacks) == (2, 1)
    assert all(s == frozenset({0}) for s in g.adjacency)
    g = graph_of_pair((1, 0), (1, 0))
    assert (g.whites, g.blacks) == (1, 1)
    g = graph_of_pair(identity(1), identity(1))
    assert (g.whites, g.blacks) == (1, 1)


def test_transitive_pair_gives_connected_graph():
    for a, b in enumerate_transitive_pairs(4):
        assert graph_of_pair(a, b).is_connected()


def test_count_embeddings_examples():
    edge = BicoloredGraph(1, 1, [{0}])
    assert count_embeddings(edge, (2, 1)) == 3
    assert count_embeddings(edge, ()) == 0
    path = BicoloredGraph(2, 1, [{0}, {0}])
    assert count_embeddings(path, (1,)) == 1


def test_count_embeddings_isolated():
    lonely = BicoloredGraph(2, 1, [{0}, set()])
    with pytest.raises(IsolatedVertex):
        count_embeddings(lonely, (1,))


def test_embeddings_match_naive_oracle():
    from tests_support_graphs import all_small_graphs
    graphs = all_small_graphs()
    diagrams = list(enumerate_partitions(4))
    # (w,b) in {(1,1),(1,2),(1,3),(2,1),(3,1)} give one covering graph each,
    # (2,2) gives 7, for 12 ordered-white graphs in total.
    assert len(graphs) == 12
    for g in graphs:
        for lam in diagrams:
            assert count_embeddings(g, lam) == count_embeddings_naive(g, lam), \
                (g, lam)


def test_normalized_embeddings_examples():
    assert normalized_embeddings(identity(2), (1, 0), (1,)) == Laurent({1: -1})
    assert normalized_embeddings((1, 0), identity(2), (1,)) == Laurent({-1: 1})
    assert normalized_embeddings((1, 0), (1, 0), ()).is_zero()


def test_normalized_embeddings_orbit_invariant():
    for lam in [(2, 1), (3,), (1, 1, 1)]:
        for a, b in enumerate_transitive_pairs(3):
            base = normalized_embeddings(a, b, lam)
            for pa, pb in pair_orbit(a, b):
                assert normalized_embeddings(pa, pb, lam) == base


perm_strategy = st.permutations(list(range(4))).map(tuple)


@given(perm_strategy, perm_strategy)
@settings(max_examples=30)
def test_transitivity_matches_group_closure(a, b):
    assert is_transitive_pair(a, b) == _group_closure_transitive(a, b)


@given(perm_strategy)
def test_cycles_partition_ground_set(p):
    cs = cycles(p)
    seen = sorted(x for c in cs for x in c)
    assert seen == list(range(4))


def test_canonical_graph_key_is_isomorphism_invariant():
    from itertools import permutations as _perms
    g = BicoloredGraph(3, 2, [{0, 1}, {0}, {1}])
    base = g.canonical_key()
    for bp in _perms(range(2)):
        for wp in _perms(range(3)):
            relabeled = BicoloredGraph(
                3, 2, [{bp[b] for b in g.adjacency[wp[w]]} for w in range(3)])
            assert relabeled.canonical_key() == base


def test_canonical_graph_key_separates():
    from tests_support_graphs import all_small_graphs
    from jacktop.young import enumerate_partitions
    graphs = all_small_graphs()
    fingerprints = {}
    for g in graphs:
        fp = tuple(count_embeddings(g, lam) for lam in enumerate_partitions(4))
        fingerprints.setdefault(g.canonical_key(), set()).add(fp)
    # a shared memo key must never mix graphs with different counts
    for key, fps in fingerprints.items():
        assert len(fps) == 1, key
