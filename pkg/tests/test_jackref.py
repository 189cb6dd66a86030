import pytest

from jacktop.exact import Laurent, RatFunc
from jacktop.jackref import (BoundExceeded, _apply_U, _basis, _collect_m,
                             _count_assignments, _m_expand, jack_character,
                             jack_m_expansion, jack_m_expansion_gram_schmidt,
                             jack_powersum)
from jacktop.young import enumerate_partitions, partitions_of, size

ALPHA = RatFunc.alpha()


def test_u_matrix_matches_dense_oracle():
    # Dual route: the pairwise closed form against the full monomial
    # expansion with synthetic division.
    for n in range(1, 6):
        basis = _basis(n)
        for ci, nu in enumerate(basis.parts):
            img = _apply_U(_m_expand(nu, n), n)
            dense = {basis.index[mu]: c
                     for mu, c in _collect_m(img, basis.parts, n).items()}
            assert dense == basis.u_cols[ci], (n, nu)


def test_power_sum_monomial_counts():
    # p_1^2 = m_2 + 2 m_11, p_2 = m_2
    assert _count_assignments((1, 1), (2,)) == 1
    assert _count_assignments((1, 1), (1, 1)) == 2
    assert _count_assignments((2,), (1, 1)) == 0
    assert _count_assignments((2,), (2,)) == 1


def test_small_jack_tables():
    # classical J tables: J_(1) = p_1, J_(2) = p_1^2 + a p_2,
    # J_(11) = p_1^2 - p_2
    assert jack_powersum((1,)) == {(1,): RatFunc(1)}
    assert jack_powersum((2,)) == {(1, 1): RatFunc(1), (2,): ALPHA}
    assert jack_powersum((1, 1)) == {(1, 1): RatFunc(1), (2,): RatFunc(-1)}


def test_bottom_coefficients():
    from math import factorial
    for n in range(1, 6):
        for lam in partitions_of(n):
            # the power-sum coefficient at 1^n is 1 ...
            theta = jack_powersum(lam)
            assert theta[tuple([1] * n)] == RatFunc(1), lam
            # ... while the monomial coefficient at 1^n is n!
            mvec = jack_m_expansion(lam)
            assert mvec[tuple([1] * n)] == RatFunc(factorial(n)), lam


def test_gram_schmidt_cross_validation():
    for lam in enumerate_partitions(4):
        if lam == ():
            continue
        assert jack_m_expansion(lam) == jack_m_expansion_gram_schmidt(lam), lam


def test_character_closed_forms_small():
    # Ch_empty = 1, Ch_1 = |lambda|
    for lam in enumerate_partitions(5):
        assert jack_character((), lam) == Laurent.const(1)
        assert jack_character((1,), lam) == Laurent.const(size(lam))


def test_character_examples():
    assert jack_character((2,), (2,)) == Laurent({1: 2})
    assert jack_character((3,), (1,)).is_zero()
    assert jack_character((1, 1), (2,)) == Laurent.const(2)


def test_character_vanishing():
    for s in range(1, 6):
        for pi in partitions_of(s):
            for lam in enumerate_partitions(s - 1):
                assert jack_character(pi, lam).is_zero(), (pi, lam)


def test_character_laurent_degree_bound():
    for s in range(6):
        for pi in partitions_of(s):
            bound = size(pi) - len(pi)
            for lam in enumerate_partitions(5):
                value = jack_character(pi, lam)
                if not value.is_zero():
                    assert value.degree() <= bound, (pi, lam)


def test_bound_exceeded():
    with pytest.raises(BoundExceeded):
        jack_powersum((9,))
    with pytest.raises(BoundExceeded):
        jack_character((2,), (5, 4), bound=6)
    assert jack_powersum((3, 3, 3), bound=9)


def test_character_at_unit_alpha_single_part():
    # At A := 1 the one-part characters on one-row diagrams reduce to the
    # falling factorial |lam| * (|lam|-1) * ... (trivial representation).
    for n in range(1, 5):
        for q in range(n, 8):
            value = jack_character((n,), (q,))
            at_one = sum(c for _, c in value.items())
            expected = 1
            for j in range(n):
                expected *= q - j
            assert at_one == expected
