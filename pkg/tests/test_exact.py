from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacktop.exact import (GAMMA_A, GammaPoly, KLPoly, Laurent, NoPreimage,
                           NotInvariant, NotLaurent, RatFunc, alpha_to_A,
                           gamma_recover, subst_gamma)


def L(d):
    return Laurent(d)


def test_laurent_mul_monomials():
    assert L({1: 1}) * L({1: 1}) == L({2: 1})


def test_laurent_additive_inverse():
    a = L({1: 1, -1: -1})
    b = L({1: -1, -1: 1})
    assert (a + b).is_zero()


def test_laurent_schoolbook_square():
    # (2A - 1/A)^2 expanded by hand: 4A^2 - 4 + A^-2
    a = L({1: 2, -1: -1})
    assert a * a == L({2: 4, 0: -4, -2: 1})


def test_laurent_degree_and_coeff():
    f = L({2: 3, -1: Fraction(-1, 2)})
    assert f.degree() == 2
    assert f.coeff(2) == 3
    assert f.coeff(0) == 0
    assert Laurent.zero().degree() is None


def test_subst_gamma_basics():
    assert subst_gamma(GammaPoly.var()) == GAMMA_A == L({1: -1, -1: 1})
    assert subst_gamma(GammaPoly.const(1)) == L({0: 1})
    assert subst_gamma(GammaPoly({2: 1})) == L({2: 1, 0: -2, -2: 1})


def test_coeff_of_gamma_square_image():
    assert subst_gamma(GammaPoly({2: 1})).coeff(-2) == 1


def test_s_involution_values():
    assert L({1: 1}).s_involution() == L({-1: -1})
    assert GAMMA_A.s_involution() == GAMMA_A
    assert L({0: 1}).s_involution() == L({0: 1})


def test_gamma_recover_examples():
    assert gamma_recover(L({1: -1, -1: 1})) == GammaPoly.var()
    assert gamma_recover(Laurent.zero()) == GammaPoly.zero()
    assert gamma_recover(L({2: 1, 0: -2, -2: 1})) == GammaPoly({2: 1})


def test_gamma_recover_not_invariant():
    with pytest.raises(NotInvariant):
        gamma_recover(L({1: 1}))


def test_gamma_recover_no_preimage():
    # Invariant under the substitution but with a negative-only top degree.
    with pytest.raises((NotInvariant, NoPreimage)):
        gamma_recover(L({-2: 1}))


def test_ratfunc_basics():
    alpha = RatFunc.alpha()
    assert alpha_to_A(alpha) == L({2: 1})
    assert alpha_to_A(alpha - RatFunc(1)) == L({2: 1, 0: -1})
    assert alpha_to_A(RatFunc(1) / alpha) == L({-2: 1})


def test_ratfunc_normalization():
    # gcd-reduced with monic denominator after every operation
    a = RatFunc((Fraction(0), Fraction(2)), (Fraction(0), Fraction(0), Fraction(4)))
    assert a == RatFunc(Fraction(1, 2)) / RatFunc.alpha()
    assert a.den[-1] == 1


def test_alpha_to_A_not_laurent():
    # 1/(alpha+1) does not become a Laurent polynomial.
    bad = RatFunc(1) / (RatFunc.alpha() + 1)
    with pytest.raises(NotLaurent):
        alpha_to_A(bad)


def test_ratfunc_parse_roundtrip():
    a = (RatFunc.alpha() * 3 - RatFunc(Fraction(1, 2))) / (RatFunc.alpha() + 2)
    assert RatFunc.parse(a.text()) == a


def test_kl_graded_part():
    p = KLPoly({(0, (3,)): 1, (1, (2,)): 1, (0, (2,)): 5})
    assert p.graded_part(3) == KLPoly({(0, (3,)): 1, (1, (2,)): 1})
    assert p.graded_part(0).is_zero()


def test_kl_add_disjoint():
    a = KLPoly({(0, (3,)): 1})
    b = KLPoly({(1, (2,)): 2})
    assert a + b == KLPoly({(0, (3,)): 1, (1, (2,)): 2})


def test_kl_json_order():
    p = KLPoly({(3, (2,)): 6, (0, (5,)): 1, (1, (2, 2)): 1, (1, (4,)): 6,
                (2, (3,)): 11})
    arr = p.to_json()
    assert [o["gamma"] for o in arr] == [0, 1, 1, 2, 3]
    assert arr[1]["mu"] == [4] and arr[2]["mu"] == [2, 2]
    assert KLPoly.from_json(arr) == p


def test_laurent_json_form():
    assert L({1: 2, -1: -1}).to_json() == {"-1": "-1", "1": "2"}
    assert Laurent.from_json({"-1": "-1", "1": "2"}) == L({1: 2, -1: -1})


small_fracs = st.fractions(min_value=-9, max_value=9, max_denominator=6)
laurents = st.dictionaries(st.integers(-6, 6), small_fracs, max_size=5).map(Laurent)
gamma_polys = st.dictionaries(st.integers(0, 5), small_fracs, max_size=4).map(GammaPoly)


@given(laurents)
def test_s_involution_is_involution(f):
    assert f.s_involution().s_involution() == f


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c


@given(gamma_polys)
def test_gamma_roundtrip(p):
    assert gamma_recover(subst_gamma(p)) == p


@given(gamma_polys)
def test_gamma_degree_preserved(p):
    image = subst_gamma(p)
    if p.is_zero():
        assert image.is_zero()
    else:
        assert image.degree() == p.degree()


monomial_ratfuncs = st.tuples(
    st.lists(small_fracs, max_size=4).map(
        lambda c: tuple(Fraction(x) for x in c)),
    st.integers(0, 3),
).filter(lambda t: any(t[0])).map(
    lambda t: RatFunc(t[0], (Fraction(0),) * t[1] + (Fraction(1),)))


@given(monomial_ratfuncs, monomial_ratfuncs)
@settings(max_examples=40)
def test_alpha_to_A_multiplicative(a, b):
    assert alpha_to_A(a * b) == alpha_to_A(a) * alpha_to_A(b)


def test_kl_scale():
    p = KLPoly({(0, (3,)): 1, (1, (2,)): 2})
    assert p.scale(Fraction(1, 2)) == KLPoly({(0, (3,)): Fraction(1, 2),
                                              (1, (2,)): 1})
    assert p.scale(0).is_zero()


@given(gamma_polys)
def test_gamma_images_are_involution_invariant(p):
    image = subst_gamma(p)
    assert image.s_involution() == image
