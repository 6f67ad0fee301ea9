import itertools
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reflr.crystal import (
    LOWER,
    RAISE,
    crystal_step,
    demazure_crystal,
    e,
    evacuation,
    extreme_tableau,
    f,
    highest_tableau,
    is_dominant,
    is_semistandard,
    opposite_crystal_by_cell,
    refined_lr_crystal,
    reverse_row_word,
    semistandard_tableaux,
    string_closure,
    tableau_from_word,
    weight,
)
from reflr.partitions import partitions_in_box
from reflr.permutations import Permutation, all_permutations, bruhat_covers, longest_element
from reflr.polyring import IntPolynomial, demazure_char, schur_poly

P = Permutation.parse


def test_reverse_row_word_examples():
    assert reverse_row_word(((1, 2, 3), (2, 3))) == (3, 2, 1, 3, 2)
    assert reverse_row_word(((1, 1),)) == (1, 1)
    assert reverse_row_word(highest_tableau((2, 1))) == (1, 1, 2)
    T = ((1, 2, 3), (2, 3))
    assert tableau_from_word(reverse_row_word(T), (3, 2, 0)) == T


def test_crystal_step_examples():
    assert crystal_step(LOWER, 1, (2, 1)) == (2, 2)
    assert crystal_step(RAISE, 1, (1, 2)) is None
    assert crystal_step(LOWER, 1, (2, 1, 2)) is None
    with pytest.raises(ValueError):
        crystal_step("sideways", 1, (1,))


@given(st.lists(st.integers(1, 4), max_size=9), st.integers(1, 3))
def test_raise_and_lower_are_inverse(u, i):
    u = tuple(u)
    v = f(i, u)
    if v is not None:
        assert e(i, v) == u
    v = e(i, u)
    if v is not None:
        assert f(i, v) == u


def test_extreme_tableaux():
    assert extreme_tableau((2, 1)) == ((1, 1), (2,))
    assert extreme_tableau((1, 0), "lowest", 2) == ((2,),)
    assert extreme_tableau((2, 1, 0), "lowest", 3) == ((2, 3), (3,))
    with pytest.raises(ValueError):
        extreme_tableau((1,), "middle")


def test_is_dominant_examples():
    assert not is_dominant((3, 2, 1, 3, 2))
    assert is_dominant((1, 1, 2))
    assert is_dominant((1, 1, 2, 2, 1, 2))


def test_dominant_iff_highest_weight():
    for length in range(6):
        for u in itertools.product((1, 2, 3), repeat=length):
            killed = all(e(i, u) is None for i in (1, 2))
            assert is_dominant(u, 3) == killed


def test_demazure_crystal_examples():
    mu = (2, 1, 0)
    assert demazure_crystal(mu, Permutation.identity(3)).elements == {(1, 1, 2)}
    assert demazure_crystal(mu, P("213")).elements == {(1, 1, 2), (2, 1, 2)}
    full = {reverse_row_word(T) for T in semistandard_tableaux(mu, 3)}
    assert demazure_crystal(mu, longest_element(3)).elements == full
    assert all(is_semistandard(T) for T in demazure_crystal(mu, longest_element(3)).tableaux())


@pytest.mark.parametrize("mu", [(2, 1, 0), (3, 1, 0), (2, 2, 1)])
def test_full_closure_character_is_schur(mu):
    top = reverse_row_word(highest_tableau(mu))
    seen, frontier = {top}, [top]
    while frontier:
        u = frontier.pop()
        for i in (1, 2):
            v = f(i, u)
            if v is not None and v not in seen:
                seen.add(v)
                frontier.append(v)
    assert IntPolynomial(3, Counter(weight(u, 3) for u in seen)) == schur_poly(mu)


@pytest.mark.parametrize("n,max_part", [(2, 3), (3, 3), (4, 1)])
def test_character_matches_key_polynomial(n, max_part):
    for mu in partitions_in_box(n, max_part):
        for w in all_permutations(n):
            assert demazure_crystal(mu, w).character() == demazure_char(w, mu)


def _reduced_words(w):
    return [word for word in itertools.product(range(1, w.n), repeat=w.length())
            if Permutation.from_word(word, w.n) == w]


@pytest.mark.parametrize("n,mu", [(3, (2, 1, 0)), (3, (3, 2, 0)), (4, (2, 1, 0, 0)), (4, (2, 1, 1, 0))])
def test_word_independence(n, mu):
    for w in all_permutations(n):
        ref = demazure_crystal(mu, w).elements
        for word in _reduced_words(w):
            assert demazure_crystal(mu, w, word=word).elements == ref


def test_bad_custom_word_rejected():
    with pytest.raises(ValueError):
        demazure_crystal((2, 1, 0), P("321"), word=(1, 2))


def test_bruhat_inclusion():
    for mu in [(2, 1, 0, 0), (2, 2, 1, 0)]:
        for u in all_permutations(4):
            for v in bruhat_covers(u):
                assert demazure_crystal(mu, u).elements <= demazure_crystal(mu, v).elements


def test_dominant_seed_gives_isomorphic_crystal():
    # 121 is dominant of weight (2, 1) but is not a tableau word
    for w in all_permutations(3):
        B = demazure_crystal((2, 1, 0), w, seed=(1, 2, 1))
        assert B.character() == demazure_char(w, (2, 1, 0))


def test_refined_lr_crystal_examples():
    s1 = P("213")
    assert refined_lr_crystal((2, 1, 0), (2, 1, 0), (3, 3, 0), s1) == 1
    assert refined_lr_crystal((2, 1, 0), (2, 1, 0), (4, 2, 0), s1) == 1
    e3 = Permutation.identity(3)
    assert refined_lr_crystal((2, 1, 0), (2, 1, 0), (3, 2, 1), e3) == 0
    assert refined_lr_crystal((2, 1, 0), (2, 1, 0), (5, 2, 0), s1) == 0


def test_string_closure_stages():
    # f_2 first, then f_1: 112 -> 113 -> {113, 213}; 112 -> 212
    got = string_closure((1, 2), [(1, 1, 2)])
    assert got == demazure_crystal((2, 1, 0), P("231")).elements


# --- evacuation ----------------------------------------------------------------

def test_evacuation_examples():
    assert evacuation(((1,),), 2) == ((2,),)
    assert evacuation(((2,),), 2) == ((1,),)
    for mu in [(2, 1, 0), (3, 1, 0), (2, 2, 0)]:
        assert evacuation(highest_tableau(mu), 3) == extreme_tableau(mu, "lowest", 3)
    tabs = list(semistandard_tableaux((2, 1), 3))
    assert len(tabs) == 8
    assert all(evacuation(evacuation(T, 3), 3) == T for T in tabs)


@pytest.mark.parametrize("n,max_part", [(2, 3), (3, 2), (4, 2)])
def test_evacuation_involution_and_weight(n, max_part):
    for mu in partitions_in_box(n, max_part):
        for T in semistandard_tableaux(mu, n):
            E = evacuation(T, n)
            assert is_semistandard(E) and evacuation(E, n) == T
            wt = weight(reverse_row_word(T), n)
            assert weight(reverse_row_word(E), n) == wt[::-1]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_evacuation_twists_crystal_operators(n):
    # evac(f_i T) = e_{n-i}(evac T)
    for mu in partitions_in_box(n, 2):
        for T in semistandard_tableaux(mu, n):
            u = reverse_row_word(T)
            Eu = reverse_row_word(evacuation(T, n))
            for i in range(1, n):
                v = f(i, u)
                lhs = None if v is None else reverse_row_word(evacuation(tableau_from_word(v, mu), n))
                assert lhs == e(n - i, Eu)


@pytest.mark.parametrize("n,max_part", [(2, 3), (3, 2), (4, 2)])
def test_evacuation_exchanges_demazure_and_opposite(n, max_part):
    w0 = longest_element(n)
    for mu in partitions_in_box(n, max_part):
        for w in all_permutations(n):
            B = demazure_crystal(mu, w).tableaux()
            Bop = opposite_crystal_by_cell(mu, w).tableaux()
            assert {evacuation(T, n) for T in B} == opposite_crystal_by_cell(mu, w0 * w).tableaux()
            assert {evacuation(T, n) for T in Bop} == demazure_crystal(mu, w0 * w).tableaux()
