import itertools

import pytest

from reflr.permutations import (
    Permutation,
    all_permutations,
    avoids_pattern,
    block_factor,
    bruhat_covers,
    bruhat_leq,
    compose,
    contains_pattern,
    double_coset,
    double_coset_rep,
    inverse,
    inversions,
    is_covered,
    length_and_reduced_word,
    longest_element,
)

P = Permutation.parse


def test_parse_forms():
    assert P("2413") == P("2,4,1,3") == Permutation((2, 4, 1, 3))
    with pytest.raises(ValueError):
        P("2214")
    with pytest.raises(ValueError):
        Permutation((1, 3))


def test_compose_examples():
    assert compose(P("213"), P("132")) == P("231")
    for v in all_permutations(3):
        assert compose(Permutation.identity(3), v) == v
    assert Permutation.simple(1, 3) * Permutation.simple(2, 3) == P("231")
    with pytest.raises(ValueError):
        compose(P("21"), P("123"))


def test_inverse_examples():
    assert inverse(P("231")) == P("312")
    assert inverse(Permutation.identity(4)).is_identity()
    assert inverse(P("4231")) == P("4231")


def test_reduced_word_examples():
    assert length_and_reduced_word(Permutation.identity(3)) == (0, ())
    assert length_and_reduced_word(P("321")) == (3, (1, 2, 1))
    assert length_and_reduced_word(P("231")) == (2, (1, 2))


def _all_reduced_words(w):
    out = []
    for word in itertools.product(range(1, w.n), repeat=w.length()):
        if Permutation.from_word(word, w.n) == w:
            out.append(word)
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reduced_word_is_lex_min_and_multiplies_back(n):
    for w in all_permutations(n):
        ell, word = length_and_reduced_word(w)
        assert ell == inversions(w) == len(word)
        assert Permutation.from_word(word, n) == w
        assert word == min(_all_reduced_words(w))


def test_longest_element():
    assert longest_element(1) == P("1")
    assert longest_element(3) == P("321")
    assert longest_element(5) == P("54321") and longest_element(5).length() == 10


def test_pattern_examples():
    assert avoids_pattern(P("321"), "312")
    assert not avoids_pattern(P("3142"), "312")
    assert avoids_pattern(Permutation.identity(4), "312")
    assert avoids_pattern(Permutation.identity(4), "231")
    with pytest.raises(ValueError):
        avoids_pattern(P("321"), "123")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pattern_dualities(n):
    w0 = longest_element(n)
    for w in all_permutations(n):
        assert avoids_pattern(w, "312") == avoids_pattern(w.inverse(), "231")
        assert avoids_pattern(w, "312") == (not contains_pattern(w0 * w, "132"))


def test_bruhat_examples():
    for w in all_permutations(3):
        assert bruhat_leq(Permutation.identity(3), w)
    assert bruhat_leq(P("231"), P("321"))
    assert not bruhat_leq(P("231"), P("312"))
    assert bruhat_covers(P("12")) == {P("21")}
    assert bruhat_covers(P("123")) == {P("213"), P("132")}
    assert bruhat_covers(P("321")) == set()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_matches_cover_closure(n):
    perms = all_permutations(n)
    above = {w: {w} for w in perms}
    for w in sorted(perms, key=lambda u: -u.length()):
        for v in bruhat_covers(w):
            above[w] |= above[v]
    for u in perms:
        for v in perms:
            assert bruhat_leq(u, v) == (v in above[u])


def test_double_coset_rep_examples():
    assert double_coset_rep((3, 2, 1), P("231"), (2, 1, 0)) == P("231")
    assert double_coset_rep((1, 1, 0), P("213"), (2, 1, 0)).is_identity()
    for w in all_permutations(3):
        assert double_coset_rep((0, 0, 0), w, (0, 0, 0)).is_identity()


def test_double_coset_rep_is_minimal():
    lam, mu = (2, 2, 1, 0), (1, 0, 0, 0)
    for w in all_permutations(4):
        coset = double_coset(lam, w, mu)
        rep = double_coset_rep(lam, w, mu)
        assert rep in coset and rep.length() == min(u.length() for u in coset)


def test_block_factor_examples():
    assert block_factor(P("2143"), (2, 2)) == [P("21"), P("21")]
    assert block_factor(P("2341"), (2, 2)) is None
    assert block_factor(Permutation.identity(5), (2, 1, 2)) == [
        Permutation.identity(2), Permutation.identity(1), Permutation.identity(2)]
    with pytest.raises(ValueError):
        block_factor(P("2143"), (2, 1))


def test_covered_class_in_s4():
    excluded = {w for w in all_permutations(4) if not is_covered(w)}
    assert excluded == {P("2413"), P("3142"), P("3412"), P("4231")}
    for n in (1, 2, 3):
        assert all(is_covered(w) for w in all_permutations(n))


def test_string_forms():
    assert str(P("2413")) == "2413"
    big = Permutation(tuple(range(10, 0, -1)))
    assert str(big) == "10,9,8,7,6,5,4,3,2,1"
    assert Permutation.parse(str(big)) == big
