import pytest

from services.errors import NotALieElementError
from services.freelie_service import alpha_table, expand, expand_lie, lie_basis, lie_bracket, rewrite_in_lyndon
from services.linear import Combination, format_fraction
from services.words_service import lyndon_words


def test_expansions_of_small_brackets():
    assert expand("01") == Combination({"01": 1, "10": -1})
    assert expand("001") == Combination({"001": 1, "010": -2, "100": 1})
    assert expand("011") == Combination({"011": 1, "101": -2, "110": 1})


def test_smallest_word_of_expansion_is_the_word():
    for w in lyndon_words(6):
        e = expand(w)
        assert min(e) == w
        assert e[w] == 1


def test_rewrite_inverts_expand(rng):
    words = lyndon_words(5)
    for _ in range(30):
        element = Combination([(rng.choice(words), rng.randint(-3, 3)) for _ in range(4)])
        assert rewrite_in_lyndon(expand_lie(element)) == element


def test_rewrite_rejects_non_lie_polynomial():
    with pytest.raises(NotALieElementError):
        rewrite_in_lyndon(Combination.basis("01"))
    with pytest.raises(NotALieElementError):
        rewrite_in_lyndon(Combination.basis(""))


def test_bracket_of_letters():
    x0, x1 = lie_basis("0"), lie_basis("1")
    assert lie_bracket(x0, x1) == lie_basis("01")
    assert lie_bracket(x1, x0) == lie_basis("01", -1)
    assert lie_bracket(x0, x0).is_zero()


def test_bracket_follows_standard_factorization():
    assert lie_bracket(lie_basis("0"), lie_basis("01")) == lie_basis("001")
    assert lie_bracket(lie_basis("01"), lie_basis("1")) == lie_basis("011")
    assert lie_bracket(lie_basis("1"), lie_basis("01")) == lie_basis("011", -1)


def test_jacobi_on_basis_triples():
    words = lyndon_words(3)
    for a in words:
        for b in words:
            for c in words:
                if len(a) + len(b) + len(c) > 5:
                    continue
                x, y, z = lie_basis(a), lie_basis(b), lie_basis(c)
                total = (
                    lie_bracket(x, lie_bracket(y, z))
                    + lie_bracket(y, lie_bracket(z, x))
                    + lie_bracket(z, lie_bracket(x, y))
                )
                assert total.is_zero(), (a, b, c)


def test_alpha_table_to_weight_three():
    entries = [(w, u, v, format_fraction(c)) for w, u, v, c in alpha_table(3).entries()]
    assert entries == [("01", "0", "1", "1"), ("001", "0", "01", "1"), ("011", "01", "1", "1")]


def test_alpha_entries_are_integral_and_graded():
    for w, u, v, c in alpha_table(6).entries():
        assert c.denominator == 1
        assert len(u) + len(v) == len(w)
        assert u < v
