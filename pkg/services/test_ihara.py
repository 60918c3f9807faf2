from services.freelie_service import lie_basis, lie_bracket
from services.ihara_service import (
    ihara_bracket,
    one_element,
    semidirect_bracket,
    special_derivation,
    structure_tables,
    x_element,
)
from services.words_service import lyndon_words


def test_special_derivation_on_letters():
    x0, x1 = lie_basis("0"), lie_basis("1")
    assert special_derivation(x0, x1) == lie_basis("01", -1)
    assert special_derivation(x0, x0).is_zero()
    assert special_derivation(x1, lie_basis("001")).is_zero()


def test_ihara_bracket_with_a_letter_vanishes():
    for w in lyndon_words(4):
        assert ihara_bracket(lie_basis("0"), lie_basis(w)).is_zero()
        assert ihara_bracket(lie_basis(w), lie_basis("1")).is_zero()


def test_derivation_commutator_is_derivation_of_ihara_bracket(rng):
    words = lyndon_words(3)
    x1 = lie_basis("1")
    for _ in range(20):
        f, g = lie_basis(rng.choice(words), rng.randint(1, 3)), lie_basis(rng.choice(words))
        lhs = special_derivation(f, special_derivation(g, x1)) - special_derivation(g, special_derivation(f, x1))
        assert lhs == special_derivation(ihara_bracket(f, g), x1)


def test_ihara_jacobi():
    words = lyndon_words(3)
    for a in words:
        for b in words:
            for c in words:
                if len(a) + len(b) + len(c) > 5:
                    continue
                x, y, z = lie_basis(a), lie_basis(b), lie_basis(c)
                total = (
                    ihara_bracket(x, ihara_bracket(y, z))
                    + ihara_bracket(y, ihara_bracket(z, x))
                    + ihara_bracket(z, ihara_bracket(x, y))
                )
                assert total.is_zero(), (a, b, c)


def test_semidirect_bracket_parts():
    bracket = semidirect_bracket(x_element(lie_basis("1")), one_element(lie_basis("0")))
    assert bracket.x_part == lie_basis("01")
    assert bracket.one_part.is_zero()
    xx = semidirect_bracket(x_element(lie_basis("0")), x_element(lie_basis("1")))
    assert xx.x_part == lie_bracket(lie_basis("0"), lie_basis("1"))


def test_beta_in_weight_two():
    tables = structure_tables(2)
    assert tables.beta.entries() == [("01", "1", "0", 1)]
    assert len(tables.gamma) == 0


def test_structure_constant_identities():
    tables = structure_tables(5)
    words = lyndon_words(5)
    for w in words:
        for u in words:
            for v in words:
                if len(u) + len(v) != len(w):
                    continue
                if u == "0":
                    assert tables.beta.value(w, "0", v) == 0
                    assert tables.beta.value(w, v, "0") == tables.alpha.value(w, "0", v)
                if v == "1":
                    assert tables.beta.value(w, u, "1") == 0
                    assert tables.beta.value(w, "1", u) == tables.alpha.value(w, u, "1")
                if u < v:
                    expected = tables.alpha.value(w, u, v) + tables.beta.value(w, u, v) - tables.beta.value(w, v, u)
                    assert tables.gamma.value(w, u, v) == expected
