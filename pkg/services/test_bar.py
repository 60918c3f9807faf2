from fractions import Fraction

import pytest

from services.bar_service import EMPTY, bar_differential, bar_for, compositions
from services.cycle_models_service import model_X
from services.errors import InvalidElementError, InvalidInputError
from services.linear import Combination


@pytest.fixture
def bar():
    return bar_for(model_X(4))


def test_compositions():
    assert list(compositions(3, 2)) == [(0, 1, 3), (0, 2, 3)]
    assert list(compositions(2, 1)) == [(0, 2)]


def test_differential_of_two_closed_slots(bar):
    p = bar.presentation
    d = bar.differential(bar.gens("L1:0", "L0:1"))
    assert d == -bar.word(p.multiply(p.element("L1:0"), p.element("L0:1")))
    assert d == Combination({(("L0:1", "L1:0"),): 1})


def test_differential_of_one_slot(bar):
    assert bar.differential(bar.gens("L0:01")) == Combination({(("L0:1", "L1:0"),): -1})


def test_bar_differential_validates_slots():
    p = model_X(2)
    with pytest.raises(InvalidInputError):
        bar_differential(Combination.basis((("L0:0",),)), p)
    with pytest.raises(InvalidElementError):
        bar_differential(Combination.basis(((),)), p)


def test_constant_slot_rejected(bar):
    with pytest.raises(InvalidElementError):
        bar.word(Combination.basis(()))


def test_deconcatenation_of_two_slots(bar):
    word = (("L1:0",), ("L0:1",))
    assert bar.deconcatenation(Combination.basis(word)) == Combination(
        {(EMPTY, word): 1, (word[:1], word[1:]): 1, (word, EMPTY): 1}
    )
    assert bar.reduced_coproduct(Combination.basis(word)) == Combination({(word[:1], word[1:]): 1})


def test_shuffle_of_single_slots(bar):
    g, h = "L1:0", "L0:1"
    assert bar.shuffle(bar.gens(g), bar.gens(h)) == bar.gens(g, h) + bar.gens(h, g)


def test_projector_antisymmetrizes_pairs(bar):
    g, h = "L1:0", "L0:1"
    expected = (bar.gens(g, h) - bar.gens(h, g)) * Fraction(1, 2)
    assert bar.hain_projector(bar.gens(g, h)) == expected
    assert bar.hain_projector(bar.gens(g)) == bar.gens(g)


def test_projector_rejects_the_unit(bar):
    with pytest.raises(InvalidElementError):
        bar.hain_projector(Combination.basis(EMPTY))


def test_differential_squares_to_zero(bar, rng):
    for _ in range(50):
        b = bar.random_element(rng, 4)
        assert bar.differential(bar.differential(b)).is_zero()


def test_shuffle_is_graded_commutative_and_associative(bar, rng):
    for _ in range(50):
        x = bar.random_element(rng, 4, max_length=2)
        y = bar.random_element(rng, 4, max_length=2)
        z = bar.random_element(rng, 4, max_length=1)
        swapped = Combination()
        for u, cu in x.items():
            for v, cv in y.items():
                sign = -1 if (bar.bar_degree(u) * bar.bar_degree(v)) % 2 else 1
                swapped = swapped + bar.shuffle(Combination.basis(v), Combination.basis(u)) * (cu * cv * sign)
        assert bar.shuffle(x, y) == swapped
        assert bar.shuffle(bar.shuffle(x, y), z) == bar.shuffle(x, bar.shuffle(y, z))


def test_deconcatenation_is_multiplicative(bar, rng):
    for _ in range(50):
        x = bar.random_element(rng, 4, max_length=2)
        y = bar.random_element(rng, 4, max_length=2)
        lhs = bar.deconcatenation(bar.shuffle(x, y))
        rhs = bar.tensor_shuffle(bar.deconcatenation(x), bar.deconcatenation(y))
        assert lhs == rhs


def test_differential_is_a_derivation_of_shuffle(bar, rng):
    for _ in range(50):
        x = bar.random_element(rng, 4, max_length=2)
        y = bar.random_element(rng, 4, max_length=2)
        lhs = bar.differential(bar.shuffle(x, y))
        rhs = bar.shuffle(bar.differential(x), y)
        for u, c in x.items():
            sign = -1 if bar.bar_degree(u) % 2 else 1
            rhs = rhs + bar.shuffle(Combination.basis(u), bar.differential(y)) * (c * sign)
        assert lhs == rhs


def test_projector_properties(bar, rng):
    for _ in range(50):
        b = bar.random_element(rng, 4)
        pb = bar.hain_projector(b)
        assert bar.hain_projector(pb) == pb
        assert bar.hain_projector(bar.differential(b)) == bar.differential(pb)
        x = bar.random_element(rng, 4, max_length=2)
        y = bar.random_element(rng, 4, max_length=2)
        assert bar.hain_projector(bar.shuffle(x, y)).is_zero()


def test_delta_q_of_a_single_slot_vanishes(bar):
    assert bar.delta_Q(bar.gens("L0:01")).is_zero()
