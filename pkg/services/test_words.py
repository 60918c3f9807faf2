import pytest

from services.errors import InvalidInputError
from services.words_service import (
    is_lyndon,
    lyndon_words,
    lyndon_words_of_length,
    standard_factorization,
    validate_lyndon,
)


def test_lyndon_words_to_length_four():
    assert list(lyndon_words(4)) == ["0", "0001", "001", "0011", "01", "011", "0111", "1"]


@pytest.mark.parametrize("n, count", [(1, 2), (2, 1), (3, 2), (4, 3), (5, 6), (6, 9), (7, 18)])
def test_lyndon_counts_follow_necklace_formula(n, count):
    assert len(lyndon_words_of_length(n)) == count


@pytest.mark.parametrize("word, expected", [("0", True), ("01", True), ("0011", True), ("10", False), ("0101", False), ("00", False)])
def test_is_lyndon(word, expected):
    assert is_lyndon(word) is expected


@pytest.mark.parametrize("word", ["", "012", "ab"])
def test_bad_words_rejected(word):
    with pytest.raises(InvalidInputError):
        is_lyndon(word)


@pytest.mark.parametrize(
    "word, factors",
    [
        ("01", ("0", "1")),
        ("001", ("0", "01")),
        ("011", ("01", "1")),
        ("0001", ("0", "001")),
        ("0011", ("0", "011")),
        ("0111", ("011", "1")),
        ("00101", ("001", "01")),
    ],
)
def test_standard_factorization(word, factors):
    assert standard_factorization(word) == factors


def test_factors_are_lyndon_and_recombine():
    for w in lyndon_words(7):
        if len(w) < 2:
            continue
        u, v = standard_factorization(w)
        assert u + v == w
        assert is_lyndon(u) and is_lyndon(v)
        assert u < v


@pytest.mark.parametrize("word", ["0", "1", "10", "0101"])
def test_factorization_needs_lyndon_word_of_length_two(word):
    with pytest.raises(InvalidInputError):
        standard_factorization(word)


def test_validate_lyndon_passes_word_through():
    assert validate_lyndon("011") == "011"
    with pytest.raises(InvalidInputError):
        validate_lyndon("110")
