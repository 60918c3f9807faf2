import pytest

from services.colie_service import T0, T1, T_AT_ONE, TX, cobracket_tensor, colie_basis
from services.errors import InvalidInputError
from services.trees_service import (
    LEAF,
    catalan,
    cherries,
    delta_T,
    delta_T_top_down,
    enumerate_trees,
    leaf_count,
    strip_cherry,
    tree_to_string,
)
from services.words_service import lyndon_words


def tag_cobracket(tag):
    return cobracket_tensor(colie_basis(tag))


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14), (6, 42)])
def test_tree_counts(n, count):
    assert len(enumerate_trees(n)) == count == catalan(n - 1)


def test_trees_with_three_leaves():
    assert [tree_to_string(t) for t in enumerate_trees(3)] == ["[*,[*,*]]", "[[*,*],*]"]


def test_no_trees_without_leaves():
    with pytest.raises(InvalidInputError):
        enumerate_trees(0)


def test_cherries_and_stripping():
    tree = (LEAF, (LEAF, LEAF))
    assert cherries(tree) == [1]
    assert strip_cherry(tree, 1) == (LEAF, LEAF)
    both = ((LEAF, LEAF), (LEAF, LEAF))
    assert cherries(both) == [0, 2]
    assert leaf_count(both) == 4


def test_single_cherry_is_the_cobracket():
    t = colie_basis((T0, "01"))
    assert delta_T((LEAF, LEAF), t, tag_cobracket) == cobracket_tensor(t)


def test_leaf_is_the_identity():
    t = colie_basis((TX, "011"), 3)
    assert delta_T(LEAF, t, tag_cobracket) == t.map_keys(lambda tag: ((tag,), 1))


def test_iterated_cobracket_does_not_depend_on_the_cherry():
    for w in lyndon_words(5):
        if len(w) < 3:
            continue
        for kind in (T0, T1, TX, T_AT_ONE):
            t = colie_basis((kind, w))
            for n in range(3, len(w) + 1):
                for tree in enumerate_trees(n):
                    first = delta_T(tree, t, tag_cobracket)
                    assert first == delta_T(tree, t, tag_cobracket, cherry="last")
                    assert first == delta_T_top_down(tree, t, tag_cobracket)
