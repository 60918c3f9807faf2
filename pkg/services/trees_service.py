"""Planar rooted binary trees and the iterated cobracket maps they index.

A tree is ``LEAF`` (the empty tuple) or a pair ``(left, right)``.
"""

from functools import lru_cache
from math import comb
from typing import Callable, Dict, Hashable, List, Tuple

from .errors import InvalidInputError
from .linear import Combination, accumulate

Tree = tuple
LEAF: Tree = ()

Cobracket = Callable[[Hashable], Combination]  # basis tag -> tensor keyed by (u, v)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def leaf_count(tree: Tree) -> int:
    if tree == LEAF:
        return 1
    return leaf_count(tree[0]) + leaf_count(tree[1])


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> Tuple[Tree, ...]:
    if n < 1:
        raise InvalidInputError(f"a tree needs at least one leaf, got {n}")
    if n == 1:
        return (LEAF,)
    out: List[Tree] = []
    for k in range(1, n):
        for left in enumerate_trees(k):
            for right in enumerate_trees(n - k):
                out.append((left, right))
    return tuple(out)


def tree_to_string(tree: Tree) -> str:
    if tree == LEAF:
        return "*"
    return f"[{tree_to_string(tree[0])},{tree_to_string(tree[1])}]"


def cherries(tree: Tree, offset: int = 0) -> List[int]:
    """Leaf positions (0-based) of the left leaf of every cherry."""
    if tree == LEAF:
        return []
    left, right = tree
    if left == LEAF and right == LEAF:
        return [offset]
    return cherries(left, offset) + cherries(right, offset + leaf_count(left))


def strip_cherry(tree: Tree, position: int, offset: int = 0) -> Tree:
    if tree == LEAF:
        raise InvalidInputError("no cherry at that position")
    left, right = tree
    if left == LEAF and right == LEAF and offset == position:
        return LEAF
    n_left = leaf_count(left)
    if position < offset + n_left:
        return (strip_cherry(left, position, offset), right)
    return (left, strip_cherry(right, position, offset + n_left))


def _expand_slot(tensor: Combination, position: int, cobracket: Cobracket) -> Combination:
    acc: Dict[tuple, object] = {}
    for factors, c in tensor.items():
        for (u, v), c2 in cobracket(factors[position]).items():
            accumulate(acc, factors[:position] + (u, v) + factors[position + 1:], c * c2)
    return Combination.from_accumulator(acc)


def delta_T(tree: Tree, element: Combination, cobracket: Cobracket, cherry: str = "first") -> Combination:
    """Iterated cobracket along ``tree`` by stripping a cherry.

    The result is keyed by ``n``-tuples of basis tags. ``cherry`` picks the
    first or last cherry at every step; the value does not depend on it.
    """
    if tree == LEAF:
        return element.map_keys(lambda tag: ((tag,), 1))
    options = cherries(tree)
    position = options[0] if cherry == "first" else options[-1]
    smaller = delta_T(strip_cherry(tree, position), element, cobracket, cherry)
    return _expand_slot(smaller, position, cobracket)


def delta_T_top_down(tree: Tree, element: Combination, cobracket: Cobracket) -> Combination:
    """``(delta_L (x) delta_R) o delta``, the root-first form of the same map."""
    if tree == LEAF:
        return element.map_keys(lambda tag: ((tag,), 1))
    left, right = tree
    acc: Dict[tuple, object] = {}
    for tag, c in element.items():
        for (u, v), c2 in cobracket(tag).items():
            lhs = delta_T_top_down(left, Combination.basis(u), cobracket)
            rhs = delta_T_top_down(right, Combination.basis(v), cobracket)
            for f1, c3 in lhs.items():
                for f2, c4 in rhs.items():
                    accumulate(acc, f1 + f2, c * c2 * c3 * c4)
    return Combination.from_accumulator(acc)
