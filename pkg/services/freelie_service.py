"""Free Lie algebra on X0, X1 over Q in the Lyndon-bracket basis.

A ``WordPoly`` is a ``Combination`` keyed by words (noncommutative monomials
in X0, X1); a ``LieElement`` is a ``Combination`` keyed by Lyndon words.
"""

import logging
from functools import lru_cache
from typing import Dict

from .errors import ConsistencyError, InvalidInputError, NotALieElementError
from .linear import CoefficientTable, Combination, accumulate
from .words_service import lyndon_words, standard_factorization, validate_lyndon, validate_word

logger = logging.getLogger(__name__)

WordPoly = Combination
LieElement = Combination


def lie_basis(w: str, coeff=1) -> LieElement:
    return Combination.basis(validate_lyndon(w), coeff)


def word_product(p: WordPoly, q: WordPoly) -> WordPoly:
    acc: Dict[str, object] = {}
    for u, a in p.items():
        for v, b in q.items():
            accumulate(acc, u + v, a * b)
    return Combination.from_accumulator(acc)


def commutator(p: WordPoly, q: WordPoly) -> WordPoly:
    return word_product(p, q) - word_product(q, p)


@lru_cache(maxsize=None)
def _expand_cached(w: str) -> WordPoly:
    if len(w) == 1:
        return Combination.basis(w)
    u, v = standard_factorization(w)
    return commutator(_expand_cached(u), _expand_cached(v))


def expand(w: str) -> WordPoly:
    """Word-algebra expansion of the Lyndon bracket ``[w]``."""
    return _expand_cached(validate_lyndon(w))


def expand_lie(e: LieElement) -> WordPoly:
    return e.linear_map(_expand_cached)


def rewrite_in_lyndon(p: WordPoly) -> LieElement:
    """Express a Lie polynomial in the Lyndon basis by triangular elimination.

    The lexicographically smallest word of ``expand(W)`` is ``W`` itself with
    coefficient one, so repeatedly cancelling the smallest support word
    terminates. A non-Lyndon smallest word means ``p`` is not a Lie element.
    """
    remainder = dict(p.items())
    out: Dict[str, object] = {}
    while remainder:
        w = min(remainder)
        if w == "":
            raise NotALieElementError("constant term in a Lie polynomial")
        validate_word(w)
        coeff = remainder[w]
        if not _is_lyndon_fast(w):
            raise NotALieElementError(f"leading word {w!r} (coefficient {coeff}) is not Lyndon")
        accumulate(out, w, coeff)
        for word, c in _expand_cached(w).items():
            accumulate(remainder, word, -coeff * c)
    return Combination.from_accumulator(out)


def _is_lyndon_fast(w: str) -> bool:
    return all(w < w[i:] for i in range(1, len(w)))


@lru_cache(maxsize=None)
def _bracket_basis(u: str, v: str) -> LieElement:
    if u == v:
        return Combination()
    if u > v:
        return -_bracket_basis(v, u)
    return rewrite_in_lyndon(commutator(_expand_cached(u), _expand_cached(v)))


def lie_bracket(f: LieElement, g: LieElement) -> LieElement:
    acc: Dict[str, object] = {}
    for u, a in f.items():
        for v, b in g.items():
            for w, c in _bracket_basis(u, v).items():
                accumulate(acc, w, a * b * c)
    return Combination.from_accumulator(acc)


@lru_cache(maxsize=None)
def alpha_table(max_weight: int) -> CoefficientTable:
    """``[[U],[V]] = sum_W alpha^W_{U,V} [W]`` for Lyndon ``U < V``."""
    if max_weight < 1:
        raise InvalidInputError(f"max_weight must be >= 1, got {max_weight}")
    table = CoefficientTable("alpha", max_weight)
    words = lyndon_words(max_weight)
    for u in words:
        for v in words:
            if u >= v or len(u) + len(v) > max_weight:
                continue
            for w, c in _bracket_basis(u, v).items():
                if c.denominator != 1:
                    raise ConsistencyError(f"non-integral alpha^{w}_{u},{v} = {c}")
                table.set(w, u, v, c)
    logger.debug("🔧 alpha table to weight %d: %d entries", max_weight, len(table))
    return table
