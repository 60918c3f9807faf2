"""Special derivations, the Ihara bracket and the semidirect sum L[1;x].

``D_f`` is the derivation of the free Lie algebra with ``D_f(X0) = 0`` and
``D_f(X1) = [X1, f]``. The semidirect sum has two copies of Lie(X0, X1):
the x-copy with the free bracket and the 1-copy with the Ihara bracket,
the cross term being ``{g(1), f(x)} = D_g(f)(x)``.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict

from .errors import ConsistencyError, InvalidInputError
from .freelie_service import (
    LieElement,
    _expand_cached,
    alpha_table,
    lie_bracket,
    rewrite_in_lyndon,
    word_product,
)
from .linear import CoefficientTable, Combination, accumulate
from .words_service import lyndon_words

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SemidirectElement:
    x_part: LieElement = field(default_factory=Combination)
    one_part: LieElement = field(default_factory=Combination)

    def __add__(self, other: "SemidirectElement") -> "SemidirectElement":
        return SemidirectElement(self.x_part + other.x_part, self.one_part + other.one_part)

    def __sub__(self, other: "SemidirectElement") -> "SemidirectElement":
        return SemidirectElement(self.x_part - other.x_part, self.one_part - other.one_part)

    def __mul__(self, scalar) -> "SemidirectElement":
        return SemidirectElement(self.x_part * scalar, self.one_part * scalar)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.x_part.is_zero() and self.one_part.is_zero()


def x_element(f: LieElement) -> SemidirectElement:
    return SemidirectElement(x_part=f)


def one_element(f: LieElement) -> SemidirectElement:
    return SemidirectElement(one_part=f)


def _derive_word(word: str, image_of_x1) -> Dict[str, object]:
    """Apply the derivation sending X0 to 0 and X1 to ``image_of_x1`` to one word."""
    acc: Dict[str, object] = {}
    for i, letter in enumerate(word):
        if letter != "1":
            continue
        prefix, suffix = word[:i], word[i + 1:]
        for middle, c in image_of_x1.items():
            accumulate(acc, prefix + middle + suffix, c)
    return acc


@lru_cache(maxsize=None)
def _derivation_basis(f_word: str, g_word: str) -> LieElement:
    x1 = Combination.basis("1")
    f = _expand_cached(f_word)
    image = word_product(x1, f) - word_product(f, x1)
    acc: Dict[str, object] = {}
    for word, c in _expand_cached(g_word).items():
        for derived, c2 in _derive_word(word, image).items():
            accumulate(acc, derived, c * c2)
    return rewrite_in_lyndon(Combination.from_accumulator(acc))


def special_derivation(f: LieElement, g: LieElement) -> LieElement:
    """``D_f(g)``, bilinear in ``f`` and ``g``."""
    acc: Dict[str, object] = {}
    for u, a in f.items():
        for v, b in g.items():
            for w, c in _derivation_basis(u, v).items():
                accumulate(acc, w, a * b * c)
    return Combination.from_accumulator(acc)


def ihara_bracket(f: LieElement, g: LieElement) -> LieElement:
    return lie_bracket(f, g) + special_derivation(f, g) - special_derivation(g, f)


def semidirect_bracket(a: SemidirectElement, b: SemidirectElement) -> SemidirectElement:
    x_part = (
        lie_bracket(a.x_part, b.x_part)
        - special_derivation(b.one_part, a.x_part)
        + special_derivation(a.one_part, b.x_part)
    )
    return SemidirectElement(x_part=x_part, one_part=ihara_bracket(a.one_part, b.one_part))


@dataclass(frozen=True)
class BetaGammaTables:
    beta: CoefficientTable
    gamma: CoefficientTable


@lru_cache(maxsize=None)
def beta_gamma_tables(max_weight: int) -> BetaGammaTables:
    """beta from ``{[U](x), [V](1)} = -D_[V]([U])`` (all ordered pairs), gamma from ``{[U](1), [V](1)}``."""
    if max_weight < 1:
        raise InvalidInputError(f"max_weight must be >= 1, got {max_weight}")
    beta = CoefficientTable("beta", max_weight)
    gamma = CoefficientTable("gamma", max_weight)
    words = lyndon_words(max_weight)
    for u in words:
        for v in words:
            if len(u) + len(v) > max_weight:
                continue
            cross = semidirect_bracket(x_element(Combination.basis(u)), one_element(Combination.basis(v)))
            for w, c in cross.x_part.items():
                _require_integral("beta", w, u, v, c)
                beta.set(w, u, v, c)
            if u < v:
                for w, c in ihara_bracket(Combination.basis(u), Combination.basis(v)).items():
                    _require_integral("gamma", w, u, v, c)
                    gamma.set(w, u, v, c)
    logger.debug("🔧 beta/gamma tables to weight %d: %d + %d entries", max_weight, len(beta), len(gamma))
    return BetaGammaTables(beta=beta, gamma=gamma)


def _require_integral(name: str, w: str, u: str, v: str, c) -> None:
    if c.denominator != 1:
        raise ConsistencyError(f"non-integral {name}^{w}_{u},{v} = {c}")


@dataclass(frozen=True)
class StructureTables:
    alpha: CoefficientTable
    beta: CoefficientTable
    gamma: CoefficientTable


@lru_cache(maxsize=None)
def structure_tables(max_weight: int) -> StructureTables:
    bg = beta_gamma_tables(max_weight)
    return StructureTables(alpha=alpha_table(max_weight), beta=bg.beta, gamma=bg.gamma)
