"""Bar construction of a cdga presentation.

A bar word is a tuple of slots, each slot a nonconstant monomial of the
presentation; a ``BarElement`` is a ``Combination`` of bar words (the empty
word is the unit). A slot of algebra degree ``d`` has desuspended degree
``d - 1``, and the bar degree of a word is the sum over its slots.
"""

import logging
import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, Sequence, Tuple

from .dgcore_service import CdgaElement, CdgaMorphism, CdgaPresentation, Monomial
from .errors import InvalidElementError
from .linear import Combination, accumulate

logger = logging.getLogger(__name__)

BarWord = Tuple[Monomial, ...]
BarElement = Combination
BarTensor = Combination  # keyed by (BarWord, BarWord)

EMPTY: BarWord = ()
HALF = Fraction(1, 2)


def compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Cut points splitting ``n`` consecutive slots into ``parts`` nonempty blocks."""
    for cuts in combinations(range(1, n), parts - 1):
        yield (0,) + cuts + (n,)


class BarConstruction:
    """Bar complex of one presentation with cached shuffles and projector values."""

    def __init__(self, presentation: CdgaPresentation):
        self.presentation = presentation
        self._shuffle_cache: Dict[Tuple[BarWord, BarWord], Dict[BarWord, Fraction]] = {}
        self._projector_cache: Dict[BarWord, Dict[BarWord, Fraction]] = {}
        self._differential_cache: Dict[BarWord, Dict[BarWord, Fraction]] = {}

    # -- degrees ---------------------------------------------------------

    def slot_degree(self, slot: Monomial) -> int:
        return self.presentation.monomial_degree(slot) - 1

    def bar_degree(self, word: BarWord) -> int:
        return sum(self.slot_degree(slot) for slot in word)

    def weight(self, word: BarWord) -> int:
        return sum(self.presentation.monomial_weight(slot) for slot in word)

    # -- construction ----------------------------------------------------

    def word(self, *slots: CdgaElement) -> BarElement:
        """Multilinear ``[a_1|...|a_n]`` from cdga elements."""
        acc: Dict[BarWord, Fraction] = {EMPTY: Fraction(1)}
        for slot in slots:
            nxt: Dict[BarWord, Fraction] = {}
            for mono, c in slot.items():
                if mono == ():
                    raise InvalidElementError("bar slots must lie in the augmentation ideal")
                for prefix, c0 in acc.items():
                    accumulate(nxt, prefix + (mono,), c0 * c)
            acc = nxt
        return Combination.from_accumulator(acc)

    def gens(self, *names: str) -> BarElement:
        """The bar word whose slots are single generators."""
        for name in names:
            self.presentation.generator(name)
        return Combination.basis(tuple((name,) for name in names))

    def validate(self, b: BarElement) -> None:
        for word in b:
            for slot in word:
                if slot == ():
                    raise InvalidElementError(f"constant slot in bar word {word}")
                for name in slot:
                    self.presentation.generator(name)

    # -- differential ----------------------------------------------------

    def _differential_word(self, word: BarWord) -> Dict[BarWord, Fraction]:
        cached = self._differential_cache.get(word)
        if cached is not None:
            return cached
        p = self.presentation
        acc: Dict[BarWord, Fraction] = {}
        eta = 0
        for i, slot in enumerate(word):
            # D1 = -sum (-1)^eta(i-1) [..|d a_i|..]
            sign = 1 if eta % 2 else -1
            for mono, c in p.differential(Combination.basis(slot)).items():
                if mono == ():
                    continue
                accumulate(acc, word[:i] + (mono,) + word[i + 1:], sign * c)
            eta += self.slot_degree(slot)
            if i + 1 < len(word):
                # D2 = -sum (-1)^eta(i) [..|a_i a_{i+1}|..]
                sign = 1 if eta % 2 else -1
                normal = p.normalize(slot + word[i + 1])
                if normal is not None:
                    accumulate(acc, word[:i] + (normal[1],) + word[i + 2:], sign * normal[0])
        self._differential_cache[word] = acc
        return acc

    def differential(self, b: BarElement) -> BarElement:
        acc: Dict[BarWord, Fraction] = {}
        for word, c in b.items():
            for w2, c2 in self._differential_word(word).items():
                accumulate(acc, w2, c * c2)
        return Combination.from_accumulator(acc)

    # -- coproduct -------------------------------------------------------

    def deconcatenation(self, b: BarElement, reduced: bool = False) -> BarTensor:
        acc: Dict[Tuple[BarWord, BarWord], Fraction] = {}
        for word, c in b.items():
            start, stop = (1, len(word)) if reduced else (0, len(word) + 1)
            for cut in range(start, stop):
                accumulate(acc, (word[:cut], word[cut:]), c)
        return Combination.from_accumulator(acc)

    def reduced_coproduct(self, b: BarElement) -> BarTensor:
        return self.deconcatenation(b, reduced=True)

    def twist(self, t: BarTensor) -> BarTensor:
        """``x (x) y -> (-1)^{|x||y|} y (x) x`` with bar degrees."""

        def swap(pair):
            x, y = pair
            sign = -1 if (self.bar_degree(x) * self.bar_degree(y)) % 2 else 1
            return (y, x), sign

        return t.map_keys(swap)

    # -- shuffle ---------------------------------------------------------

    def _shuffle_words(self, u: BarWord, v: BarWord) -> Dict[BarWord, Fraction]:
        if not u:
            return {v: Fraction(1)}
        if not v:
            return {u: Fraction(1)}
        key = (u, v)
        cached = self._shuffle_cache.get(key)
        if cached is not None:
            return cached
        acc: Dict[BarWord, Fraction] = {}
        for rest, c in self._shuffle_words(u[1:], v).items():
            accumulate(acc, (u[0],) + rest, c)
        # v[0] moves past every slot of u
        sign = -1 if (self.slot_degree(v[0]) * self.bar_degree(u)) % 2 else 1
        for rest, c in self._shuffle_words(u, v[1:]).items():
            accumulate(acc, (v[0],) + rest, sign * c)
        self._shuffle_cache[key] = acc
        return acc

    def shuffle(self, b1: BarElement, b2: BarElement) -> BarElement:
        acc: Dict[BarWord, Fraction] = {}
        for u, c1 in b1.items():
            for v, c2 in b2.items():
                for w, c in self._shuffle_words(u, v).items():
                    accumulate(acc, w, c1 * c2 * c)
        return Combination.from_accumulator(acc)

    def tensor_shuffle(self, t1: BarTensor, t2: BarTensor) -> BarTensor:
        """``(a (x) b)(c (x) d) = (-1)^{|b||c|} (a sh c) (x) (b sh d)``."""
        acc: Dict[Tuple[BarWord, BarWord], Fraction] = {}
        for (a, b), c1 in t1.items():
            for (c, d), c2 in t2.items():
                sign = -1 if (self.bar_degree(b) * self.bar_degree(c)) % 2 else 1
                for left, l_c in self._shuffle_words(a, c).items():
                    for right, r_c in self._shuffle_words(b, d).items():
                        accumulate(acc, (left, right), sign * c1 * c2 * l_c * r_c)
        return Combination.from_accumulator(acc)

    # -- Hain projector --------------------------------------------------

    def _projector_word(self, word: BarWord) -> Dict[BarWord, Fraction]:
        cached = self._projector_cache.get(word)
        if cached is not None:
            return cached
        n = len(word)
        acc: Dict[BarWord, Fraction] = {}
        for i in range(1, n + 1):
            scale = Fraction((-1) ** (i - 1), i)
            for cuts in compositions(n, i):
                product: Dict[BarWord, Fraction] = {EMPTY: Fraction(1)}
                for j in range(i):
                    block = word[cuts[j]:cuts[j + 1]]
                    nxt: Dict[BarWord, Fraction] = {}
                    for partial, c in product.items():
                        for w, c2 in self._shuffle_words(partial, block).items():
                            accumulate(nxt, w, c * c2)
                    product = nxt
                for w, c in product.items():
                    accumulate(acc, w, scale * c)
        self._projector_cache[word] = acc
        return acc

    def hain_projector(self, b: BarElement) -> BarElement:
        """``sum_i (-1)^{i-1}/i`` times the shuffle of the ``i``-fold reduced coproduct."""
        acc: Dict[BarWord, Fraction] = {}
        for word, c in b.items():
            if word == EMPTY:
                raise InvalidElementError("the projector is defined on the augmentation ideal only")
            for w2, c2 in self._projector_word(word).items():
                accumulate(acc, w2, c * c2)
        return Combination.from_accumulator(acc)

    def delta_Q(self, b: BarElement) -> BarTensor:
        """Cobracket on indecomposables: ``(p (x) p)(reduced - twisted reduced)/2``."""
        reduced = self.reduced_coproduct(b)
        antisym = (reduced - self.twist(reduced)) * HALF
        acc: Dict[Tuple[BarWord, BarWord], Fraction] = {}
        for (x, y), c in antisym.items():
            for x2, cx in self._projector_word(x).items():
                for y2, cy in self._projector_word(y).items():
                    accumulate(acc, (x2, y2), c * cx * cy)
        return Combination.from_accumulator(acc)

    # -- helpers ---------------------------------------------------------

    def tensor_degree_part(self, b: BarElement, n: int) -> BarElement:
        return b.filter(lambda word: len(word) == n)

    def pi_1(self, b: BarElement) -> BarElement:
        return self.tensor_degree_part(b, 1)

    def random_element(self, rng: random.Random, max_weight: int, max_length: int = 4, terms: int = 3,
                       product_slots: bool = True) -> BarElement:
        """Random combination of bar words with small integer coefficients.

        Slots are single generators or, with ``product_slots``, products of two
        distinct generators (algebra degree 2).
        """
        gens = [g for g in self.presentation.generators if g.weight <= max_weight]
        if not gens:
            return Combination()
        acc: Dict[BarWord, Fraction] = {}
        for _ in range(terms):
            length = rng.randint(1, max_length)
            word = []
            total = 0
            for _ in range(length):
                g = rng.choice(gens)
                slot: Monomial = (g.name,)
                if product_slots and rng.random() < 0.3:
                    h = rng.choice(gens)
                    normal = self.presentation.normalize((g.name, h.name))
                    if normal is not None:
                        slot = normal[1]
                if total + self.presentation.monomial_weight(slot) > max_weight:
                    break
                total += self.presentation.monomial_weight(slot)
                word.append(slot)
            if word:
                accumulate(acc, tuple(word), rng.randint(-3, 3))
        return Combination.from_accumulator(acc)


@lru_cache(maxsize=None)
def bar_for(presentation: CdgaPresentation) -> BarConstruction:
    return BarConstruction(presentation)


def bar_differential(b: BarElement, p: CdgaPresentation) -> BarElement:
    bar = bar_for(p)
    bar.validate(b)
    return bar.differential(b)


def deconcatenation(b: BarElement, p: CdgaPresentation, reduced: bool = False) -> BarTensor:
    return bar_for(p).deconcatenation(b, reduced=reduced)


def shuffle(b1: BarElement, b2: BarElement, p: CdgaPresentation) -> BarElement:
    return bar_for(p).shuffle(b1, b2)


def hain_projector(b: BarElement, p: CdgaPresentation) -> BarElement:
    return bar_for(p).hain_projector(b)


def delta_Q(b: BarElement, p: CdgaPresentation) -> BarTensor:
    return bar_for(p).delta_Q(b)


def apply_slotwise(b: BarElement, morphism: CdgaMorphism) -> BarElement:
    """Apply an algebra map to every slot; words with a zero slot drop out."""
    target = bar_for(morphism.target)
    acc: Dict[BarWord, Fraction] = {}
    for word, c in b.items():
        images = [morphism.apply(Combination.basis(slot)) for slot in word]
        if any(image.is_zero() for image in images):
            continue
        for w2, c2 in target.word(*images).items():
            accumulate(acc, w2, c * c2)
    return Combination.from_accumulator(acc)


def tensor_of_words(pairs: Sequence[Tuple[BarElement, BarElement, Fraction]]) -> BarTensor:
    """``sum c x (x) y`` for bar elements ``x, y``."""
    acc: Dict[Tuple[BarWord, BarWord], Fraction] = {}
    for x, y, c in pairs:
        for wx, cx in x.items():
            for wy, cy in y.items():
                accumulate(acc, (wx, wy), c * cx * cy)
    return Combination.from_accumulator(acc)
