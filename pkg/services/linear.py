"""Exact rational linear combinations.

Every algebraic object in the package (word polynomials, Lie elements,
coLie elements, cdga elements, bar elements, tensors) is a finite map from
hashable basis keys to ``Fraction`` coefficients. ``Combination`` is that map
with zero coefficients never stored, so equality is literal equality.
"""

from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Tuple, Union

Scalar = Union[int, Fraction]


def to_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def format_fraction(value: Scalar) -> str:
    """Serialize as ``p/q``, or ``p`` when the denominator is one."""
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Combination:
    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Union[Dict[Hashable, Scalar], Iterable[Tuple[Hashable, Scalar]]]] = None):
        self._terms: Dict[Hashable, Fraction] = {}
        if terms is None:
            return
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            accumulate(self._terms, key, coeff)
        self._prune()

    @classmethod
    def basis(cls, key: Hashable, coeff: Scalar = 1) -> "Combination":
        return cls({key: coeff})

    @classmethod
    def from_accumulator(cls, acc: Dict[Hashable, Fraction]) -> "Combination":
        """Wrap a dict built with ``accumulate``; zero entries are dropped."""
        out = cls()
        out._terms = {k: v for k, v in acc.items() if v != 0}
        return out

    def _prune(self) -> None:
        self._terms = {k: v for k, v in self._terms.items() if v != 0}

    def __getitem__(self, key: Hashable) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __contains__(self, key: Hashable) -> bool:
        return key in self._terms

    def __iter__(self) -> Iterator[Hashable]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def sorted_items(self, key: Optional[Callable] = None) -> List[Tuple[Hashable, Fraction]]:
        if key is None:
            return sorted(self._terms.items())
        return sorted(self._terms.items(), key=lambda kv: key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Combination):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def __add__(self, other: "Combination") -> "Combination":
        acc = dict(self._terms)
        for key, coeff in other.items():
            accumulate(acc, key, coeff)
        return Combination.from_accumulator(acc)

    def __sub__(self, other: "Combination") -> "Combination":
        acc = dict(self._terms)
        for key, coeff in other.items():
            accumulate(acc, key, -coeff)
        return Combination.from_accumulator(acc)

    def __neg__(self) -> "Combination":
        out = Combination()
        out._terms = {k: -v for k, v in self._terms.items()}
        return out

    def __mul__(self, scalar: Scalar) -> "Combination":
        scalar = to_fraction(scalar)
        if scalar == 0:
            return Combination()
        out = Combination()
        out._terms = {k: v * scalar for k, v in self._terms.items()}
        return out

    __rmul__ = __mul__

    def linear_map(self, image: Callable[[Hashable], "Combination"]) -> "Combination":
        """Extend ``image`` (basis key -> Combination) linearly."""
        acc: Dict[Hashable, Fraction] = {}
        for key, coeff in self._terms.items():
            for k2, c2 in image(key).items():
                accumulate(acc, k2, coeff * c2)
        return Combination.from_accumulator(acc)

    def map_keys(self, rename: Callable[[Hashable], Optional[Tuple[Hashable, Scalar]]]) -> "Combination":
        """Apply ``rename(key) -> (new_key, sign)`` or ``None`` to drop the term."""
        acc: Dict[Hashable, Fraction] = {}
        for key, coeff in self._terms.items():
            renamed = rename(key)
            if renamed is None:
                continue
            new_key, factor = renamed
            accumulate(acc, new_key, coeff * factor)
        return Combination.from_accumulator(acc)

    def filter(self, keep: Callable[[Hashable], bool]) -> "Combination":
        out = Combination()
        out._terms = {k: v for k, v in self._terms.items() if keep(k)}
        return out

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{format_fraction(c)}*{k!r}" for k, c in self.sorted_items(key=repr)]
        return " + ".join(parts)


def accumulate(acc: Dict[Hashable, Fraction], key: Hashable, coeff: Scalar) -> None:
    if coeff == 0:
        return
    value = acc.get(key, Fraction(0)) + coeff
    if value == 0:
        acc.pop(key, None)
    else:
        acc[key] = value


class CoefficientTable:
    """Structure constants ``c^W_{U,V}`` stored sparsely, grouped by target ``W``."""

    def __init__(self, name: str, max_weight: int):
        self.name = name
        self.max_weight = max_weight
        self._by_target: Dict[str, Dict[Tuple[str, str], Fraction]] = {}

    def set(self, w: str, u: str, v: str, value: Scalar) -> None:
        value = to_fraction(value)
        if value == 0:
            return
        self._by_target.setdefault(w, {})[(u, v)] = value

    def value(self, w: str, u: str, v: str) -> Fraction:
        return self._by_target.get(w, {}).get((u, v), Fraction(0))

    def terms_for(self, w: str) -> List[Tuple[str, str, Fraction]]:
        return [(u, v, c) for (u, v), c in sorted(self._by_target.get(w, {}).items())]

    def entries(self) -> List[Tuple[str, str, str, Fraction]]:
        """All nonzero entries sorted by (|W|, W, U, V)."""
        out = []
        for w in sorted(self._by_target, key=lambda x: (len(x), x)):
            for (u, v), c in sorted(self._by_target[w].items()):
                out.append((w, u, v, c))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoefficientTable):
            return NotImplemented
        return self.entries() == other.entries()

    __hash__ = None

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_target.values())
